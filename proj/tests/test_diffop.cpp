#include <random>

#include "doctest.h"
#include "superint/diffop.hpp"
#include "superint/orthopoly.hpp"

using namespace si;

namespace {
const Frame C = Frame::cartesian();
MPoly X() { return MPoly::gen(var::x); }
MPoly Y() { return MPoly::gen(var::y); }
DiffOp dx() { return DiffOp::d2(C); }
DiffOp dy() { return DiffOp::d1(C); }
DiffOp mul(const MPoly& p) { return DiffOp(C, RatFun(p)); }

DiffOp random_op(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4), d(0, 2);
  DiffOp p(C);
  for (int i = 0; i < 3; ++i) {
    MPoly coef = MPoly(c(rng)) * X().pow(d(rng)) + MPoly(c(rng)) * Y().pow(d(rng));
    RatFun rc = (i == 0) ? RatFun::frac(coef, X() + MPoly(3)) : RatFun(coef);
    p += rc * DiffOp::d(C, d(rng) % 2, d(rng));
  }
  return p;
}
}  // namespace

TEST_CASE("Leibniz and Weyl") {
  CHECK(dx() * mul(X()) == mul(X()) * dx() + mul(1));
  CHECK(commutator(dx(), mul(X())) == mul(1));
  DiffOp a = dx() + mul(X()), ad = -dx() + mul(X());
  CHECK(commutator(a, ad) == mul(2));
}

TEST_CASE("composition is associative, commutator obeys Jacobi") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 8; ++i) {
    DiffOp p = random_op(rng), q = random_op(rng), r = random_op(rng);
    CHECK(p * (q * r) == (p * q) * r);
    DiffOp jac = commutator(p, commutator(q, r)) + commutator(q, commutator(r, p)) + commutator(r, commutator(p, q));
    CHECK(jac.is_zero());
    CHECK(commutator(p, q) == -commutator(q, p));
  }
}

TEST_CASE("apply agrees with composition") {
  std::mt19937_64 rng(23);
  Prefactor pre;
  pre.exp(X().pow(2) * Rational(-1, 2)).pow(X() + MPoly(3), MPoly(Rational(1, 3)));
  WaveFunction f(pre, RatFun(X().pow(3) + Y()));
  for (int i = 0; i < 6; ++i) {
    DiffOp p = random_op(rng), q = random_op(rng);
    WaveFunction lhs = (p * q).apply(f), rhs = p.apply(q.apply(f));
    CHECK(ratfun_equal(lhs.core(), rhs.core()));
  }
}

TEST_CASE("principal symbols multiply") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 6; ++i) {
    DiffOp p = random_op(rng), q = random_op(rng);
    CHECK(principal_symbol(p * q) == principal_symbol(p) * principal_symbol(q));
  }
  DiffOp p = mul(X()) * DiffOp::d(C, 0, 2) + dx();
  Symbol s = principal_symbol(p);
  CHECK(s.order == 2);
  CHECK(s.c.size() == 1);
  CHECK(s.c.at({0, 2}) == RatFun(X()));
}

TEST_CASE("lowering a Hermite function") {
  Prefactor g;
  g.exp(X().pow(2) * Rational(-1, 2));
  DiffOp a = dx() + mul(X());
  WaveFunction psi3(g, RatFun(hermite(3))), psi2(g, RatFun(hermite(2)));
  auto k = proportionality(a.apply(psi3), psi2);
  REQUIRE(k);
  CHECK(*k == RatFun(6));
}

TEST_CASE("flat adjoint") {
  DiffOp a = dx() + mul(X()), ad = -dx() + mul(X());
  CHECK(a.adjoint() == ad);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 4; ++i) {
    DiffOp p = random_op(rng);
    CHECK(p.adjoint().adjoint() == p);
  }
}

TEST_CASE("rebase handles the half-integer pairing") {
  Prefactor p1, p2;
  p1.pow(MPoly(1) - X(), MPoly(Rational(1, 2))).pow(MPoly(1) + X(), MPoly(Rational(1, 2)));
  p2.pow(MPoly(1) - X(), MPoly(0)).pow(MPoly(1) + X(), MPoly(0));
  WaveFunction f(p1, RatFun(1));
  WaveFunction g = f.rebase(p2);
  CHECK(g.core() == RatFun(MPoly::gen(var::s)));
  Prefactor p3;
  p3.pow(MPoly(1) - X(), MPoly(Rational(1, 3)));
  CHECK_THROWS_AS(f.rebase(p3), NonClosure);
}
