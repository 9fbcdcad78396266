#include "doctest.h"
#include "superint/oscillator.hpp"
#include "superint/orthopoly.hpp"

using namespace si;

namespace {
const Frame C = Frame::cartesian();
MPoly X() { return MPoly::gen(var::x); }
MPoly Y() { return MPoly::gen(var::y); }
}  // namespace

TEST_CASE("extended oscillator, k=2") {
  OscillatorSystem s = build_oscillator(2);
  CHECK(s.shift == -5);
  CHECK(s.weyl_shift == -1);
  CHECK((s.A * s.Hx - s.H2 * s.A).is_zero());
  CHECK((s.Adag * s.H2 - s.Hx * s.Adag).is_zero());
  CHECK(commutator(s.H2, s.bdag) == RatFun(2) * s.bdag);
  CHECK(commutator(s.H2, s.b) == RatFun(-2) * s.b);
  // rational part of the potential has denominator (4x^2+2)^2
  RatFun V = s.H2.coeff(0, 2) == RatFun(-1) ? s.H2.coeff(0, 0) : RatFun();
  RatFun rational_part = V - RatFun(X().pow(2));
  MPoly d = rational_part.den_poly();
  CHECK(d.deg(var::x) == 4);
  CHECK_THROWS_AS(build_oscillator(3), std::invalid_argument);
}

TEST_CASE("integrals of the 2D extension, k=2") {
  OscillatorSystem s = build_oscillator(2);
  CHECK(commutator(s.H2d, s.L1).is_zero());
  CHECK(commutator(s.H2d, s.L2).is_zero());
  CHECK(s.L1.order() == 3);
  CHECK(s.L2.order() == 4);
  CHECK(s.L1.adjoint() == -s.L1);
  CHECK(s.L2.adjoint() == s.L2);
}

TEST_CASE("non-exceptional baseline integrals") {
  DiffOp dx = DiffOp::d2(C), dy = DiffOp::d1(C);
  DiffOp ax = dx + DiffOp(C, X()), axd = -dx + DiffOp(C, X());
  DiffOp ay = dy + DiffOp(C, Y()), ayd = -dy + DiffOp(C, Y());
  RatFun h(Rational(1, 2));
  DiffOp L1 = h * (axd * ay - ayd * ax), L2 = h * (axd * ay + ayd * ax);
  CHECK(L1 == DiffOp(C, X()) * dy - DiffOp(C, Y()) * dx);
  CHECK(L2 == -DiffOp::d(C, 1, 1) + DiffOp(C, X() * Y()));
}

TEST_CASE("exceptional Hermite states") {
  for (int k : {2, 4}) {
    OscillatorSystem s = build_oscillator(k);
    Prefactor pre;
    pre.exp(X().pow(2) * Rational(-1, 2));
    for (int n : {0, k + 1, k + 2, k + 3}) {
      WaveFunction psi(pre, RatFun::frac(exceptional_hermite_state(k, n).poly, pseudo_hermite(k)));
      CHECK(s.H2.apply(psi).core() == RatFun(2 * n + 1 + s.shift - 1) * psi.core());
    }
    CHECK(exceptional_hermite_state(k, k + 2).degree() == k + 2);
    CHECK_THROWS_AS(exceptional_hermite_state(k, k), GapError);
  }
}

TEST_CASE("Gravel form") {
  OscillatorSystem s = build_oscillator(2);
  GravelMatch m = gravel_match(s);
  CHECK(m.g == RatFun::frac(X() * Rational(8), X().pow(2) * Rational(4) + MPoly(2)));
  REQUIRE(m.constant);
  CHECK(m.c == -6);
  CHECK(m.g.subs({{var::x, Rational(0)}}) == RatFun(0));
}

TEST_CASE("oscillator report") {
  Report r = verify_oscillator(2);
  CHECK(r.ok());
  CHECK(r.checks.size() >= 5);
  Report w = verify_weyl();
  CHECK(w.count(Status::Verified) == 1);
}
