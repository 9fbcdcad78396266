#include "doctest.h"
#include "superint/orthopoly.hpp"
#include "superint/rosenmorse.hpp"

using namespace si;

namespace {
const Frame P = Frame::polar();
RatFun rf(const MPoly& p) { return RatFun(p); }
RMParams point() { return RMParams::at(Rational(5, 2), Rational(7, 2), Rational(3, 2)); }
}  // namespace

TEST_CASE("seed factorization constant") {
  RosenMorseSystem s = build_rosen_morse(1, RMParams::symbolic());
  MPoly a = s.p.alpha, b = s.p.beta;
  CHECK(s.cm == rf((a - b - MPoly(1)).pow(2)));
  CHECK(s.L - s.Adag * s.A == DiffOp(P, s.cm));
  CHECK((s.A * s.L - s.L2 * s.A).is_zero());
  CHECK((s.Adag * s.L2 - s.L * s.Adag).is_zero());
  for (int m : {2, 3}) {
    RosenMorseSystem t = build_rosen_morse(m, point());
    Rational c = 2 * m - Rational(5, 2) + Rational(7, 2) - 1;
    CHECK(t.cm == RatFun(c * c));
  }
  CHECK_THROWS_AS(build_rosen_morse(0, point()), std::invalid_argument);
}

TEST_CASE("A is anti-adjoint to A^dagger in theta") {
  RosenMorseSystem s = build_rosen_morse(1, point());
  // d theta = dx / (2 s): the x-adjoint with weight 1/s
  RatFun rho = RatFun(MPoly::gen(var::s)).inv();
  CHECK(s.A.adjoint(rho) == s.Adag);
  CHECK(s.L2.adjoint(rho) == s.L2);
}

TEST_CASE("exceptional eigenfunctions") {
  for (int m : {1, 2}) {
    RosenMorseSystem s = build_rosen_morse(m, point());
    for (int n = 0; n <= 4; ++n) {
      WaveFunction h = psi_hat(s, n);
      auto e = action_coefficient(s.L2, h, h);
      REQUIRE(e);
      CHECK(*e == rf(lambda_n(s, n).pow(2)));
      auto k = proportionality(s.A.apply(psi(s, n)), h);
      REQUIRE(k);
      CHECK(*k == RatFun(1));
      CHECK(exceptional_jacobi(m, n, s.p.alpha, s.p.beta).degree() == n + m);
    }
  }
}

TEST_CASE("energies and radial ladder") {
  RosenMorseSystem s = build_rosen_morse(1, point());
  for (int k = 0; k <= 2; ++k)
    for (int n = 0; n <= 2; ++n) {
      WaveFunction f = phi(s, k, n);
      auto e = action_coefficient(s.H, f, f);
      REQUIRE(e);
      CHECK(*e == rf(energy(s, k, n)));
    }
  MPoly L = lambda_n(s, 1);
  RatFun E = rf(energy(s, 2, 1));
  auto down = action_coefficient(tower_C(rf(L), E), radial(s, 2, L), radial(s, 1, L + MPoly(2)));
  REQUIRE(down);
  CHECK(*down == RatFun(3));  // 2 omega
  auto up = action_coefficient(tower_C(-rf(L), E), radial(s, 2, L), radial(s, 3, L - MPoly(2)));
  REQUIRE(up);
  CHECK(*up == rf(s.p.omega * (L + MPoly(2)) * MPoly(6)));
}

TEST_CASE("angular ladder on classical states") {
  RosenMorseSystem s = build_rosen_morse(1, RMParams::symbolic());
  MPoly a = s.p.alpha, b = s.p.beta;
  for (int n = 1; n <= 3; ++n) {
    RatFun L = rf(lambda_n(s, n));
    auto d = action_coefficient(tower_b(s, L), psi(s, n), psi(s, n - 1));
    REQUIRE(d);
    CHECK(*d == rf((b + MPoly(n - 1)) * (a + MPoly(n + 1)) * Rational(-4)));
    auto u = action_coefficient(tower_b(s, -L), psi(s, n), psi(s, n + 1));
    REQUIRE(u);
    CHECK(*u == rf((a + b + MPoly(n + 1)) * MPoly(-4 * (n + 1))));
  }
}

TEST_CASE("pole removal term sign") {
  RosenMorseSystem s = build_rosen_morse(1, point());
  DiffOp D = pole_term(s), Dp = printed_pole_term(s);
  CHECK(D == -Dp);
  IntegralL4 good = build_L4(s, D);
  CHECK(good.pole_free);
  CHECK(good.odd);
  CHECK(good.L4.order() == 4);
  IntegralL4 bad = build_L4(s, Dp);
  CHECK_FALSE(bad.pole_free);
}

TEST_CASE("fourth-order integral at a rational point") {
  for (int m : {1, 2}) {
    RosenMorseSystem s = build_rosen_morse(m, point());
    IntegralL4 I = build_L4(s, pole_term(s));
    REQUIRE(I.odd);
    CHECK(commutator(s.H, I.L4).is_zero());
    CHECK(commutator(s.L2, I.L4) == I.L5);
    WaveFunction f = phi(s, 1, 1), g = I.L4.apply(f);
    CHECK((s.H.apply(g) - g * rf(energy(s, 1, 1))).is_zero());
  }
}

TEST_CASE("report modes agree on status") {
  RMOptions o;
  o.mode = Mode::Basis;
  o.nmax = 2;
  Report r = verify_rosen_morse(1, o);
  CHECK(r.ok());
  for (const char* n : {"intertwining", "eigenfunctions", "energies", "ladder_C", "[H,L4]=0", "L5"}) {
    const Check* c = r.find(std::string("rosen_morse[m=1].") + n);
    REQUIRE(c);
    CHECK(c->status == Status::Verified);
  }
  CHECK(r.find("rosen_morse[m=1].pole_removal")->status == Status::Mismatch);
  o.mode = Mode::Sampled;
  o.spec.trials = 2;
  o.with_L4 = false;
  Report q = verify_rosen_morse(1, o);
  CHECK(q.ok());
  CHECK(q.dump() == verify_rosen_morse(1, o).dump());
}

TEST_CASE("seed independence of the leading symbol") {
  Report r = verify_seed_independence({1, 2, 3}, point());
  CHECK(r.ok());
}
