#include <random>

#include "doctest.h"
#include "superint/orthopoly.hpp"
#include "superint/painleve.hpp"

using namespace si;

namespace {
RatFun X() { return RatFun::gen(var::x); }
RatFun log_deriv(const MPoly& h) { return RatFun::frac(h.diff(var::x), h); }
}  // namespace

TEST_CASE("PIV residual on known solutions") {
  RatFun z = RatFun::gen(var::z);
  CHECK(piv_residual(RatFun(-2) * z, RatFun(0), RatFun(-2)).is_zero());
  CHECK(piv_residual(RatFun(-2) * z, RatFun(0), RatFun(-1)).is_zero() == false);
  // -2z/3 is the other linear solution
  CHECK(piv_residual(RatFun(rat(-2, 3)) * z, RatFun(0), RatFun(rat(-2, 9))).is_zero());
}

TEST_CASE("PIV lattice fit") {
  PIVCandidate lin = piv_fit(RatFun(-2) * X());
  REQUIRE(lin.consistent);
  CHECK(lin.a == 0);
  CHECK(lin.b == -2);
  PIVCandidate id = piv_fit(X());
  REQUIRE(id.consistent);
  CHECK(id.mu == 1);
  CHECK(id.lambda == -2);
  CHECK(id.b == -2);
  PIVCandidate bad = piv_fit(X() * X() + RatFun(1));
  CHECK_FALSE(bad.consistent);
  CHECK(bad.tried == 36);
}

TEST_CASE("pseudo-Hermite log derivatives") {
  PIVCandidate h2 = piv_fit(log_deriv(pseudo_hermite(2)));
  REQUIRE(h2.consistent);
  CHECK(h2.a == 3);
  CHECK(h2.b == -8);
  PIVCandidate h4 = piv_fit(log_deriv(pseudo_hermite(4)));
  REQUIRE(h4.consistent);
  CHECK(h4.a == 5);
  CHECK(h4.b == -32);
  CHECK(verify_piv().ok());
}

TEST_CASE("T integrates the angular potential") {
  for (int m : {1, 2}) {
    CHECK(build_T_W(m, rat(5, 2), rat(7, 2)).T_ok);
    CHECK(build_T_W(m, rat(1, 3), rat(9, 4), TNorm::Quarter).T_ok);
  }
}

TEST_CASE("SD-I.a constants at the fixed point") {
  SD1aInstance I = sd1a_fit(build_T_W(1, rat(5, 2), rat(7, 2)));
  REQUIRE(I.solved);
  CHECK(I.ct_nonzero_excluded);
  CHECK(I.notes.empty());
  CHECK(I.constants["K"] == rat(23, 2));
  CHECK(I.constants["K"] == printed_K0(rat(5, 2), rat(7, 2)));
  CHECK(I.constants["c_T"] == 0);
  CHECK(I.constants["q7"] == rat(-47, 16));
  CHECK(I.constants["q8"] == rat(-451, 64));
  CHECK(I.constants["q9"] == rat(9, 8));
  CHECK(I.constants["q10"] == rat(-693, 256));
  // the solved W is a plain function of y
  CHECK(sd1a_residual(I.W_y, {{var::q7, rat(-47, 16)}, {var::q8, rat(-451, 64)}, {var::q9, rat(9, 8)},
                              {var::q10, rat(-693, 256)}})
            .is_zero());
  CHECK_FALSE(sd1a_residual(I.W_y, {{var::q7, rat(-47, 16)}, {var::q8, rat(-451, 64)}, {var::q9, rat(9, 8)},
                                    {var::q10, rat(-692, 256)}})
                  .is_zero());
}

TEST_CASE("SD-I.a at higher seed degree") {
  SD1aInstance I2 = sd1a_fit(build_T_W(2, rat(5, 2), rat(7, 2)));
  REQUIRE(I2.solved);
  CHECK(I2.constants["K"] == rat(35, 2));
  SD1aInstance I3 = sd1a_fit(build_T_W(3, rat(5, 2), rat(7, 2)));
  REQUIRE(I3.solved);
  CHECK(I3.constants["K"] == rat(55, 2));
  for (int m : {1, 2, 3}) {
    SD1aInstance J = sd1a_fit(build_T_W(m, rat(-5, 7), rat(13, 2)));
    REQUIRE(J.solved);
    CHECK(J.constants["K"] == sd1a_K(m, rat(-5, 7), rat(13, 2)));
  }
}

TEST_CASE("quarter normalisation has no solution") {
  SD1aInstance Q = sd1a_fit(build_T_W(1, rat(5, 2), rat(7, 2), TNorm::Quarter));
  CHECK_FALSE(Q.solved);
}

TEST_CASE("SD-I.a report") {
  SampleSpec spec;
  spec.trials = 3;
  Report r = verify_sd1a({1, 2}, spec);
  CHECK(r.ok());
  CHECK(r.find("painleve.sd1a[m=1].fit")->status == Status::Verified);
  CHECK(r.find("painleve.sd1a[m=2].fit")->status == Status::Mismatch);
  CHECK(r.find("painleve.sd1a[m=1].fit")->constants["solutions"].size() == 3);
}

TEST_CASE("property: lattice rescalings of a solution are found again") {
  // if w solves PIV then g(x) = w(x / lambda) / mu is recovered at (mu, lambda)
  const Rational lattice[] = {1, -1, 2, -2, rat(1, 2), rat(-1, 2)};
  RatFun w = log_deriv(pseudo_hermite(2));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    Rational mu = lattice[rng() % 6], la = lattice[rng() % 6];
    RatFun g = RatFun(1 / mu) * w.subs(var::x, RatFun(MPoly::gen(var::x) * (1 / la)));
    PIVCandidate f = piv_fit(g);
    REQUIRE(f.consistent);
    RatFun back = RatFun(f.mu) * g.subs(var::x, RatFun(MPoly::gen(var::z) * f.lambda));
    CHECK(piv_residual(back, RatFun(f.a), RatFun(f.b)).is_zero());
  }
}

TEST_CASE("property: SD-I.a solves at random regular parameters") {
  std::mt19937_64 rng(17);
  int done = 0;
  while (done < 4) {
    Rational a = Rational(static_cast<long>(rng() % 40) + 1) / Rational(static_cast<long>(rng() % 7) + 1);
    Rational b = Rational(static_cast<long>(rng() % 40) + 1) / Rational(static_cast<long>(rng() % 7) + 1);
    a.canonicalize();
    b.canonicalize();
    int m = 1 + done % 2;
    if (!seed_regular(m, a, b)) continue;
    SD1aInstance I = sd1a_fit(build_T_W(m, a, b));
    REQUIRE(I.solved);
    CHECK(I.ct_nonzero_excluded);
    CHECK(I.constants["K"] == sd1a_K(m, a, b));
    ++done;
  }
}
