#include <random>

#include "doctest.h"
#include "superint/ratfun.hpp"
#include "superint/upoly.hpp"

using namespace si;

namespace {
MPoly X() { return MPoly::gen(var::x); }
MPoly S() { return MPoly::gen(var::s); }
MPoly A() { return MPoly::gen(var::alpha); }

// random polynomial in x, s, alpha with small coefficients
MPoly random_poly(std::mt19937_64& rng, int terms = 4, int maxdeg = 3) {
  std::uniform_int_distribution<int> c(-9, 9), d(0, maxdeg), sb(0, 1);
  MPoly p;
  for (int i = 0; i < terms; ++i)
    p += MPoly(Rational(c(rng), 1 + d(rng))) * X().pow(d(rng)) * S().pow(sb(rng)) * A().pow(d(rng) % 2);
  return p;
}
}  // namespace

TEST_CASE("rational basics") {
  Rational q = parse_rational("6/4");
  CHECK(q == rat(3, 2));
  CHECK(q.get_den() == 2);
  CHECK(parse_rational("0/5") == 0);
  CHECK(parse_rational("0/5").get_den() == 1);
  CHECK(parse_rational("2.5") == rat(5, 2));
  CHECK(binomial(6, 2) == 15);
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (a != 0) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("reduce_s") {
  CHECK(reduce_s(S().pow(2)) == MPoly(1) - X().pow(2));
  CHECK(reduce_s(S() * S() * S()) == S() * (MPoly(1) - X().pow(2)));
  CHECK(X() * S() * S() + S() == X() - X().pow(3) + S());
}

TEST_CASE("reduce_s is idempotent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    MPoly p = random_poly(rng) * random_poly(rng);
    CHECK(p.deg(var::s) <= 1);
    CHECK(reduce_s(reduce_s(p)) == reduce_s(p));
  }
}

TEST_CASE("ratfun_equal examples") {
  RatFun f = RatFun::frac(X().pow(2) - MPoly(1), X() - MPoly(1));
  CHECK(ratfun_equal(f, RatFun(X() + MPoly(1))));
  CHECK(f.is_poly());
  CHECK(ratfun_equal(RatFun(S() * S()), RatFun(MPoly(1) - X().pow(2))));
  // (1-x)/s is cot(theta) under x = -cos 2theta, s = sin 2theta
  RatFun cot = RatFun::frac(MPoly(1) - X(), S());
  for (double th : {1.0 / 3, 1.0 / 7}) {
    // evaluate at a nearby rational point of the circle: t = tan(theta)
    Rational t(th);
    auto [xv, sv] = circle_point(t);
    // circle_point(t) gives x = cos 2phi, s = sin 2phi with tan phi = t; our x is -cos 2theta
    Rational val = cot.eval({{var::x, -xv}, {var::s, sv}});
    double expect = 1.0 / t.get_d();
    CHECK(std::abs(val.get_d() - expect) < 1e-12);
  }
}

TEST_CASE("ratfun symbolic vs sampled agree on random inputs") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    if (b.is_zero() || b.has_var(var::s) || c.is_zero() || c.has_var(var::s)) continue;
    RatFun f = RatFun(a) / RatFun(b) + RatFun(c) / RatFun(b);
    RatFun g = RatFun(a + c) / RatFun(b);
    CHECK(ratfun_equal(f, g));
    CHECK(ratfun_equal(f, g, Mode::Sampled));
    RatFun h = g + RatFun(1);
    CHECK_FALSE(ratfun_equal(f, h));
    CHECK_FALSE(ratfun_equal(f, h, Mode::Sampled));
  }
}

TEST_CASE("ratfun equality is an equivalence relation") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    MPoly a = random_poly(rng), b = random_poly(rng, 3, 2);
    if (b.is_zero() || b.has_var(var::s)) continue;
    RatFun f = RatFun(a) / RatFun(b);
    RatFun g = RatFun(a * b) / RatFun(b * b);
    RatFun h = RatFun(a * (b + MPoly(0))) / RatFun(b).pow(2) * RatFun(b);
    CHECK(ratfun_equal(f, f));
    CHECK(ratfun_equal(f, g) == ratfun_equal(g, f));
    CHECK((!ratfun_equal(f, g) || !ratfun_equal(g, h) || ratfun_equal(f, h)));
  }
}

TEST_CASE("univariate fractions are reduced") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int i = 0; i < 30; ++i) {
    MPoly g = X() - MPoly(c(rng)), p = X().pow(2) + MPoly(c(rng)) * X() + MPoly(1), q = X().pow(3) + MPoly(c(rng));
    RatFun f = RatFun::frac(p * g, q * g);
    UPoly un = UPoly::from_mpoly(f.num(), var::x), ud = UPoly::from_mpoly(f.den_poly(), var::x);
    CHECK(gcd(un, ud).deg() == 0);
  }
}

TEST_CASE("derivative with s") {
  // d/dx s = -x/s
  RatFun ds = RatFun(S()).diff(var::x);
  CHECK(ratfun_equal(ds * RatFun(S()), RatFun(-X())));
  RatFun f = RatFun::frac(X(), X() + MPoly(2));
  CHECK(ratfun_equal(f.diff(var::x), RatFun::frac(MPoly(2), (X() + MPoly(2)).pow(2))));
}

TEST_CASE("sturm and rational roots") {
  UPoly p = UPoly::from_mpoly((X() - MPoly(Rational(1, 3))) * (X() + MPoly(2)) * (X().pow(2) + MPoly(1)), var::x);
  CHECK(sturm_count(p, -10, 10) == 2);
  CHECK(roots_in_closed(p, Rational(1, 3), 1) == 1);
  auto rr = rational_roots(p);
  REQUIRE(rr.size() == 2);
  CHECK(rr[0] == -2);
  CHECK(rr[1] == Rational(1, 3));
  UPoly q = UPoly::from_mpoly(X().pow(2) - MPoly(2), var::x);
  CHECK(rational_roots(q).empty());
  CHECK(simplest_between(rat(31, 100), rat(34, 100)) == rat(1, 3));
}
