#include "doctest.h"
#include "superint/diffop.hpp"
#include "superint/orthopoly.hpp"
#include "superint/upoly.hpp"

using namespace si;

namespace {
MPoly X() { return MPoly::gen(var::x); }
MPoly Al() { return MPoly::gen(var::alpha); }
MPoly Be() { return MPoly::gen(var::beta); }
}  // namespace

TEST_CASE("classical examples") {
  CHECK(hermite(2) == X().pow(2) * Rational(4) - MPoly(2));
  CHECK(pseudo_hermite(2) == X().pow(2) * Rational(4) + MPoly(2));
  CHECK(jacobi(1, Al(), Be()) == ((Al() + Be() + MPoly(2)) * X() + Al() - Be()) * Rational(1, 2));
}

TEST_CASE("recurrence agrees with hypergeometric forms") {
  for (int n = 0; n <= 12; ++n) CHECK(hermite(n) == hermite_2f0(n));
  for (int n = 0; n <= 6; ++n) CHECK(jacobi(n, Al(), Be()) == jacobi_2f1(n, Al(), Be()));
  // degenerate numeric parameters route through the explicit sum
  CHECK(jacobi(3, MPoly(-2), MPoly(0)) == jacobi_2f1(3, MPoly(-2), MPoly(0)));
}

TEST_CASE("three-term recurrences and derivative identities") {
  for (int n = 1; n < 12; ++n) {
    CHECK(hermite(n + 1) == X() * hermite(n) * Rational(2) - hermite(n - 1) * Rational(2 * n));
    CHECK(hermite(n).diff(var::x) == hermite(n - 1) * Rational(2 * n));
  }
  MPoly a = Al(), y = X();
  for (int n = 1; n < 10; ++n) {
    MPoly lhs = laguerre(n + 1, a, y) * Rational(n + 1);
    MPoly rhs = (MPoly(2 * n + 1) + a - y) * laguerre(n, a, y) - (MPoly(n) + a) * laguerre(n - 1, a, y);
    CHECK(lhs == rhs);
  }
  // Jacobi ODE: (1-x^2)P'' + (b-a-(a+b+2)x)P' + n(n+a+b+1)P = 0
  MPoly b = Be();
  for (int n = 0; n <= 5; ++n) {
    MPoly p = jacobi(n, a, b);
    MPoly ode = (MPoly(1) - X().pow(2)) * p.diff(var::x).diff(var::x) +
                (b - a - (a + b + MPoly(2)) * X()) * p.diff(var::x) + MPoly(n) * (MPoly(n + 1) + a + b) * p;
    CHECK(ode.is_zero());
  }
}

TEST_CASE("pseudo-Hermite seeds have no real zeros for even k") {
  for (int k = 2; k <= 8; k += 2) {
    UPoly u = UPoly::from_mpoly(pseudo_hermite(k), var::x);
    CHECK(sturm_count(u, -1000, 1000) == 0);
  }
}

TEST_CASE("wronskian examples") {
  RatFun x(X());
  CHECK(ratfun_equal(wronskian(x, RatFun(X().pow(2))), RatFun(-X().pow(2))));
  CHECK(wronskian(x, x).is_zero());
  MPoly p1 = jacobi(1, -Al() - MPoly(1), Be() - MPoly(1));
  CHECK(wronskian(RatFun(p1), RatFun(1)) == RatFun((Be() - Al()) * Rational(1, 2)));
}

TEST_CASE("exceptional hermite examples") {
  CHECK(exceptional_hermite(2, 0).poly == MPoly(1));
  CHECK(exceptional_hermite(2, 2).poly == X().pow(2) * Rational(-20) - MPoly(2));
  CHECK(exceptional_hermite(2, 3).poly == X().pow(3) * Rational(-40) + X() * Rational(12));
  CHECK_THROWS_AS(exceptional_hermite(2, 1), GapError);
  CHECK_THROWS(exceptional_hermite(3, 4));
}

TEST_CASE("exceptional jacobi degree is n+m") {
  CHECK(exceptional_jacobi(1, 0, Al(), Be()).degree() == 1);
  CHECK(exceptional_jacobi(2, 3, Al(), Be()).degree() == 5);
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(exceptional_jacobi(m, n, Al(), Be()).degree() == n + m);
}

TEST_CASE("seed regularity by Sturm count") {
  // P_1^{(-a-1,b-1)} root at x = (a+b)/(b-a); outside [-1,1] for a, b > 0
  CHECK(seed_regular(1, rat(5, 2), rat(7, 2)));
  CHECK(seed_regular(2, rat(5, 2), rat(7, 2)));
  CHECK_FALSE(seed_regular(1, rat(1, 2), rat(-1, 2)));
}
