#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superint/mpoly.hpp"

namespace si {

// dense univariate polynomial over Q, c[i] is the coefficient of v^i
struct UPoly {
  std::vector<Rational> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rational> cs) : c(std::move(cs)) { trim(); }
  static UPoly from_mpoly(const MPoly& p, int v);  // throws if p has other generators
  MPoly to_mpoly(int v) const;

  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  const Rational& lc() const { return c.back(); }
  void trim();

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  UPoly deriv() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& o) const { return c == o.c; }
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);  // monic
UPoly squarefree_part(const UPoly& p);

std::vector<UPoly> sturm_sequence(const UPoly& p);
// number of distinct real roots in the half-open interval (a, b]
int sturm_count(const UPoly& p, const Rational& a, const Rational& b);
// distinct real roots in the closed interval [a, b]
int roots_in_closed(const UPoly& p, const Rational& a, const Rational& b);
// all rational roots, ascending, without multiplicity
std::vector<Rational> rational_roots(const UPoly& p);
// simplest rational (least denominator) in [lo, hi]
Rational simplest_between(Rational lo, Rational hi);

}  // namespace si
