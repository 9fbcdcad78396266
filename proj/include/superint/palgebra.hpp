#pragma once
#include <map>
#include <string>
#include <vector>

#include "superint/linalg.hpp"
#include "superint/report.hpp"
#include "superint/rosenmorse.hpp"

namespace si {

// a rational parameter point of the exceptional Rosen-Morse family
struct AlgebraPoint {
  Rational alpha, beta, omega;
  int m = 1;
  RMParams params() const { return RMParams::at(alpha, beta, omega); }
  std::string str() const;
};

// L2, L4, L5 on the energy level k + n = p, basis Phi_{p-n,n} for n = 0..p.
// Y is scale * L4 and Z = [X, Y].
struct Level {
  int p = 0;
  Rational E;
  RMat X, Y, Z;
};
Level level_matrices(const AlgebraPoint& pt, int p, const Rational& scale = 1);

// [X,Z] = a X^2 + b {X,Y} + c X + d Y + f
// [Y,Z] = g X^3 + h X^2 + b2 Y^2 + a2 {X,Y} + i X + c2 Y + j
// with every coefficient a polynomial in E (the energy of the level)
struct AlgebraFit {
  bool consistent = false;
  int rank = 0, unknowns = 0, equations = 0;
  std::map<std::string, MPoly> coeff;  // in var::E
  // whether [Y,Z] needs the X term (otherwise i would sit on a scalar)
  bool i_on_X = false;
};
AlgebraFit fit_algebra(const AlgebraPoint& pt, int pmax, const Rational& scale, int edeg = 2);

// Casimir of the cubic algebra on each level; nullopt where it is not scalar
std::vector<std::optional<Rational>> casimir_levels(const AlgebraPoint& pt, const AlgebraFit& fit, int pmax,
                                                   const Rational& scale);

// displayed coefficient and Casimir formulas in (alpha, beta, omega, m, E = H)
std::map<std::string, RatFun> printed_algebra();
std::map<std::string, RatFun> printed_casimir();  // "literal" and "grouped" readings

// structure function in t = N + u with h read as E
// expanded display as its three printed factors: two quartics in t and the energy factor
std::vector<MPoly> phi_expanded_parts();
MPoly phi_expanded();
RatFun phi_factored();
Integer phi_constant();  // -13510798882111488

struct AlgebraOptions {
  Mode mode = Mode::Basis;
  SampleSpec spec;
  int pmax = 8;  // levels 0..8 contain every (k, n) <= 4
  int cross_check_levels = 2;
};
Report verify_algebra(int m, const AlgebraOptions& opt = {});
Report phi_compare();
Report spectrum_from_rep(const std::vector<int>& ms, int pmax, SampleSpec spec);

}  // namespace si
