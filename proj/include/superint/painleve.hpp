#pragma once
#include <map>
#include <string>
#include <vector>

#include "superint/ratfun.hpp"
#include "superint/report.hpp"

namespace si {

// w'' - (w'^2/(2w) + 3/2 w^3 + 4 z w^2 + 2 (z^2 - a) w + b/w), w in z
RatFun piv_residual(const RatFun& w, const RatFun& a, const RatFun& b);

struct PIVCandidate {
  RatFun g;  // in x
  bool consistent = false;
  Rational mu, lambda, a, b;  // w(z) = mu g(lambda z) solves PIV(a, b)
  int tried = 0;
};
// scans (mu, lambda) over {1, -1, 2, -2, 1/2, -1/2}^2, solving linearly for (a, b)
PIVCandidate piv_fit(const RatFun& g);

// normalisation of T against the angular potential v of L2
enum class TNorm { Quarter, Half };  // 4 T' = v, or 2 T' = v

struct SD1aInstance {
  int m = 1;
  Rational alpha, beta;
  TNorm norm = TNorm::Half;
  RatFun v;         // angular potential, in x = -cos 2theta
  RatFun tau;       // T = s tau + c_T with s = sin 2theta
  bool T_ok = false;
  RatFun W;         // -(sin cos / 2)(T + K cot 2theta), in x and s with generators K, c_T

  // solved stage
  bool solved = false;
  bool ct_nonzero_excluded = false;
  std::map<std::string, Rational> constants;  // K, c_T, q7..q10
  RatFun W_y;                                 // W at the solution, in y = (1 + cos 2theta)/2
  std::vector<std::string> notes;
};

SD1aInstance build_T_W(int m, const Rational& alpha, const Rational& beta, TNorm norm = TNorm::Half);
SD1aInstance sd1a_fit(SD1aInstance inst);
// SD-I.a left-hand side for W in y; q maps var::q7..q10 to values or leaves them symbolic
RatFun sd1a_residual(const RatFun& W_y, const std::map<int, Rational>& q = {});
// the printed cot 2theta coefficient alpha^2 - alpha beta + beta^2 + 7/4
Rational printed_K0(const Rational& alpha, const Rational& beta);
// the coefficient found by the fit: K0 + 2 (m - 1)(m + beta - alpha)
Rational sd1a_K(int m, const Rational& alpha, const Rational& beta);

Report verify_piv(const std::vector<int>& ks = {2, 4});
Report verify_sd1a(const std::vector<int>& ms, SampleSpec spec);

}  // namespace si
