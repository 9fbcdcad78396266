#pragma once
#include <string>

#include "superint/ratfun.hpp"

namespace si {

// All polynomials are in the generator `v` (default x). Parameters may be
// symbolic MPolys (e.g. MPoly::gen(var::alpha) + 1) or constants.
MPoly hermite(int n, int v = var::x);
MPoly pseudo_hermite(int k, int v = var::x);  // i^{-k} H_k(i x)
MPoly laguerre(int n, const MPoly& a, const MPoly& arg);
MPoly jacobi(int n, const MPoly& a, const MPoly& b, int v = var::x);

// independent hypergeometric forms used as cross-checks
MPoly hermite_2f0(int n, int v = var::x);
MPoly jacobi_2f1(int n, const MPoly& a, const MPoly& b, int v = var::x);

RatFun wronskian(const RatFun& f, const RatFun& g, int v = var::x);  // f'g - g'f

struct GapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExceptionalPoly {
  std::string kind;  // "xhermite" or "xjacobi"
  int k = 0, m = 0, n = 0;
  MPoly poly;
  int degree(int v = var::x) const { return poly.deg(v); }
};

ExceptionalPoly exceptional_hermite(int k, int n);
// the combination that actually yields eigenfunctions of the extended
// oscillator: -H_k H_{n-k} - 2k H_{k-1} H_{n-k-1}, n = 0 or n >= k+1
ExceptionalPoly exceptional_hermite_state(int k, int n);

// 2(1-x)(P_m P_n' - P_m' P_n) - 2(a+1) P_m P_n with P_m = P_m^{(-a-1,b-1)},
// P_n = P_n^{(a+1,b-1)}; this is the sign that makes the assembled function an
// eigenfunction. `printed_sign` flips the Wronskian term.
ExceptionalPoly exceptional_jacobi(int m, int n, const MPoly& a, const MPoly& b, bool printed_sign = false);

// seed P_m^{(-a-1,b-1)} at rational a, b has no root in [-1, 1]
bool seed_regular(int m, const Rational& a, const Rational& b);

}  // namespace si
