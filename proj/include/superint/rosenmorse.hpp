#pragma once
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "superint/diffop.hpp"
#include "superint/report.hpp"

namespace si {

// alpha, beta, omega: generators (symbolic) or constants (sampled)
struct RMParams {
  MPoly alpha, beta, omega;
  static RMParams symbolic();
  static RMParams at(const Rational& a, const Rational& b, const Rational& w);
  // random rationals with alpha, beta > 1 and omega > 0
  static RMParams sample(std::mt19937_64& rng);
  std::map<int, Rational> values() const;  // the instantiated ones
  std::string str() const;
};

// -d_theta^2 + (a^2-1/4)/cos^2 + (b^2-1/4)/sin^2 written in x = -cos 2theta
DiffOp angular_operator(const MPoly& a, const MPoly& b);

// Polar frame (d1 = d_r, d2 = d_x).
struct RosenMorseSystem {
  int m = 1;
  RMParams p;
  MPoly Pm;            // seed polynomial P_m^{(-a-1, b-1)}
  RatFun ell;          // log-derivative of the seed function
  DiffOp L;            // angular_operator(a+1, b-1)
  DiffOp A, Adag, AAd; // A = 2s(d_x - ell), adjoint with respect to d theta
  RatFun cm;           // L - A^dagger A
  DiffOp L2;           // A A^dagger + cm
  DiffOp H;            // -(d_r^2 + d_r/r)/2 + omega^2 r^2/2 + L2/(2 r^2)
  MPoly kappa;         // (a+b)(a-b+2)

  std::map<std::string, const DiffOp*> named() const;
};

RosenMorseSystem build_rosen_morse(int m, const RMParams& p);

// the explicit second-order display of L2, transcribed as printed
DiffOp displayed_L2(const RosenMorseSystem& sys);

// ladder templates; Lam, E may be generators or values
DiffOp tower_C(const RatFun& Lam, const RatFun& E);
DiffOp tower_b(const RosenMorseSystem& sys, const RatFun& Lam);
DiffOp tower_B(const RosenMorseSystem& sys, const RatFun& Lam);

// basis
MPoly lambda_n(const RosenMorseSystem& sys, int n);        // 2n + a + b + 1
MPoly energy(const RosenMorseSystem& sys, int k, int n);   // omega (2k + 2n + a + b + 2)
WaveFunction psi(const RosenMorseSystem& sys, int n);      // classical, parameters (a+1, b-1)
WaveFunction psi_hat(const RosenMorseSystem& sys, int n);  // factorised exceptional form
WaveFunction radial(const RosenMorseSystem& sys, int k, const MPoly& Lam);
WaveFunction phi(const RosenMorseSystem& sys, int k, int n);  // A psi_n times radial

struct IntegralL4 {
  DiffOp D;              // pole-removal term
  DiffOp K;              // template in Lam, E
  bool pole_free = false;
  bool odd = false;
  std::vector<std::string> residual;  // why it failed, if it did
  DiffOp L4, L5, L6;     // after Lam^2 -> L2, E -> H
};

// D = kappa A A^dagger E / 4 derived from its definition -B_Lam C_{-Lam}/4 at Lam = 1
DiffOp pole_term(const RosenMorseSystem& sys);
DiffOp printed_pole_term(const RosenMorseSystem& sys);
IntegralL4 build_L4(const RosenMorseSystem& sys, const DiffOp& D);
// template even in Lam -> operator, by right composition with powers of L2 and H
DiffOp substitute_LE(const RosenMorseSystem& sys, const DiffOp& T);

// coefficient c with P f = c g, or nullopt
std::optional<RatFun> action_coefficient(const DiffOp& P, const WaveFunction& f, const WaveFunction& g);

struct RMOptions {
  Mode mode = Mode::Symbolic;
  SampleSpec spec;
  int nmax = 3;
  bool with_L4 = true;
  // restrict the non-L4 checks to these suffixes, e.g. "ladder_Xi"; empty runs all
  std::set<std::string> groups;
};
Report verify_rosen_morse(int m, const RMOptions& opt = {});
Report verify_seed_independence(const std::vector<int>& ms, const RMParams& p = RMParams::symbolic());

}  // namespace si
