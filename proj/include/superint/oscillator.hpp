#pragma once
#include <map>
#include <string>

#include "superint/diffop.hpp"
#include "superint/report.hpp"

namespace si {

// One-step state-adding extension of the harmonic oscillator, Cartesian frame
// (d1 = d_y, d2 = d_x).
struct OscillatorSystem {
  int k = 0;
  RatFun W;                   // -x - H_k'/H_k
  DiffOp a, adag, A, Adag;    // in x
  DiffOp Hx;                  // -d_x^2 + x^2
  DiffOp H2;                  // A A^dagger + shift
  Rational shift;             // solved from A Hx = H2 A
  Rational weyl_shift;        // Hx = a a^dagger + weyl_shift
  DiffOp b, bdag;             // A a A^dagger, A a^dagger A^dagger
  DiffOp ay, aydag, Hy;       // in y
  DiffOp H2d;                 // H2 + Hy
  DiffOp L1, L2;              // (b^dagger a_y -+ a_y^dagger b)/2

  std::map<std::string, const DiffOp*> named() const;
};

OscillatorSystem build_oscillator(int k);  // throws std::invalid_argument on odd k

struct GravelMatch {
  RatFun g;      // H_k'/H_k
  RatFun rest;   // V - (y^2 + x^2 - g' + g^2 + 2xg)
  bool constant = false;
  Rational c;
};
GravelMatch gravel_match(const OscillatorSystem& sys);

// [H2d, L1] = [H2d, L2] = 0, orders, symbol, ladders, spectrum, Gravel form
Report verify_oscillator(int k, Mode mode = Mode::Symbolic, SampleSpec spec = {});
// Weyl relation and the plain oscillator
Report verify_weyl();

}  // namespace si
