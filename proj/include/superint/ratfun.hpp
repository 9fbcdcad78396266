#pragma once
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superint/mpoly.hpp"

namespace si {

// num / prod f_i^{e_i}. Factors are s-free, non-constant and normalised to
// leading coefficient 1; the constant lives in num.
class RatFun {
 public:
  using Factor = std::pair<MPoly, int>;

  RatFun() = default;
  RatFun(const MPoly& p) : num_(reduce_s(p)) {}
  RatFun(const Rational& c) : num_(c) {}
  RatFun(long c) : num_(Rational(c)) {}
  static RatFun gen(int v, int power = 1) { return RatFun(MPoly::gen(v, power)); }
  static RatFun frac(const MPoly& num, const MPoly& den);
  static RatFun over(const MPoly& num, std::vector<Factor> den);

  const MPoly& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }
  MPoly den_poly() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.empty(); }
  bool is_const() const { return den_.empty() && num_.is_const(); }
  Rational const_value() const { return num_.const_value(); }
  bool has_var(int v) const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  bool operator==(const RatFun& o) const { return (*this - o).is_zero(); }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun inv() const;
  RatFun pow(int e) const;
  // total derivative; d/dx accounts for s = sqrt(1-x^2)
  RatFun diff(int v) const;
  RatFun subs(const std::map<int, Rational>& vals) const;
  RatFun subs(int v, const RatFun& val) const;
  Rational eval(const std::map<int, Rational>& vals) const;

  std::string str() const;

 private:
  MPoly num_;
  std::vector<Factor> den_;  // sorted, distinct
  void normalize();
  friend struct RatFunAccess;
};

enum class Mode { Symbolic, Sampled, Basis };
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct SampleSpec {
  int trials = 5;
  uint64_t seed = 1;
};

// a point on the circle: x, s rational with s^2 = 1 - x^2, s > 0
std::pair<Rational, Rational> circle_point(const Rational& t);

// Symbolic: normal form of f-g is zero. Sampled: f-g vanishes at `trials`
// random points (x, s on the unit circle, the rest uniform rationals).
bool ratfun_equal(const RatFun& f, const RatFun& g, Mode mode = Mode::Symbolic, SampleSpec spec = {});

// exact divisibility of num by a factor, with a cheap specialisation pre-test
bool factor_divides(const MPoly& num, const MPoly& f, MPoly* q);

}  // namespace si
