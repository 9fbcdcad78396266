#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superint/rational.hpp"

namespace si {

constexpr int kMaxVars = 24;

// Global generator registry. Index order is the lex priority.
namespace var {
int id(const std::string& name);  // registers on first use
const std::string& name(int i);
int count();
// fixed generators, pre-registered in this order
inline constexpr int r = 0, x = 1, s = 2, y = 3, z = 4, t = 5;
inline constexpr int alpha = 6, beta = 7, omega = 8, Lam = 9, E = 10, m = 11, n = 12;
inline constexpr int K = 13, cT = 14, q7 = 15, q8 = 16, q9 = 17, q10 = 18, a4 = 19, b4 = 20;
}  // namespace var

struct Mono {
  std::array<uint8_t, kMaxVars> e{};
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
  bool operator<(const Mono& o) const { return e < o.e; }  // lex
  int total() const;
  bool divides(const Mono& o) const;
};

struct MonoHash {
  size_t operator()(const Mono& m) const;
};

class MPoly {
 public:
  using Term = std::pair<Mono, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);
  MPoly(long c) : MPoly(Rational(c)) {}
  static MPoly gen(int v, int power = 1);
  static MPoly from_terms(std::vector<Term> t);  // sorts, merges, drops zeros

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_const() const;
  Rational const_value() const;  // 0 if zero, throws if not constant
  size_t size() const { return t_.size(); }
  const Term& lead() const { return t_.front(); }

  int deg(int v) const;
  int total_deg() const;
  bool has_var(int v) const { return deg(v) > 0; }
  std::vector<int> vars() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  bool operator<(const MPoly& o) const;  // arbitrary total order for maps

  MPoly pow(unsigned e) const;
  // plain partial derivative, s treated as independent
  MPoly diff(int v) const;
  MPoly subs(int v, const MPoly& val) const;
  MPoly subs(const std::map<int, Rational>& vals) const;
  Rational eval(const std::map<int, Rational>& vals) const;  // all vars must be assigned
  // split by powers of v: p = sum_k c_k v^k
  std::map<int, MPoly> coeffs_in(int v) const;
  // coefficient of a monomial in the given vars (others kept)
  MPoly coeff(int v, int k) const;

  Rational content() const;        // positive rational gcd of coefficients
  MPoly primitive() const;         // divided so that lead coeff is 1
  Rational lead_coeff() const { return t_.empty() ? Rational(0) : t_.front().second; }

  std::string str() const;

 private:
  std::vector<Term> t_;  // sorted descending, no zeros
  void normalize();
};

// s^2 -> 1 - x^2
MPoly reduce_s(const MPoly& p);
// exact division, returns false if g does not divide f
bool divide_exact(const MPoly& f, const MPoly& g, MPoly* q);
// split p = a + b s (both s-free)
std::pair<MPoly, MPoly> split_s(const MPoly& p);
MPoly conj_s(const MPoly& p);  // s -> -s

}  // namespace si
