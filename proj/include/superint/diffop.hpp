#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superint/ratfun.hpp"

namespace si {

// Two base variables; monomials are d_{v1}^a d_{v2}^b.
struct Frame {
  int v1, v2;
  bool operator==(const Frame& o) const { return v1 == o.v1 && v2 == o.v2; }
  static Frame polar() { return {var::r, var::x}; }      // (r, x = -cos 2theta)
  static Frame cartesian() { return {var::y, var::x}; }  // (y, x)
};

class WaveFunction;

class DiffOp {
 public:
  using Key = std::pair<int, int>;

  explicit DiffOp(Frame f = Frame::polar()) : fr_(f) {}
  DiffOp(Frame f, const RatFun& c);  // multiplication operator
  static DiffOp d(Frame f, int a, int b);
  static DiffOp d1(Frame f) { return d(f, 1, 0); }
  static DiffOp d2(Frame f) { return d(f, 0, 1); }

  Frame frame() const { return fr_; }
  const std::map<Key, RatFun>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int order() const;
  RatFun coeff(int a, int b) const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const DiffOp& p, const DiffOp& q);  // composition
  friend DiffOp operator*(const RatFun& c, const DiffOp& p);  // left multiplication
  bool operator==(const DiffOp& o) const { return (*this - o).is_zero(); }

  RatFun apply(const RatFun& f) const;
  WaveFunction apply(const WaveFunction& f) const;

  DiffOp subs(const std::map<int, Rational>& vals) const;
  DiffOp subs(int v, const RatFun& val) const;
  // split coefficients by powers of generator v (requires v-free denominators)
  std::map<int, DiffOp> split(int v) const;
  // formal adjoint with respect to weight rho d v1 d v2
  DiffOp adjoint(const RatFun& rho = RatFun(1)) const;

  std::string str() const;
  size_t weight() const;  // total number of numerator terms, a size measure

 private:
  Frame fr_;
  std::map<Key, RatFun> t_;
  void add_term(Key k, const RatFun& c);
};

DiffOp compose(const DiffOp& p, const DiffOp& q);
DiffOp commutator(const DiffOp& p, const DiffOp& q);
// every coefficient vanishes, decided with ratfun_equal in the given mode
bool op_zero(const DiffOp& p, Mode mode = Mode::Symbolic, SampleSpec spec = {});
// p == k q for a constant k (free of the frame coordinates)
std::optional<RatFun> op_ratio(const DiffOp& p, const DiffOp& q);

// top-order part: (a, b) -> coefficient of xi_1^a xi_2^b
struct Symbol {
  int order = 0;
  std::map<std::pair<int, int>, RatFun> c;
  Symbol operator*(const Symbol& o) const;
  bool operator==(const Symbol& o) const;
  // c == k * o for a constant k (free of the frame coordinates); returns k
  std::optional<RatFun> ratio_to(const Symbol& o) const;
  std::string str(const std::string& n1, const std::string& n2) const;
};

enum class Presentation { Native, Polar };
// Polar: the x-derivatives are re-expressed through d_theta = 2 s d_x
Symbol principal_symbol(const DiffOp& p, Presentation pres = Presentation::Native);

// prod base_i^{e_i} * exp(q) with e_i affine in parameters
struct Prefactor {
  std::vector<std::pair<MPoly, MPoly>> powers;  // (base, exponent)
  MPoly expo;                                   // exponent of the exponential

  Prefactor& pow(const MPoly& base, const MPoly& e);
  Prefactor& exp(const MPoly& q);
  RatFun log_diff(int v) const;
  bool operator==(const Prefactor& o) const;
  std::string str() const;
};

class WaveFunction {
 public:
  WaveFunction() = default;
  WaveFunction(Prefactor p, RatFun core) : pre_(std::move(p)), core_(std::move(core)) {}
  const Prefactor& prefactor() const { return pre_; }
  const RatFun& core() const { return core_; }
  bool is_zero() const { return core_.is_zero(); }

  WaveFunction diff(int v) const;
  WaveFunction operator*(const RatFun& c) const { return {pre_, core_ * c}; }
  WaveFunction operator*(const WaveFunction& o) const;  // prefactors merge
  WaveFunction operator+(const WaveFunction& o) const;
  WaveFunction operator-(const WaveFunction& o) const;
  // same function written over another prefactor; throws NonClosure if the
  // ratio of prefactors is not rational
  WaveFunction rebase(const Prefactor& target) const;
  WaveFunction subs(const std::map<int, Rational>& vals) const;
  double eval_double(const std::map<int, Rational>& point) const;

 private:
  Prefactor pre_;
  RatFun core_;
};

struct NonClosure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f == k g for a coordinate-free k
std::optional<RatFun> proportionality(const WaveFunction& f, const WaveFunction& g);

}  // namespace si
