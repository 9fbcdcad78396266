#include "superint/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace si {

namespace var {
namespace {
struct Registry {
  std::vector<std::string> names;
  std::mutex mu;
};
Registry& reg() {
  static Registry* r = [] {
    auto* g = new Registry;
    g->names = {"r", "x", "s", "y", "z", "t", "alpha", "beta", "omega", "Lam", "E",
                "m", "n", "K", "cT", "q7", "q8", "q9", "q10", "a", "b"};
    return g;
  }();
  return *r;
}
}  // namespace

int id(const std::string& nm) {
  auto& R = reg();
  std::lock_guard<std::mutex> lk(R.mu);
  for (size_t i = 0; i < R.names.size(); ++i)
    if (R.names[i] == nm) return static_cast<int>(i);
  if (R.names.size() >= static_cast<size_t>(kMaxVars)) throw std::length_error("too many generators");
  R.names.push_back(nm);
  return static_cast<int>(R.names.size() - 1);
}
const std::string& name(int i) { return reg().names.at(static_cast<size_t>(i)); }
int count() { return static_cast<int>(reg().names.size()); }

}  // namespace var

int Mono::total() const {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool Mono::divides(const Mono& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

size_t MonoHash::operator()(const Mono& m) const {
  size_t h = 1469598103934665603ull;
  for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
  return h;
}

static Mono mono_mul(const Mono& a, const Mono& b) {
  Mono c;
  for (int i = 0; i < kMaxVars; ++i) {
    int v = a.e[i] + b.e[i];
    if (v > 255) throw std::overflow_error("exponent overflow");
    c.e[i] = static_cast<uint8_t>(v);
  }
  return c;
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) t_.emplace_back(Mono{}, c);
}

MPoly MPoly::gen(int v, int power) {
  MPoly p;
  Mono m;
  m.e[v] = static_cast<uint8_t>(power);
  p.t_.emplace_back(m, Rational(1));
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> t) {
  MPoly p;
  p.t_ = std::move(t);
  p.normalize();
  return p;
}

void MPoly::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return b.first < a.first; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& tm : t_) {
    if (!out.empty() && out.back().first == tm.first)
      out.back().second += tm.second;
    else
      out.push_back(std::move(tm));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& a) { return a.second == 0; }), out.end());
  t_ = std::move(out);
}

bool MPoly::is_const() const { return t_.empty() || (t_.size() == 1 && t_[0].first == Mono{}); }

Rational MPoly::const_value() const {
  if (t_.empty()) return 0;
  if (!is_const()) throw std::logic_error("not a constant: " + str());
  return t_[0].second;
}

int MPoly::deg(int v) const {
  int d = 0;
  for (auto& tm : t_) d = std::max(d, static_cast<int>(tm.first.e[v]));
  return d;
}

int MPoly::total_deg() const {
  int d = 0;
  for (auto& tm : t_) d = std::max(d, tm.first.total());
  return d;
}

std::vector<int> MPoly::vars() const {
  std::vector<int> out;
  for (int v = 0; v < kMaxVars; ++v)
    if (deg(v) > 0) out.push_back(v);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& tm : p.t_) tm.second = -tm.second;
  return p;
}

static std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                                      bool sub) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && b[j].first < a[i].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || a[i].first < b[j].first) {
      out.emplace_back(b[j].first, sub ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = sub ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i, ++j;
    }
  }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge(t_, o.t_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge(t_, o.t_, true);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& tm : t_) tm.second *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.t_.empty() || b.t_.empty()) return MPoly();
  if (b.is_const()) return a * b.t_[0].second;
  if (a.is_const()) return b * a.t_[0].second;
  const int S = var::s, X = var::x;
  std::unordered_map<Mono, Rational, MonoHash> acc;
  acc.reserve(a.t_.size() * b.t_.size());
  Rational tmp;
  for (auto& ta : a.t_)
    for (auto& tb : b.t_) {
      Mono m = mono_mul(ta.first, tb.first);
      tmp = ta.second * tb.second;
      if (m.e[S] >= 2) {
        // s^2 = 1 - x^2
        m.e[S] = static_cast<uint8_t>(m.e[S] - 2);
        acc[m] += tmp;
        Mono m2 = m;
        m2.e[X] = static_cast<uint8_t>(m2.e[X] + 2);
        acc[m2] -= tmp;
      } else {
        acc[m] += tmp;
      }
    }
  std::vector<MPoly::Term> t;
  t.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) t.emplace_back(kv.first, std::move(kv.second));
  MPoly p;
  p.t_ = std::move(t);
  std::sort(p.t_.begin(), p.t_.end(), [](const MPoly::Term& x, const MPoly::Term& y) { return y.first < x.first; });
  if (p.deg(S) >= 2) return reduce_s(p);  // only when inputs were unreduced
  return p;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

bool MPoly::operator<(const MPoly& o) const {
  if (t_.size() != o.t_.size()) return t_.size() < o.t_.size();
  for (size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].first != o.t_[i].first) return t_[i].first < o.t_[i].first;
    if (t_[i].second != o.t_[i].second) return t_[i].second < o.t_[i].second;
  }
  return false;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

MPoly MPoly::diff(int v) const {
  std::vector<Term> out;
  for (auto& tm : t_) {
    int k = tm.first.e[v];
    if (!k) continue;
    Mono m = tm.first;
    m.e[v] = static_cast<uint8_t>(k - 1);
    out.emplace_back(m, tm.second * k);
  }
  return from_terms(std::move(out));
}

MPoly MPoly::subs(int v, const MPoly& val) const {
  auto cs = coeffs_in(v);
  MPoly out;
  if (cs.empty()) return out;
  // Horner from the top
  int top = cs.rbegin()->first;
  for (int k = top; k >= 0; --k) {
    out *= val;
    auto it = cs.find(k);
    if (it != cs.end()) out += it->second;
  }
  return out;
}

MPoly MPoly::subs(const std::map<int, Rational>& vals) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& tm : t_) {
    Rational c = tm.second;
    Mono m = tm.first;
    for (auto& [v, q] : vals) {
      if (m.e[v]) {
        c *= si::pow(q, m.e[v]);
        m.e[v] = 0;
      }
    }
    out.emplace_back(m, c);
  }
  MPoly p = from_terms(std::move(out));
  return p;
}

Rational MPoly::eval(const std::map<int, Rational>& vals) const {
  MPoly p = subs(vals);
  if (!p.is_const()) throw std::logic_error("eval: unassigned generator in " + p.str());
  return p.const_value();
}

std::map<int, MPoly> MPoly::coeffs_in(int v) const {
  std::map<int, std::vector<Term>> parts;
  for (auto& tm : t_) {
    Mono m = tm.first;
    int k = m.e[v];
    m.e[v] = 0;
    parts[k].emplace_back(m, tm.second);
  }
  std::map<int, MPoly> out;
  for (auto& [k, ts] : parts) out[k] = from_terms(std::move(ts));
  return out;
}

MPoly MPoly::coeff(int v, int k) const {
  std::vector<Term> out;
  for (auto& tm : t_)
    if (tm.first.e[v] == k) {
      Mono m = tm.first;
      m.e[v] = 0;
      out.emplace_back(m, tm.second);
    }
  return from_terms(std::move(out));
}

Rational MPoly::content() const {
  if (t_.empty()) return 0;
  Integer g = 0, l = 1;
  for (auto& tm : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), tm.second.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return c;
}

MPoly MPoly::primitive() const {
  if (t_.empty()) return *this;
  return *this * Rational(1 / t_.front().second);
}

static std::string mono_str(const Mono& m) {
  std::string s;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!m.e[v]) continue;
    if (!s.empty()) s += "*";
    s += var::name(v);
    if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
  }
  return s;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    std::string ms = mono_str(m);
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (ms.empty())
      os << a.get_str();
    else if (a == 1)
      os << ms;
    else
      os << a.get_str() << "*" << ms;
  }
  return os.str();
}

MPoly reduce_s(const MPoly& p) {
  const int S = var::s, X = var::x;
  if (p.deg(S) < 2) return p;
  std::vector<MPoly::Term> keep;
  MPoly out;
  for (auto& [m, c] : p.terms()) {
    int k = m.e[S];
    if (k < 2) {
      keep.emplace_back(m, c);
      continue;
    }
    Mono base = m;
    base.e[S] = static_cast<uint8_t>(k % 2);
    MPoly f = MPoly::from_terms({{base, c}});
    MPoly one_minus = MPoly(1) - MPoly::gen(X, 2);
    out += f * one_minus.pow(static_cast<unsigned>(k / 2));
  }
  out += MPoly::from_terms(std::move(keep));
  return out;
}

bool divide_exact(const MPoly& f, const MPoly& g, MPoly* q) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (g.has_var(var::s)) throw std::logic_error("divide_exact: divisor must be s-free");
  if (g.is_const()) {
    if (q) *q = f * Rational(1 / g.const_value());
    return true;
  }
  const Mono& lg = g.lead().first;
  Rational ilc = 1 / g.lead().second;
  MPoly p = f;
  std::vector<MPoly::Term> qt;
  while (!p.is_zero()) {
    const auto& lt = p.lead();
    if (!lg.divides(lt.first)) return false;
    Mono m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint8_t>(lt.first.e[i] - lg.e[i]);
    Rational c = lt.second * ilc;
    MPoly t = MPoly::from_terms({{m, c}});
    p -= t * g;
    qt.emplace_back(m, c);
  }
  if (q) *q = MPoly::from_terms(std::move(qt));
  return true;
}

std::pair<MPoly, MPoly> split_s(const MPoly& p) {
  auto cs = p.coeffs_in(var::s);
  MPoly a = cs.count(0) ? cs[0] : MPoly();
  MPoly b = cs.count(1) ? cs[1] : MPoly();
  if (cs.size() > 2 || (cs.size() == 2 && !cs.count(0) && !cs.count(1))) return split_s(reduce_s(p));
  return {a, b};
}

MPoly conj_s(const MPoly& p) {
  auto [a, b] = split_s(p);
  return a - b * MPoly::gen(var::s);
}

}  // namespace si
