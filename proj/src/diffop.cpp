#include "superint/diffop.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace si {

namespace {

bool coordinate_free(const RatFun& f) {
  for (int v : {var::r, var::x, var::s, var::y, var::z})
    if (f.has_var(v)) return false;
  return true;
}

// memoised mixed partials of a RatFun in a frame
struct DerivTable {
  Frame fr;
  std::map<std::pair<int, int>, RatFun> memo;
  DerivTable(Frame f, const RatFun& g) : fr(f) { memo[{0, 0}] = g; }
  const RatFun& get(int a, int b) {
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    RatFun v = b > 0 ? get(a, b - 1).diff(fr.v2) : get(a - 1, b).diff(fr.v1);
    return memo[{a, b}] = std::move(v);
  }
};

}  // namespace

DiffOp::DiffOp(Frame f, const RatFun& c) : fr_(f) {
  if (!c.is_zero()) t_[{0, 0}] = c;
}

DiffOp DiffOp::d(Frame f, int a, int b) {
  DiffOp p(f);
  p.t_[{a, b}] = RatFun(1);
  return p;
}

int DiffOp::order() const {
  int o = -1;
  for (auto& [k, c] : t_) o = std::max(o, k.first + k.second);
  return o;
}

RatFun DiffOp::coeff(int a, int b) const {
  auto it = t_.find({a, b});
  return it == t_.end() ? RatFun() : it->second;
}

void DiffOp::add_term(Key k, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

DiffOp DiffOp::operator-() const {
  DiffOp p = *this;
  for (auto& [k, c] : p.t_) c = -c;
  return p;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (!(fr_ == o.fr_) && !o.is_zero()) {
    if (is_zero()) fr_ = o.fr_;
    else throw std::logic_error("frame mismatch");
  }
  for (auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

DiffOp operator*(const RatFun& c, const DiffOp& p) {
  DiffOp r(p.fr_);
  if (c.is_zero()) return r;
  for (auto& [k, v] : p.t_) r.add_term(k, c * v);
  return r;
}

DiffOp operator*(const DiffOp& p, const DiffOp& q) {
  if (p.is_zero() || q.is_zero()) return DiffOp(p.fr_);
  if (!(p.fr_ == q.fr_)) throw std::logic_error("frame mismatch in composition");
  std::map<DiffOp::Key, std::vector<RatFun>> acc;
  for (auto& [kq, g] : q.t_) {
    DerivTable dg(q.fr_, g);
    for (auto& [kp, f] : p.t_) {
      int a = kp.first, b = kp.second;
      for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
          const RatFun& dij = dg.get(i, j);
          if (dij.is_zero()) continue;
          Integer bin = binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(i)) *
                        binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(j));
          DiffOp::Key k{a - i + kq.first, b - j + kq.second};
          acc[k].push_back(f * dij * RatFun(Rational(bin)));
        }
    }
  }
  DiffOp r(p.fr_);
  for (auto& [k, parts] : acc) {
    RatFun sum;
    for (auto& c : parts) sum += c;
    if (!sum.is_zero()) r.t_[k] = sum;
  }
  return r;
}

DiffOp compose(const DiffOp& p, const DiffOp& q) { return p * q; }
DiffOp commutator(const DiffOp& p, const DiffOp& q) { return p * q - q * p; }

bool op_zero(const DiffOp& p, Mode mode, SampleSpec spec) {
  for (auto& [k, c] : p.terms())
    if (!ratfun_equal(c, RatFun(), mode, spec)) return false;
  return true;
}

std::optional<RatFun> op_ratio(const DiffOp& p, const DiffOp& q) {
  if (q.is_zero() || p.terms().size() != q.terms().size()) return std::nullopt;
  auto& [k0, v0] = *q.terms().begin();
  RatFun k = p.coeff(k0.first, k0.second) / v0;
  if (!coordinate_free(k)) return std::nullopt;
  if (!(p == k * q)) return std::nullopt;
  return k;
}

RatFun DiffOp::apply(const RatFun& f) const {
  DerivTable df(fr_, f);
  RatFun out;
  for (auto& [k, c] : t_) out += c * df.get(k.first, k.second);
  return out;
}

WaveFunction DiffOp::apply(const WaveFunction& f) const {
  std::map<Key, WaveFunction> memo;
  memo[{0, 0}] = f;
  std::function<const WaveFunction&(int, int)> get = [&](int a, int b) -> const WaveFunction& {
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    WaveFunction w = b > 0 ? get(a, b - 1).diff(fr_.v2) : get(a - 1, b).diff(fr_.v1);
    return memo[{a, b}] = std::move(w);
  };
  RatFun core;
  for (auto& [k, c] : t_) core += c * get(k.first, k.second).core();
  return WaveFunction(f.prefactor(), core);
}

DiffOp DiffOp::subs(const std::map<int, Rational>& vals) const {
  DiffOp r(fr_);
  for (auto& [k, c] : t_) r.add_term(k, c.subs(vals));
  return r;
}

DiffOp DiffOp::subs(int v, const RatFun& val) const {
  DiffOp r(fr_);
  for (auto& [k, c] : t_) r.add_term(k, c.subs(v, val));
  return r;
}

std::map<int, DiffOp> DiffOp::split(int v) const {
  std::map<int, DiffOp> out;
  for (auto& [k, c] : t_) {
    for (auto& [f, e] : c.den())
      if (f.has_var(v)) throw std::logic_error("split: denominator depends on " + var::name(v) + ": " + c.str());
    for (auto& [p, cp] : c.num().coeffs_in(v)) {
      auto& d = out.try_emplace(p, fr_).first->second;
      d.add_term(k, RatFun::over(cp, c.den()));
    }
  }
  return out;
}

DiffOp DiffOp::adjoint(const RatFun& rho) const {
  DiffOp flat(fr_);
  for (auto& [k, c] : t_) {
    DiffOp term = d(fr_, k.first, k.second) * DiffOp(fr_, c);
    if ((k.first + k.second) % 2) term = -term;
    flat += term;
  }
  if (rho.is_const() && rho.const_value() == 1) return flat;
  return DiffOp(fr_, rho.inv()) * flat * DiffOp(fr_, rho);
}

std::string DiffOp::str() const {
  std::ostringstream os;
  auto n1 = var::name(fr_.v1), n2 = var::name(fr_.v2);
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto [a, b] = it->first;
    os << "[d_" << n1 << "^" << a << " d_" << n2 << "^" << b << "] " << it->second.str() << "\n";
  }
  return os.str();
}

size_t DiffOp::weight() const {
  size_t w = 0;
  for (auto& [k, c] : t_) w += c.num().size();
  return w;
}

Symbol Symbol::operator*(const Symbol& o) const {
  Symbol r;
  r.order = order + o.order;
  for (auto& [k1, c1] : c)
    for (auto& [k2, c2] : o.c) {
      std::pair<int, int> k{k1.first + k2.first, k1.second + k2.second};
      r.c[k] += c1 * c2;
    }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = it->second.is_zero() ? r.c.erase(it) : std::next(it);
  return r;
}

bool Symbol::operator==(const Symbol& o) const {
  if (order != o.order) return false;
  std::map<std::pair<int, int>, RatFun> all = c;
  for (auto& [k, v] : o.c) all[k] -= v;
  for (auto& [k, v] : all)
    if (!v.is_zero()) return false;
  return true;
}

std::optional<RatFun> Symbol::ratio_to(const Symbol& o) const {
  if (order != o.order || c.empty() || o.c.empty()) return std::nullopt;
  auto& [k0, v0] = *o.c.begin();
  auto it = c.find(k0);
  if (it == c.end()) return std::nullopt;
  RatFun k = it->second / v0;
  if (!coordinate_free(k)) return std::nullopt;
  Symbol scaled = o;
  for (auto& [kk, v] : scaled.c) v = v * k;
  if (!(scaled == *this)) return std::nullopt;
  return k;
}

std::string Symbol::str(const std::string& n1, const std::string& n2) const {
  std::ostringstream os;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    os << "xi_" << n1 << "^" << it->first.first << " xi_" << n2 << "^" << it->first.second << ": "
       << it->second.str() << "\n";
  return os.str();
}

Symbol principal_symbol(const DiffOp& p, Presentation pres) {
  Symbol s;
  s.order = p.order();
  RatFun two_s = RatFun(MPoly::gen(var::s) * Rational(2));
  for (auto& [k, c] : p.terms()) {
    if (k.first + k.second != s.order) continue;
    RatFun v = c;
    if (pres == Presentation::Polar && k.second > 0) v = v / two_s.pow(k.second);
    s.c[k] = v;
  }
  return s;
}

Prefactor& Prefactor::pow(const MPoly& base, const MPoly& e) {
  for (auto& [b, ex] : powers)
    if (b == base) {
      ex += e;
      return *this;
    }
  powers.emplace_back(base, e);
  return *this;
}

Prefactor& Prefactor::exp(const MPoly& q) {
  expo += q;
  return *this;
}

RatFun Prefactor::log_diff(int v) const {
  RatFun out(expo.diff(v));
  for (auto& [b, e] : powers) {
    MPoly db = b.diff(v);
    if (db.is_zero() || e.is_zero()) continue;
    out += RatFun(e * db) / RatFun(b);
  }
  return out;
}

bool Prefactor::operator==(const Prefactor& o) const {
  if (expo != o.expo) return false;
  auto exps = [](const Prefactor& p, const MPoly& b) {
    for (auto& [bb, e] : p.powers)
      if (bb == b) return e;
    return MPoly();
  };
  for (auto& [b, e] : powers)
    if (exps(o, b) != e) return false;
  for (auto& [b, e] : o.powers)
    if (exps(*this, b) != e) return false;
  return true;
}

std::string Prefactor::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [b, e] : powers) {
    if (e.is_zero()) continue;
    if (!first) os << " * ";
    first = false;
    os << "(" << b.str() << ")^(" << e.str() << ")";
  }
  if (!expo.is_zero()) os << (first ? "" : " * ") << "exp(" << expo.str() << ")";
  return os.str();
}

WaveFunction WaveFunction::diff(int v) const {
  RatFun d = core_.diff(v) + core_ * pre_.log_diff(v);
  return WaveFunction(pre_, d);
}

WaveFunction WaveFunction::operator*(const WaveFunction& o) const {
  Prefactor p = pre_;
  for (auto& [b, e] : o.pre_.powers) p.pow(b, e);
  p.exp(o.pre_.expo);
  return WaveFunction(p, core_ * o.core_);
}

WaveFunction WaveFunction::operator+(const WaveFunction& o) const {
  WaveFunction g = o.rebase(pre_);
  return WaveFunction(pre_, core_ + g.core_);
}

WaveFunction WaveFunction::operator-(const WaveFunction& o) const {
  WaveFunction g = o.rebase(pre_);
  return WaveFunction(pre_, core_ - g.core_);
}

WaveFunction WaveFunction::rebase(const Prefactor& target) const {
  if (pre_ == target) return *this;
  if (pre_.expo != target.expo) throw NonClosure("exponential factors differ: " + pre_.str() + " vs " + target.str());
  std::vector<std::pair<MPoly, MPoly>> diffs;
  auto exps = [](const Prefactor& p, const MPoly& b) {
    for (auto& [bb, e] : p.powers)
      if (bb == b) return e;
    return MPoly();
  };
  for (auto& [b, e] : pre_.powers) diffs.emplace_back(b, e - exps(target, b));
  for (auto& [b, e] : target.powers)
    if (exps(pre_, b).is_zero() && !e.is_zero()) diffs.emplace_back(b, -e);
  MPoly one_minus = MPoly(1) - MPoly::gen(var::x), one_plus = MPoly(1) + MPoly::gen(var::x);
  RatFun factor(1);
  Rational half_m = 0, half_p = 0;
  for (auto& [b, d] : diffs) {
    if (d.is_zero()) continue;
    if (!d.is_const()) throw NonClosure("non-constant exponent shift " + d.str() + " on base " + b.str());
    Rational q = d.const_value();
    if (q.get_den() == 1) {
      factor *= RatFun(b).pow(static_cast<int>(q.get_num().get_si()));
      continue;
    }
    if (q.get_den() == 2 && b == one_minus) {
      half_m = q;
      continue;
    }
    if (q.get_den() == 2 && b == one_plus) {
      half_p = q;
      continue;
    }
    throw NonClosure("fractional exponent shift " + q.get_str() + " on base " + b.str());
  }
  if ((half_m == 0) != (half_p == 0)) throw NonClosure("unpaired half-integer shift on (1-x), (1+x)");
  if (half_m != 0) {
    // (1-x)^h (1+x)^h = s^{2h}, s > 0; the remainder is an integer power
    long k = Rational(2 * half_m).get_num().get_si();
    long rest = Rational(half_p - half_m).get_num().get_si();
    factor *= RatFun(MPoly::gen(var::s)).pow(static_cast<int>(k)) * RatFun(one_plus).pow(static_cast<int>(rest));
  }
  return WaveFunction(target, core_ * factor);
}

WaveFunction WaveFunction::subs(const std::map<int, Rational>& vals) const {
  Prefactor p;
  for (auto& [b, e] : pre_.powers) p.powers.emplace_back(b.subs(vals), e.subs(vals));
  p.expo = pre_.expo.subs(vals);
  return WaveFunction(p, core_.subs(vals));
}

double WaveFunction::eval_double(const std::map<int, Rational>& pt) const {
  double v = core_.eval(pt).get_d();
  for (auto& [b, e] : pre_.powers) v *= std::pow(b.eval(pt).get_d(), e.eval(pt).get_d());
  v *= std::exp(pre_.expo.eval(pt).get_d());
  return v;
}

std::optional<RatFun> proportionality(const WaveFunction& f, const WaveFunction& g) {
  if (g.is_zero()) return f.is_zero() ? std::optional<RatFun>(RatFun()) : std::nullopt;
  WaveFunction gg;
  try {
    gg = g.rebase(f.prefactor());
  } catch (const NonClosure&) {
    return std::nullopt;
  }
  RatFun k = f.core() / gg.core();
  if (!coordinate_free(k)) return std::nullopt;
  return k;
}

}  // namespace si
