#include "superint/ratfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "superint/upoly.hpp"

namespace si {

namespace {

// specialise everything except v at fixed pseudo-random small integers
std::map<int, Rational> specialisation(const std::vector<int>& vars, int keep, uint64_t salt) {
  std::mt19937_64 rng(0x5eedULL + salt);
  std::uniform_int_distribution<long> d(2, 1000);
  std::map<int, Rational> out;
  for (int v : vars)
    if (v != keep) out[v] = Rational(d(rng), 1) / Rational(d(rng) % 7 + 1);
  return out;
}

std::vector<int> union_vars(const MPoly& a, const MPoly& b) {
  auto va = a.vars(), vb = b.vars();
  va.insert(va.end(), vb.begin(), vb.end());
  std::sort(va.begin(), va.end());
  va.erase(std::unique(va.begin(), va.end()), va.end());
  return va;
}

bool pretest(const MPoly& num, const MPoly& f) {
  auto fv = f.vars();
  int v = fv.front();
  auto all = union_vars(num, f);
  all.erase(std::remove(all.begin(), all.end(), var::s), all.end());
  auto [a, b] = split_s(num);
  for (uint64_t salt = 0; salt < 2; ++salt) {
    auto sp = specialisation(all, v, salt);
    MPoly fs = f.subs(sp);
    if (fs.deg(v) != f.deg(v)) continue;  // unlucky point, leading coefficient vanished
    UPoly uf = UPoly::from_mpoly(fs, v);
    for (const MPoly* part : {&a, &b}) {
      if (part->is_zero()) continue;
      UPoly up = UPoly::from_mpoly(part->subs(sp), v);
      if (!divmod(up, uf).second.is_zero()) return false;
    }
  }
  return true;
}

MPoly normalise_factor(const MPoly& f, Rational* scale) {
  Rational lc = f.lead_coeff();
  *scale = lc;
  return f * Rational(1 / lc);
}

}  // namespace

bool factor_divides(const MPoly& num, const MPoly& f, MPoly* q) {
  if (num.is_zero()) {
    if (q) *q = MPoly();
    return true;
  }
  if (!pretest(num, f)) return false;
  return divide_exact(num, f, q);
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Symbolic: return "symbolic";
    case Mode::Sampled: return "sampled";
    case Mode::Basis: return "basis";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "symbolic") return Mode::Symbolic;
  if (s == "sampled") return Mode::Sampled;
  if (s == "basis") return Mode::Basis;
  throw std::invalid_argument("unknown mode: " + s);
}

MPoly RatFun::den_poly() const {
  MPoly d(1);
  for (auto& [f, e] : den_) d *= f.pow(static_cast<unsigned>(e));
  return d;
}

bool RatFun::has_var(int v) const {
  if (num_.has_var(v)) return true;
  for (auto& [f, e] : den_)
    if (f.has_var(v)) return true;
  return false;
}

RatFun RatFun::over(const MPoly& num, std::vector<Factor> den) {
  RatFun r;
  r.num_ = reduce_s(num);
  for (auto& [f, e] : den) {
    if (e == 0) continue;
    if (f.is_zero()) throw std::domain_error("zero denominator factor");
    if (f.is_const()) {
      r.num_ *= si::pow(Rational(1 / f.const_value()), e);
      continue;
    }
    if (f.has_var(var::s)) throw std::logic_error("RatFun::over: s in factor");
    Rational sc;
    MPoly g = normalise_factor(f, &sc);
    r.num_ *= si::pow(Rational(1 / sc), e);
    r.den_.emplace_back(g, e);
  }
  r.normalize();
  return r;
}

RatFun RatFun::frac(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  MPoly n = reduce_s(num), d = reduce_s(den);
  if (d.has_var(var::s)) {
    MPoly c = conj_s(d);
    n = n * c;
    d = d * c;
  }
  return over(n, {{d, 1}});
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  // merge equal factors
  std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  std::vector<Factor> merged;
  for (auto& fe : den_) {
    if (!merged.empty() && merged.back().first == fe.first)
      merged.back().second += fe.second;
    else
      merged.push_back(fe);
  }
  den_.clear();
  bool split = false;
  for (auto& [f, e] : merged) {
    MPoly q;
    while (e > 0 && factor_divides(num_, f, &q)) {
      num_ = std::move(q);
      --e;
    }
    if (e == 0) continue;
    // univariate: cancel a proper common divisor too
    auto fv = f.vars();
    if (fv.size() == 1 && f.deg(fv[0]) > 1) {
      auto nv = num_.vars();
      if (nv.size() == 1 && nv[0] == fv[0]) {
        UPoly g = gcd(UPoly::from_mpoly(num_, fv[0]), UPoly::from_mpoly(f, fv[0]));
        if (g.deg() > 0) {
          MPoly gm = g.to_mpoly(fv[0]), h;
          divide_exact(f, gm, &h);
          den_.emplace_back(gm, e);
          den_.emplace_back(h, e);
          split = true;
          continue;
        }
      }
    }
    den_.emplace_back(f, e);
  }
  if (split) {
    for (auto& fe : den_) {
      Rational sc;
      fe.first = normalise_factor(fe.first, &sc);
      num_ *= si::pow(Rational(1 / sc), fe.second);
    }
    normalize();
    return;
  }
  std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

static RatFun add_impl(const RatFun& a, const RatFun& b, bool sub) {
  if (a.is_zero()) return sub ? -b : b;
  if (b.is_zero()) return a;
  if (a.den().empty() && b.den().empty()) return RatFun(sub ? a.num() - b.num() : a.num() + b.num());
  // common denominator with maximal multiplicities
  std::map<MPoly, std::pair<int, int>> mult;
  for (auto& [f, e] : a.den()) mult[f].first = e;
  for (auto& [f, e] : b.den()) mult[f].second = e;
  MPoly na = a.num(), nb = b.num();
  std::vector<RatFun::Factor> den;
  for (auto& [f, ee] : mult) {
    int m = std::max(ee.first, ee.second);
    if (m > ee.first) na *= f.pow(static_cast<unsigned>(m - ee.first));
    if (m > ee.second) nb *= f.pow(static_cast<unsigned>(m - ee.second));
    den.emplace_back(f, m);
  }
  return RatFun::over(sub ? na - nb : na + nb, std::move(den));
}

RatFun operator+(const RatFun& a, const RatFun& b) { return add_impl(a, b, false); }
RatFun operator-(const RatFun& a, const RatFun& b) { return add_impl(a, b, true); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.den().empty() && b.den().empty()) return RatFun(a.num() * b.num());
  std::vector<RatFun::Factor> den = a.den();
  den.insert(den.end(), b.den().begin(), b.den().end());
  if (b.is_const()) {
    RatFun r = a;
    return RatFun::over(a.num() * b.const_value(), a.den());
  }
  return RatFun::over(a.num() * b.num(), std::move(den));
}

RatFun RatFun::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  MPoly n = den_poly();
  return frac(n, num_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_const()) return RatFun::over(a.num() * Rational(1 / b.const_value()), a.den());
  if (b.den().empty() && !b.num().has_var(var::s)) {
    std::vector<RatFun::Factor> den = a.den();
    den.emplace_back(b.num(), 1);
    return RatFun::over(a.num(), std::move(den));
  }
  return a * b.inv();
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  RatFun r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

RatFun RatFun::diff(int v) const {
  // d/dv (N / prod f_i^e_i)
  std::vector<size_t> moving;
  for (size_t i = 0; i < den_.size(); ++i)
    if (den_[i].first.has_var(v)) moving.push_back(i);
  MPoly dn = num_.diff(v);
  MPoly top = dn;
  for (size_t i : moving) top *= den_[i].first;
  for (size_t i : moving) {
    MPoly term = num_ * den_[i].first.diff(v) * Rational(den_[i].second);
    for (size_t j : moving)
      if (j != i) term *= den_[j].first;
    top -= term;
  }
  std::vector<Factor> den = den_;
  for (size_t i : moving) den[i].second += 1;
  RatFun out = over(top, den);
  if (v == var::x && num_.has_var(var::s)) {
    // ds/dx = -x/s = x s / ((x-1)(x+1))
    MPoly ds = num_.diff(var::s);
    MPoly xs = MPoly::gen(var::x) * MPoly::gen(var::s) * ds;
    std::vector<Factor> d2 = den_;
    d2.emplace_back(MPoly::gen(var::x) - MPoly(1), 1);
    d2.emplace_back(MPoly::gen(var::x) + MPoly(1), 1);
    out += over(xs, std::move(d2));
  }
  return out;
}

RatFun RatFun::subs(const std::map<int, Rational>& vals) const {
  std::vector<Factor> den;
  for (auto& [f, e] : den_) {
    MPoly g = f.subs(vals);
    if (g.is_zero()) throw std::domain_error("pole at substitution");
    den.emplace_back(g, e);
  }
  MPoly n = num_.subs(vals);
  if (vals.count(var::s)) {
    // s was given a value consistent with x; nothing to reduce
  }
  return over(n, std::move(den));
}

RatFun RatFun::subs(int v, const RatFun& val) const {
  auto horner = [&](const MPoly& p) {
    auto cs = p.coeffs_in(v);
    RatFun out;
    if (cs.empty()) return out;
    for (int k = cs.rbegin()->first; k >= 0; --k) {
      out = out * val;
      auto it = cs.find(k);
      if (it != cs.end()) out += RatFun(it->second);
    }
    return out;
  };
  RatFun r = horner(num_);
  for (auto& [f, e] : den_) r /= horner(f).pow(e);
  return r;
}

Rational RatFun::eval(const std::map<int, Rational>& vals) const {
  Rational d = 1;
  for (auto& [f, e] : den_) {
    Rational fv = f.eval(vals);
    if (fv == 0) throw std::domain_error("pole at evaluation point");
    d *= si::pow(fv, e);
  }
  return num_.eval(vals) / d;
}

std::string RatFun::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(";
  bool first = true;
  for (auto& [f, e] : den_) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.str() << ")";
    if (e > 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

std::pair<Rational, Rational> circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

bool ratfun_equal(const RatFun& f, const RatFun& g, Mode mode, SampleSpec spec) {
  if (mode != Mode::Sampled) return (f - g).is_zero();
  std::vector<int> vars;
  for (int v = 0; v < var::count(); ++v)
    if (f.has_var(v) || g.has_var(v)) vars.push_back(v);
  bool circle = std::find(vars.begin(), vars.end(), var::s) != vars.end();
  std::mt19937_64 rng(spec.seed);
  int done = 0, retries = 0;
  while (done < spec.trials) {
    std::map<int, Rational> pt;
    for (int v : vars) pt[v] = random_rational(rng);
    if (circle) {
      Rational t = abs(random_rational(rng));
      if (t == 0) t = 1;
      auto [xv, sv] = circle_point(t);
      pt[var::x] = xv;
      pt[var::s] = sv;
    }
    try {
      if (f.eval(pt) != g.eval(pt)) return false;
      ++done;
    } catch (const std::domain_error&) {
      if (++retries > 50) throw std::runtime_error("ratfun_equal: too many pole hits");
    }
  }
  return true;
}

}  // namespace si
