#include "superint/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace si {

void UPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

UPoly UPoly::from_mpoly(const MPoly& p, int v) {
  UPoly u;
  for (auto& [m, q] : p.terms()) {
    for (int i = 0; i < kMaxVars; ++i)
      if (i != v && m.e[i]) throw std::logic_error("not univariate in " + var::name(v) + ": " + p.str());
    size_t k = m.e[v];
    if (u.c.size() <= k) u.c.resize(k + 1);
    u.c[k] += q;
  }
  u.trim();
  return u;
}

MPoly UPoly::to_mpoly(int v) const {
  std::vector<MPoly::Term> t;
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) {
      Mono m;
      m.e[v] = static_cast<uint8_t>(k);
      t.emplace_back(m, c[k]);
    }
  return MPoly::from_terms(std::move(t));
}

Rational UPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

double UPoly::eval(double x) const {
  double r = 0;
  for (size_t k = c.size(); k-- > 0;) r = r * x + c[k].get_d();
  return r;
}

UPoly UPoly::deriv() const {
  UPoly d;
  for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * static_cast<long>(k));
  d.trim();
  return d;
}

UPoly UPoly::monic() const {
  if (c.empty()) return *this;
  UPoly m = *this;
  Rational l = c.back();
  for (auto& q : m.c) q /= l;
  return m;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  UPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly q, r = a;
  if (a.deg() < b.deg()) return {q, r};
  q.c.assign(static_cast<size_t>(a.deg() - b.deg() + 1), Rational(0));
  Rational il = 1 / b.lc();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int sh = r.deg() - b.deg();
    Rational f = r.lc() * il;
    q.c[static_cast<size_t>(sh)] = f;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i + static_cast<size_t>(sh)] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.deg() < 1) return p.monic();
  UPoly g = gcd(p, p.deriv());
  return divmod(p, g).first.monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  UPoly sf = squarefree_part(p);
  seq.push_back(sf);
  seq.push_back(sf.deriv());
  while (!seq.back().is_zero()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    UPoly neg;
    for (auto& q : r.c) neg.c.push_back(-q);
    neg.trim();
    if (neg.is_zero()) break;
    seq.push_back(neg);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

static int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (auto& p : seq) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sturm_count(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.deg() < 1) return 0;
  auto seq = sturm_sequence(p);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

int roots_in_closed(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.deg() < 1) return 0;
  int n = sturm_count(p, a, b);
  if (p.eval(a) == 0) ++n;
  return n;
}

Rational simplest_between(Rational lo, Rational hi) {
  // Stern-Brocot descent via continued fractions
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rational f(fl);
  if (f == lo) return lo;
  if (f + 1 <= hi) return f + 1;
  // lo, hi in (f, f+1)
  Rational inv = simplest_between(1 / (hi - f), 1 / (lo - f));
  return f + 1 / inv;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> out;
  if (p.deg() < 1) return out;
  UPoly sf = squarefree_part(p);
  if (sf.c[0] == 0) {
    out.push_back(0);
    sf = divmod(sf, UPoly({Rational(0), Rational(1)})).first;
  }
  if (sf.deg() < 1) return out;
  // integer primitive form to bound denominators of rational roots by |lc|
  Integer l = 1;
  for (auto& q : sf.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ic;
  for (auto& q : sf.c) ic.push_back(Integer(q * Rational(l)));
  Integer lc = abs(ic.back());
  // Cauchy bound
  Rational bound = 0;
  for (size_t i = 0; i + 1 < sf.c.size(); ++i) bound = std::max(bound, Rational(abs(sf.c[i] / sf.lc())));
  bound += 1;
  auto seq = sturm_sequence(sf);
  Rational gap = Rational(1, 2) / Rational(lc * lc);
  // isolate by bisection
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = sign_changes(seq, a) - sign_changes(seq, b);
    if (n == 0) continue;
    if (n == 1 && b - a < gap) {
      Rational cand = simplest_between(a, b);
      if (sf.eval(cand) == 0) out.push_back(cand);
      else if (sf.eval(b) == 0) out.push_back(b);
      continue;
    }
    if (n == 1 && sf.eval(b) == 0) {
      out.push_back(b);
      continue;
    }
    Rational mid = (a + b) / 2;
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace si
