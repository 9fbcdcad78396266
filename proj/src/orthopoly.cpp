#include "superint/orthopoly.hpp"

#include <stdexcept>

#include "superint/upoly.hpp"

namespace si {

MPoly hermite(int n, int v) {
  MPoly x = MPoly::gen(v), h0(1), h1 = x * Rational(2);
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    MPoly h2 = x * h1 * Rational(2) - h0 * Rational(2 * k);
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

MPoly pseudo_hermite(int k, int v) {
  // i^{-n} H_n(i x) obeys p_{n+1} = 2x p_n + 2n p_{n-1}
  MPoly x = MPoly::gen(v), h0(1), h1 = x * Rational(2);
  if (k == 0) return h0;
  for (int j = 1; j < k; ++j) {
    MPoly h2 = x * h1 * Rational(2) + h0 * Rational(2 * j);
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

MPoly laguerre(int n, const MPoly& a, const MPoly& arg) {
  // (k+1) L_{k+1} = (2k+1+a-y) L_k - (k+a) L_{k-1}
  MPoly l0(1), l1 = MPoly(1) + a - arg;
  if (n == 0) return l0;
  for (int k = 1; k < n; ++k) {
    MPoly l2 = (MPoly(2 * k + 1) + a - arg) * l1 - (MPoly(k) + a) * l0;
    l2 *= Rational(1, k + 1);
    l0 = std::move(l1);
    l1 = std::move(l2);
  }
  return l1;
}

MPoly jacobi(int n, const MPoly& a, const MPoly& b, int v) {
  MPoly x = MPoly::gen(v);
  MPoly p0(1);
  if (n == 0) return p0;
  MPoly p1 = ((a + b + MPoly(2)) * x + a - b) * Rational(1, 2);
  for (int k = 2; k <= n; ++k) {
    MPoly s = MPoly(2 * k) + a + b;  // 2k + a + b
    MPoly c1 = (s - MPoly(1)) * (s * (s - MPoly(2)) * x + a * a - b * b);
    MPoly c2 = (MPoly(k - 1) + a) * (MPoly(k - 1) + b) * s * Rational(2);
    MPoly den = (MPoly(k) + a + b) * (s - MPoly(2)) * Rational(2 * k);
    MPoly num = c1 * p1 - c2 * p0, q;
    if (den.is_zero() || !divide_exact(num, den, &q)) return jacobi_2f1(n, a, b, v);  // degenerate parameters
    p0 = std::move(p1);
    p1 = std::move(q);
  }
  return p1;
}

MPoly hermite_2f0(int n, int v) {
  // (2x)^n sum_k (-n/2)_k (-(n-1)/2)_k / k! (-1/x^2)^k
  MPoly x = MPoly::gen(v), out;
  Rational poch = 1;
  for (int k = 0; 2 * k <= n; ++k) {
    if (k > 0) poch *= (Rational(-n, 2) + (k - 1)) * (Rational(-(n - 1), 2) + (k - 1)) / Rational(k);
    Rational c = poch * ((k % 2) ? -1 : 1) * si::pow(Rational(2), n);
    out += x.pow(static_cast<unsigned>(n - 2 * k)) * c;
  }
  return out;
}

MPoly jacobi_2f1(int n, const MPoly& a, const MPoly& b, int v) {
  // sum_k (-n)_k (n+a+b+1)_k (a+k+1)_{n-k} / (n! k!) ((1-x)/2)^k
  MPoly y = (MPoly(1) - MPoly::gen(v)) * Rational(1, 2), out;
  Integer nf = 1;
  for (int i = 2; i <= n; ++i) nf *= i;
  for (int k = 0; k <= n; ++k) {
    MPoly c(1);
    Integer kf = 1;
    for (int i = 2; i <= k; ++i) kf *= i;
    for (int i = 0; i < k; ++i) c *= MPoly(-n + i) * (MPoly(n + 1 + i) + a + b);
    for (int i = 0; i < n - k; ++i) c *= a + MPoly(k + 1 + i);
    out += c * y.pow(static_cast<unsigned>(k)) * Rational(1 / Rational(nf * kf));
  }
  return out;
}

RatFun wronskian(const RatFun& f, const RatFun& g, int v) { return f.diff(v) * g - g.diff(v) * f; }

ExceptionalPoly exceptional_hermite(int k, int n) {
  if (k < 2 || k % 2) throw std::invalid_argument("exceptional_hermite: k must be even and >= 2");
  ExceptionalPoly e{"xhermite", k, 0, n, MPoly()};
  if (n == 0) {
    e.poly = MPoly(1);
    return e;
  }
  if (n < k) throw GapError("exceptional_hermite: n=" + std::to_string(n) + " lies in the gap 1..k-1");
  e.poly = -(pseudo_hermite(k) * hermite(n - k)) - pseudo_hermite(k - 1) * hermite(n - k + 1) * Rational(2 * k);
  return e;
}

ExceptionalPoly exceptional_hermite_state(int k, int n) {
  if (k < 2 || k % 2) throw std::invalid_argument("exceptional_hermite_state: k must be even and >= 2");
  ExceptionalPoly e{"xhermite", k, 0, n, MPoly(1)};
  if (n == 0) return e;
  if (n <= k) throw GapError("exceptional_hermite_state: n=" + std::to_string(n) + " lies in the gap 1..k");
  e.poly = -(pseudo_hermite(k) * hermite(n - k)) - pseudo_hermite(k - 1) * hermite(n - k - 1) * Rational(2 * k);
  return e;
}

ExceptionalPoly exceptional_jacobi(int m, int n, const MPoly& a, const MPoly& b, bool printed_sign) {
  if (m < 1 || n < 0) throw std::invalid_argument("exceptional_jacobi: need m >= 1, n >= 0");
  MPoly pm = jacobi(m, -a - MPoly(1), b - MPoly(1));
  MPoly pn = jacobi(n, a + MPoly(1), b - MPoly(1));
  MPoly x = MPoly::gen(var::x);
  MPoly w = pm * pn.diff(var::x) - pm.diff(var::x) * pn;  // = -wronskian(pm, pn)
  if (printed_sign) w = -w;
  ExceptionalPoly e{"xjacobi", 0, m, n, MPoly()};
  e.poly = (MPoly(1) - x) * w * Rational(2) - (a + MPoly(1)) * pm * pn * Rational(2);
  return e;
}

bool seed_regular(int m, const Rational& a, const Rational& b) {
  MPoly pm = jacobi(m, MPoly(-a - 1), MPoly(b - 1));
  UPoly u = UPoly::from_mpoly(pm, var::x);
  if (u.deg() < m) return false;  // degree drop, treat as irregular
  return roots_in_closed(u, -1, 1) == 0;
}

}  // namespace si
