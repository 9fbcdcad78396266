#include "superint/palgebra.hpp"

#include <random>
#include <stdexcept>

#include "superint/upoly.hpp"

namespace si {

namespace {

using json = nlohmann::json;

MPoly G(int v) { return MPoly::gen(v); }
MPoly Q(long n, long d = 1) { return MPoly(rat(n, d)); }
std::string num(long n) { return std::to_string(n); }

std::map<int, Rational> values(const AlgebraPoint& pt) {
  return {{var::alpha, pt.alpha}, {var::beta, pt.beta}, {var::omega, pt.omega}, {var::m, Rational(pt.m)}};
}

Rational level_energy(const AlgebraPoint& pt, int p) { return pt.omega * (2 * p + 2 + pt.alpha + pt.beta); }

// printed formulas are written for alpha of the opposite sign
AlgebraPoint flipped(const AlgebraPoint& pt) {
  AlgebraPoint q = pt;
  q.alpha = -pt.alpha;
  return q;
}

// RatFun in E only -> MPoly in E
MPoly as_e_poly(const RatFun& f) {
  if (!f.is_poly()) throw std::logic_error("expected a polynomial in E");
  return f.num();
}

MPoly e_poly(const std::vector<Rational>& c) {
  MPoly p;
  for (size_t d = 0; d < c.size(); ++d) p += MPoly(c[d]) * G(var::E).pow(static_cast<unsigned>(d));
  return p;
}

Rational eval_e(const MPoly& p, const Rational& E) { return p.eval({{var::E, E}}); }

struct Slot {
  std::string name;
  RMat (*mat)(const Level&);
};

RMat sX(const Level& l) { return l.X; }
RMat sY(const Level& l) { return l.Y; }
RMat sI(const Level& l) { return RMat::identity(l.X.rows); }
RMat sXX(const Level& l) { return l.X * l.X; }
RMat sXXX(const Level& l) { return l.X * l.X * l.X; }
RMat sYY(const Level& l) { return l.Y * l.Y; }
RMat sXY(const Level& l) { return anticommutator(l.X, l.Y); }

// solves lhs = sum_s c_s(E) slot_s over all levels
LinearSolution fit_relation(const std::vector<Level>& levels, const std::vector<Slot>& slots,
                            RMat (*lhs)(const Level&), int edeg, int* neq) {
  int nu = static_cast<int>(slots.size()) * (edeg + 1);
  int rows = 0;
  for (auto& l : levels) rows += l.X.rows * l.X.cols;
  RMat A(rows, nu);
  std::vector<Rational> b(rows);
  int r = 0;
  for (auto& l : levels) {
    RMat L = lhs(l);
    std::vector<RMat> ms;
    for (auto& s : slots) ms.push_back(s.mat(l));
    for (int i = 0; i < l.X.rows; ++i)
      for (int j = 0; j < l.X.cols; ++j, ++r) {
        b[r] = L(i, j);
        for (size_t s = 0; s < slots.size(); ++s) {
          Rational e = 1;
          for (int d = 0; d <= edeg; ++d, e *= l.E) A(r, static_cast<int>(s) * (edeg + 1) + d) = e * ms[s](i, j);
        }
      }
  }
  *neq = rows;
  return solve_linear(A, b);
}

RMat lhs1(const Level& l) { return commutator(l.X, l.Z); }
RMat lhs2(const Level& l) { return commutator(l.Y, l.Z); }

}  // namespace

std::string AlgebraPoint::str() const {
  return "alpha=" + to_string(alpha) + ", beta=" + to_string(beta) + ", omega=" + to_string(omega) + ", m=" + num(m);
}

Level level_matrices(const AlgebraPoint& pt, int p, const Rational& scale) {
  const Rational &a = pt.alpha, &b = pt.beta, &w = pt.omega;
  Rational cm = 2 * pt.m - a + b - 1;
  cm *= cm;
  Rational kappa = (a + b) * (a - b + 2);
  Level l;
  l.p = p;
  l.E = level_energy(pt, p);
  l.X = RMat(p + 1, p + 1);
  l.Y = RMat(p + 1, p + 1);
  for (int n = 0; n <= p; ++n) {
    int k = p - n;
    Rational L = 2 * n + 1 + a + b, shift = L * L - cm;
    l.X(n, n) = L * L;
    l.Y(n, n) = kappa * shift * l.E / (2 * (1 - L * L));
    if (n >= 1) {
      Rational xim = -8 * w * (k + 1) * (k + L) * (n + b - 1) * (n + a + 1) * shift;
      l.Y(n - 1, n) = xim / (4 * (1 - L) * L);
    }
    if (n + 1 <= p) {
      Rational xip = -8 * w * (n + 1) * (n + a + b + 1) * shift;
      l.Y(n + 1, n) = -xip / (4 * (1 + L) * L);
    }
  }
  l.Y = scale * l.Y;
  l.Z = commutator(l.X, l.Y);
  return l;
}

AlgebraFit fit_algebra(const AlgebraPoint& pt, int pmax, const Rational& scale, int edeg) {
  std::vector<Level> levels;
  for (int p = 0; p <= pmax; ++p) levels.push_back(level_matrices(pt, p, scale));
  std::vector<Slot> r1{{"a", sXX}, {"b", sXY}, {"c", sX}, {"d", sY}, {"f", sI}};
  std::vector<Slot> r2{{"g", sXXX}, {"h", sXX}, {"b2", sYY}, {"a2", sXY}, {"i", sX}, {"c2", sY}, {"j", sI}};
  AlgebraFit F;
  int n1 = 0, n2 = 0;
  LinearSolution s1 = fit_relation(levels, r1, lhs1, edeg, &n1);
  LinearSolution s2 = fit_relation(levels, r2, lhs2, edeg, &n2);
  F.unknowns = static_cast<int>(r1.size() + r2.size()) * (edeg + 1);
  F.equations = n1 + n2;
  F.rank = s1.rank + s2.rank;
  F.consistent = s1.consistent && s2.consistent;
  auto take = [&](const std::vector<Slot>& slots, const LinearSolution& s) {
    for (size_t i = 0; i < slots.size(); ++i)
      F.coeff[slots[i].name] =
          e_poly(std::vector<Rational>(s.x.begin() + i * (edeg + 1), s.x.begin() + (i + 1) * (edeg + 1)));
  };
  take(r1, s1);
  take(r2, s2);
  std::vector<Slot> r2_no_x{{"g", sXXX}, {"h", sXX}, {"b2", sYY}, {"a2", sXY}, {"c2", sY}, {"j", sI}};
  int n3 = 0;
  F.i_on_X = !fit_relation(levels, r2_no_x, lhs2, edeg, &n3).consistent;
  return F;
}

std::vector<std::optional<Rational>> casimir_levels(const AlgebraPoint& pt, const AlgebraFit& fit, int pmax,
                                                   const Rational& scale) {
  std::vector<std::optional<Rational>> out;
  for (int p = 0; p <= pmax; ++p) {
    Level l = level_matrices(pt, p, scale);
    auto c = [&](const char* n) { return eval_e(fit.coeff.at(n), l.E); };
    Rational a = c("a"), b = c("b"), cc = c("c"), d = c("d"), f = c("f");
    Rational g = c("g"), h = c("h"), i = c("i"), j = c("j");
    const RMat &A = l.X, &B = l.Y, &C = l.Z;
    RMat A2 = A * A, B2 = B * B;
    RMat K = C * C - a * anticommutator(A2, B) - b * anticommutator(A, B2) + (a * b - cc) * anticommutator(A, B) +
             (b * b - d) * B2 + (b * cc - 2 * f) * B + (g / 2) * (A2 * A2) + (Rational(2, 3) * (b * g + h)) * (A2 * A) +
             (a * a - b * b * g / 6 + b * h / 3 + d * g / 2 + i) * A2 + (a * cc - b * d * g / 6 + d * h / 3 + 2 * j) * A;
    out.push_back(K.scalar());
  }
  return out;
}

std::map<std::string, RatFun> printed_algebra() {
  MPoly a = G(var::alpha), b = G(var::beta), m = G(var::m), H = G(var::E);
  RatFun w(G(var::omega));
  MPoly c1 = Q(-1) + a + b + m * Rational(2);
  std::map<std::string, RatFun> P;
  P["a"] = RatFun(0);
  P["b"] = RatFun(8);
  P["c"] = RatFun((a * Rational(-2) + a * a + b * Rational(2) - b * b) * H * Rational(4)) / w;
  P["d"] = RatFun(-16);
  P["f"] = RatFun((a - b) * (Q(-2) + a + b) * c1 * c1 * H * Rational(-4)) / w;
  P["g"] = RatFun(-2);
  P["h"] = RatFun((Q(-1) + a * a * Rational(3) + b * b * Rational(3) + b * (Q(-1) + m) * Rational(6) +
                   (Q(-1) + m) * m * Rational(6) + a * (Q(-2) + b + m * Rational(2)) * Rational(3)) *
                  Rational(2)) +
           RatFun(H * H * Rational(3, 2)) / (w * w);
  MPoly i0 = a.pow(4) * Rational(-3) - (Q(-1) + b).pow(2) * (Q(-5) + (Q(-2) + b) * b * Rational(3)) -
             (Q(1) + b * (Q(5) + (Q(-3) + b) * b * Rational(3))) * m * Rational(4) -
             (Q(1) + (Q(-2) + b) * b * Rational(5)) * m * m * Rational(4) - (Q(-1) + b) * m.pow(3) * Rational(16) -
             m.pow(4) * Rational(8) - a.pow(3) * (Q(-2) + b + m * Rational(2)) * Rational(6) -
             a * a * (Q(5) + b * b * Rational(3) + b * (Q(-1) + m) * Rational(10) + m * (Q(-9) + m * Rational(5)) * Rational(2)) *
                 Rational(2) -
             a *
                 (Q(2) + b.pow(3) * Rational(3) + b * b * (Q(-1) + m) * Rational(10) + m * Rational(10) +
                  m * m * (Q(-5) + m * Rational(2)) * Rational(4) + b * (Q(7) + m * (Q(-7) + m * Rational(3)) * Rational(4))) *
                 Rational(2);
  MPoly i2 = Q(-3) + b * Rational(8) + m * Rational(8) -
             (a * a + b * b + b * m * Rational(2) + m * m * Rational(2) + a * (Q(-2) + b + m * Rational(2))) * Rational(4);
  P["i"] = RatFun(i0 * Rational(2)) + RatFun(i2 * H * H) / (w * w);
  MPoly j0 = c1 * c1 *
             (a.pow(4) + a.pow(3) * (Q(-4) + b + m * Rational(2)) +
              a * (Q(4) + (Q(-3) + b) * b - m * Rational(2)) * (Q(1) + b + m * Rational(2)) +
              a * a * (Q(1) + b * (Q(-1) + m) + (Q(-3) + m) * m) * Rational(2) +
              (Q(-1) + b).pow(2) * (Q(-3) + b * b + b * (Q(-1) + m) * Rational(2) + (Q(-1) + m) * m * Rational(2))) *
             Rational(2);
  MPoly jq = Q(3) + a * a * Rational(5) + (Q(-2) + b) * b * Rational(5) - m * Rational(4) + b * m * Rational(4) +
             m * m * Rational(4) + a * (Q(-5) + b + m * Rational(2)) * Rational(2);
  // as printed: (c1^2/(2 w^2) + jq) H^2
  P["j"] = RatFun(j0) + (RatFun(c1 * c1) / (RatFun(2) * w * w) + RatFun(jq)) * RatFun(H * H);
  // the product reading of the same bracket
  P["j_grouped"] = RatFun(j0) + RatFun(c1 * c1 * jq * H * H) / (RatFun(2) * w * w);
  return P;
}

std::map<std::string, RatFun> printed_casimir() {
  MPoly a = G(var::alpha), b = G(var::beta), m = G(var::m), H = G(var::E);
  RatFun w(G(var::omega));
  MPoly c1 = Q(-1) + a + b + m * Rational(2);
  MPoly q4 = Q(-3) + a.pow(4) * Rational(2) + b.pow(4) * Rational(2) + b.pow(3) * (Q(-1) + m) * Rational(8) -
             m * Rational(20) + m * m * Rational(20) + a.pow(3) * (Q(-2) + b + m * Rational(2)) * Rational(4) +
             a *
                 (Q(-7) + b.pow(3) * Rational(2) + b * (Q(13) - m * Rational(16)) + b * b * (Q(-2) + m) * Rational(4) +
                  m * Rational(18) - m * m * Rational(8)) *
                 Rational(2) +
             b * b * (Q(15) - m * Rational(24) + m * m * Rational(8)) +
             a * a * (Q(15) + b * b * Rational(4) + b * (Q(-2) + m) * Rational(8) - m * Rational(24) + m * m * Rational(8)) -
             b * (Q(7) - m * Rational(18) + m * m * Rational(8)) * Rational(2);
  MPoly p6 =
      a.pow(6) + a.pow(5) * (Q(-3) + b + m * Rational(2)) * Rational(2) -
      a.pow(4) * (Q(-15) + b * b + b * (Q(6) - m * Rational(4)) + m * Rational(20) - m * m * Rational(4)) -
      a.pow(3) * (Q(5) - b + b.pow(3) - m * Rational(10) + m * m * Rational(4) + b * b * (Q(-3) + m * Rational(2))) *
          Rational(4) +
      (Q(-1) + b).pow(2) * (Q(-15) + b.pow(4) + b.pow(3) * (Q(-1) + m) * Rational(4) - m * Rational(4) +
                            m * m * Rational(4) + b * b * (Q(3) - m * Rational(6) + m * m * Rational(2)) * Rational(2) -
                            b * (Q(1) - m * Rational(3) + m * m * Rational(2)) * Rational(4)) +
      a *
          (Q(13) + b.pow(3) * Rational(2) + b.pow(5) + m * Rational(10) - m * m * Rational(8) +
           b.pow(4) * (Q(-3) + m * Rational(2)) + b * (Q(5) - m * m * Rational(16)) +
           b * b * (Q(-1) - m * Rational(6) + m * m * Rational(4)) * Rational(2)) *
          Rational(2) -
      a * a *
          (Q(1) + b.pow(4) + m * Rational(40) - m * m * Rational(24) + b.pow(3) * (Q(-3) + m * Rational(2)) * Rational(4) +
           b * (Q(4) + m * Rational(24) - m * m * Rational(16)) + b * b * (Q(22) - m * Rational(40) + m * m * Rational(8)));
  std::map<std::string, RatFun> K;
  K["literal"] = RatFun(c1 * c1) / (w * w) + RatFun(q4 * H * H) + RatFun(c1 * c1 * p6);
  K["grouped"] = RatFun(c1 * c1 * q4 * H * H) / (w * w) + RatFun(c1 * c1 * p6);
  return K;
}

std::vector<MPoly> phi_expanded_parts() {
  MPoly a = G(var::alpha), b = G(var::beta), m = G(var::m), h = G(var::E), w = G(var::omega), t = G(var::t);
  MPoly e1 = Q(-4) * a.pow(3) + a.pow(4) - Q(4) * b.pow(3) + b.pow(4) +
             Q(4) * a * (Q(-2) * b + b * b + (Q(1) - t).pow(2)) + Q(4) * b * (Q(1) - Q(2) * t).pow(2) +
             b * b * (Q(2) + Q(8) * t - Q(8) * t * t) + a * a * (Q(2) + Q(4) * b - Q(2) * b * b + Q(8) * t - Q(8) * t * t) +
             (Q(1) - Q(2) * t).pow(2) * (Q(-3) - Q(4) * t + Q(4) * t * t);
  MPoly en = -(h * h) + (Q(1) - Q(2) * t).pow(2) * w * w;
  MPoly e2 = Q(-3) + a.pow(4) + b.pow(4) + Q(8) * t + Q(8) * t * t - Q(32) * t.pow(3) + Q(16) * t.pow(4) + Q(8) * m -
             Q(32) * t * m + Q(32) * t * t * m + Q(8) * m * m + Q(32) * t * m * m - Q(32) * t * t * m * m -
             Q(32) * m.pow(3) + Q(16) * m.pow(4) + Q(4) * a.pow(3) * (Q(-1) + b + Q(2) * m) +
             b.pow(3) * (Q(-4) + Q(8) * m) +
             Q(4) * b * (Q(-1) + Q(2) * m) * (Q(-1) + Q(4) * t - Q(4) * t * t - Q(4) * m + Q(4) * m * m) +
             b * b * (Q(2) + Q(8) * t - Q(8) * t * t - Q(24) * m + Q(24) * m * m) +
             Q(2) * a * a *
                 (Q(1) + Q(3) * b * b + Q(4) * t - Q(4) * t * t - Q(12) * m + Q(12) * m * m + Q(6) * b * (Q(-1) + Q(2) * m)) +
             Q(4) * a * (Q(-1) + b + Q(2) * m) *
                 (Q(-1) + b * b + Q(4) * t - Q(4) * t * t - Q(4) * m + Q(4) * m * m + b * (Q(-2) + Q(4) * m));
  return {e1, en, e2};
}

MPoly phi_expanded() {
  auto p = phi_expanded_parts();
  return p[0] * p[1] * p[2];
}

Integer phi_constant() { return Integer("-13510798882111488"); }

RatFun phi_factored() {
  MPoly a = G(var::alpha), b = G(var::beta), m = G(var::m), H = G(var::E), t = G(var::t);
  RatFun w(G(var::omega));
  auto lin = [&](const MPoly& root2) { return RatFun(t - root2 * Rational(1, 2)); };  // t - root2/2
  RatFun out{Rational(phi_constant())};
  out *= lin(Q(3) - a - b) * lin(Q(1) + a - b) * lin(Q(1) - a + b) * lin(Q(-1) + a + b);
  out *= (RatFun(t) - (RatFun(-H) + w) / (RatFun(2) * w)) * (RatFun(t) - (RatFun(H) + w) / (RatFun(2) * w));
  out *= lin(Q(1) - a - b - m * Rational(2)) * lin(Q(3) - a - b - m * Rational(2)) * lin(Q(-1) + a + b + m * Rational(2)) *
         lin(Q(1) + a + b + m * Rational(2));
  return out;
}

Report verify_algebra(int m, const AlgebraOptions& opt) {
  Report rep;
  const std::string pfx = "algebra[m=" + num(m) + "].";
  std::vector<AlgebraPoint> pts{{rat(5, 2), rat(7, 2), rat(3, 2), m}};
  if (opt.mode == Mode::Sampled) {
    std::mt19937_64 rng(opt.spec.seed * 1000003 + 7 * m);
    for (int t = 0; t < opt.spec.trials; ++t) {
      RMParams q = RMParams::sample(rng);
      pts.push_back({q.alpha.const_value(), q.beta.const_value(), q.omega.const_value(), m});
    }
  }
  const AlgebraPoint& p0 = pts.front();

  {
    Check c(pfx + "L4_matrix", "L4 acts on a level through the Xi coefficients and the pole-removal diagonal", Mode::Basis);
    timed(c, [&] {
      RosenMorseSystem sys = build_rosen_morse(m, p0.params());
      IntegralL4 I = build_L4(sys, pole_term(sys));
      c.expect(I.pole_free && I.odd, "L4 construction failed");
      if (!I.odd) return;
      for (int p = 0; p <= opt.cross_check_levels; ++p) {
        Level l = level_matrices(p0, p);
        std::vector<WaveFunction> basis;
        for (int n = 0; n <= p; ++n) basis.push_back(phi(sys, p - n, n));
        for (int n = 0; n <= p; ++n) {
          WaveFunction g = I.L4.apply(basis[n]), pred = basis[0] * RatFun(l.Y(0, n));
          for (int r = 1; r <= p; ++r) pred = pred + basis[r] * RatFun(l.Y(r, n));
          c.expect((g - pred).is_zero(), "L4 Phi_{" + num(p - n) + "," + num(n) + "} differs from the level matrix");
          WaveFunction z = I.L5.apply(basis[n]), zp = basis[0] * RatFun(l.Z(0, n));
          for (int r = 1; r <= p; ++r) zp = zp + basis[r] * RatFun(l.Z(r, n));
          c.expect((z - zp).is_zero(), "L5 Phi_{" + num(p - n) + "," + num(n) + "} differs from [X, Y]");
        }
      }
      c.constants["levels_checked"] = opt.cross_check_levels;
      c.constants["point"] = p0.str();
    });
    rep.add(c);
  }

  auto P = printed_algebra();
  auto PK = printed_casimir();
  Check cl(pfx + "closure", "[L2,L5] and [L4,L5] close cubically with coefficients polynomial in H", opt.mode);
  Check cc(pfx + "coefficients", "a = 0, b = 8, d = -16, g = -2 and the displayed c, f, h, i, j", opt.mode);
  Check ck(pfx + "casimir", "the cubic Casimir is a scalar on every level and equals the displayed K", opt.mode);
  Check cy(pfx + "Y0", "diagonal part Y0(N) of the deformed-oscillator realisation", opt.mode);
  json fits = json::array();
  for (const AlgebraPoint& pt : pts) {
    const Rational nu = 1 / (2 * pt.omega);  // printed generator is L4 / (2 omega)
    AlgebraFit raw, F;
    timed(cl, [&] {
      raw = fit_algebra(pt, opt.pmax, 1);
      F = fit_algebra(pt, opt.pmax, nu);
      const std::string at = " at " + pt.str();
      cl.expect(raw.consistent && F.consistent, "closure system is inconsistent" + at);
      cl.expect(F.rank == F.unknowns, "fit is not unique: rank " + num(F.rank) + " of " + num(F.unknowns) + at);
      // residual on levels beyond the fitted block
      Level extra = level_matrices(pt, opt.pmax + 2, nu);
      auto ev = [&](const char* n) { return eval_e(F.coeff.at(n), extra.E); };
      const RMat &X = extra.X, &Y = extra.Y, &Z = extra.Z;
      RMat I = RMat::identity(X.rows);
      RMat r1 = commutator(X, Z) - (ev("a") * (X * X) + ev("b") * anticommutator(X, Y) + ev("c") * X + ev("d") * Y + ev("f") * I);
      RMat r2 = commutator(Y, Z) - (ev("g") * (X * X * X) + ev("h") * (X * X) + ev("b2") * (Y * Y) +
                                    ev("a2") * anticommutator(X, Y) + ev("i") * X + ev("c2") * Y + ev("j") * I);
      cl.expect(r1.is_zero() && r2.is_zero(), "fitted relations fail on level " + num(opt.pmax + 2) + at);
      cl.expect(F.coeff.at("b2") == -F.coeff.at("b") && F.coeff.at("a2") == -F.coeff.at("a") &&
                    F.coeff.at("c2") == -F.coeff.at("c"),
                "[L4,L5] does not carry -b L4^2 - a{L2,L4} - c L4" + at);
      cl.expect(F.i_on_X, "the i term is not needed on L2" + at);
      json fj;
      fj["point"] = pt.str();
      fj["rank"] = F.rank;
      fj["equations"] = F.equations;
      for (auto& [k, v] : F.coeff) fj["normalised"][k] = v.str();
      for (auto& [k, v] : raw.coeff) fj["raw"][k] = v.str();
      fits.push_back(fj);
    });
    if (!F.consistent) continue;

    std::map<int, Rational> vals = values(flipped(pt));
    timed(cc, [&] {
      for (const char* n : {"a", "b", "c", "d", "f", "g", "h", "i", "j"}) {
        MPoly pr = as_e_poly(P.at(n).subs(vals));
        const MPoly& got = F.coeff.at(n);
        if (got != pr) {
          if (std::string(n) == "j" && got == as_e_poly(P.at("j_grouped").subs(vals))) {
            cc.expect(false, "j matches only with the H^2 bracket read as (c1^2/(2 w^2)) (...) H^2",
                      Status::Mismatch);
            continue;
          }
          cc.expect(false, std::string(n) + ": fitted " + got.str() + ", displayed " + pr.str() + " at " + pt.str(),
                    Status::Mismatch);
        }
      }
      // g is the only constant that depends on the generator normalisation
      cc.constants["g_unnormalised"] = raw.coeff.at("g").str();
    });

    timed(ck, [&] {
      auto ks = casimir_levels(pt, F, opt.pmax, nu);
      std::vector<Rational> es, kv;
      for (int p = 0; p <= opt.pmax; ++p) {
        ck.expect(ks[p].has_value(), "Casimir is not scalar on level " + num(p) + " at " + pt.str());
        if (!ks[p]) continue;
        es.push_back(level_energy(pt, p));
        kv.push_back(*ks[p]);
      }
      if (es.size() < 4) return;
      // K(E) is even of degree <= 4 in E; fit on the first levels, check on the rest
      int nd = 5;
      RMat V(static_cast<int>(es.size()), nd);
      for (size_t r = 0; r < es.size(); ++r) {
        Rational e = 1;
        for (int d = 0; d < nd; ++d, e *= es[r]) V(static_cast<int>(r), d) = e;
      }
      LinearSolution s = solve_linear(V, kv);
      ck.expect(s.consistent, "Casimir is not polynomial of degree <= 4 in E at " + pt.str());
      MPoly Kfit = e_poly(s.x);
      ck.constants["K(E)"][pt.str()] = Kfit.str();
      std::string match;
      for (auto& [reading, expr] : PK)
        if (as_e_poly(expr.subs(vals)) == Kfit) match = reading;
      if (match.empty()) {
        MPoly lit = as_e_poly(PK.at("literal").subs(vals));
        ck.expect(false, "K: computed " + Kfit.str() + ", displayed " + lit.str() + " at " + pt.str(), Status::Mismatch);
      } else {
        ck.constants["reading"] = match;
        if (match != "literal") ck.expect(false, "K matches only the " + match + " reading", Status::Mismatch);
      }
    });

    timed(cy, [&] {
      // printed Y0 with N + u = Lambda/2 against the diagonal of L4/(2 omega)
      Level l = level_matrices(pt, opt.pmax, nu);
      const AlgebraPoint q = flipped(pt);
      Rational c1 = -1 + q.alpha + q.beta + 2 * m;
      for (int n = 0; n <= opt.pmax; ++n) {
        Rational L = 2 * n + 1 + pt.alpha + pt.beta;
        Rational y0 = (q.alpha - q.beta) * (-2 + q.alpha + q.beta) * l.E * (c1 - L) * (c1 + L) / (4 * (-1 + L * L) * pt.omega);
        cy.expect(y0 == l.Y(n, n), "Y0 at n=" + num(n) + " is " + to_string(l.Y(n, n)) + ", displayed " + to_string(y0));
      }
      // X(N) = 4 (N+u)^2 with the displayed vacuum u = (-1+alpha+beta)/2 is Lambda_{N-1}^2
      cy.constants["N_shift"] = 1;
      cy.constants["identification"] = "N + u = Lambda_n / 2 with alpha of the opposite sign";
    });
  }
  cl.constants["fits"] = fits;
  cl.constants["levels"] = opt.pmax;
  rep.add(cl);
  rep.add(cc);
  rep.add(ck);
  rep.add(cy);
  return rep;
}

Report phi_compare() {
  Report rep;
  {
    Check c("structure_function.constant", "-13510798882111488 = -3 2^52 and rho normalisation 33554432 = 2^25");
    Integer two = 2, p52, p25;
    mpz_pow_ui(p52.get_mpz_t(), two.get_mpz_t(), 52);
    mpz_pow_ui(p25.get_mpz_t(), two.get_mpz_t(), 25);
    c.expect(phi_constant() == -3 * p52, "constant is not -3 2^52");
    c.expect(Integer(33554432) == p25, "33554432 is not 2^25");
    c.constants["constant"] = phi_constant().get_str();
    c.constants["rho"] = "2^25";
    rep.add(c);
  }
  {
    Check c("structure_function.forms", "expanded and factored displays of Phi(N) with h read as H");
    timed(c, [&] {
      c.constants["assumption"] = "h in the expanded display is the energy H";
      auto parts = phi_expanded_parts();
      MPoly a = G(var::alpha), b = G(var::beta), m = G(var::m), t = G(var::t);
      auto lin = [&](const MPoly& r2) { return t - r2 * Rational(1, 2); };
      MPoly p1 = lin(Q(3) - a - b) * lin(Q(1) + a - b) * lin(Q(1) - a + b) * lin(Q(-1) + a + b);
      MPoly p2 = lin(Q(1) - a - b - m * Rational(2)) * lin(Q(3) - a - b - m * Rational(2)) *
                 lin(Q(-1) + a + b + m * Rational(2)) * lin(Q(1) + a + b + m * Rational(2));
      MPoly d1 = parts[0] - p1 * Rational(16), d2 = parts[2] - p2 * Rational(16);
      c.expect(d2.is_zero(), "second quartic differs from its roots by " + d2.str());
      if (!d1.is_zero())
        c.expect(false, "first quartic differs from 16 prod(t - root) by " + d1.str() +
                            "; reading (1-(N+u))^2 as (1-2(N+u))^2 removes it", Status::Mismatch);
      // with the corrected quartic, factored = const / (1024 w^2) * expanded
      MPoly fixed = p1 * Rational(16) * parts[1] * parts[2];
      RatFun ratio = phi_factored() / RatFun(fixed);
      Rational k0(phi_constant());
      k0 /= 1024;
      RatFun want = RatFun(k0) / RatFun(G(var::omega).pow(2));
      c.expect(ratio == want, "factored / expanded is " + ratio.str());
      c.constants["factored_over_expanded"] = "-3 2^42 / omega^2";
      c.expect(false, "overall constants differ: factored = -3 2^42 / omega^2 times expanded", Status::Mismatch);
      c.constants["degree_in_t"] = fixed.deg(var::t);
    });
    rep.add(c);
  }
  return rep;
}

Report spectrum_from_rep(const std::vector<int>& ms, int pmax, SampleSpec spec) {
  Report rep;
  RatFun phi = phi_factored();
  MPoly a = G(var::alpha), b = G(var::beta);
  MPoly u = (Q(-1) + a + b) * Rational(1, 2);
  for (int m : ms) {
    Check c("structure_function.spectrum[m=" + num(m) + "]",
            "Phi(0,u,E) = 0 at u = (-1+a+b)/2, Phi(p+1,u,E) = 0 gives E = omega(2p+a+b), Phi > 0 on 1..p", Mode::Sampled);
    timed(c, [&] {
      RatFun pm = phi.subs(var::m, RatFun(m));
      c.expect(pm.subs(var::t, RatFun(u)).is_zero(), "Phi(0, u, E) != 0");
      std::mt19937_64 rng(spec.seed * 1000003 + 31 * m);
      json table = json::array();
      std::map<int, bool> positive;
      for (int tr = 0; tr < spec.trials; ++tr) {
        RMParams q = RMParams::sample(rng);
        std::map<int, Rational> v{{var::alpha, q.alpha.const_value()}, {var::beta, q.beta.const_value()},
                                  {var::omega, q.omega.const_value()}};
        Rational uv = (-1 + v[var::alpha] + v[var::beta]) / 2;
        RatFun at = pm.subs(v);
        for (int p = 1; p <= pmax; ++p) {
          Rational Ep = v[var::omega] * (2 * p + v[var::alpha] + v[var::beta]);
          UPoly inE = UPoly::from_mpoly(as_e_poly(at.subs(var::t, RatFun(p + 1 + uv))), var::E);
          bool root = inE.is_zero() || sgn(inE.eval(Ep)) == 0;
          c.expect(root, "E = omega(2p+a+b) is not a root of Phi(p+1) at p=" + num(p) + ", " + q.str());
          c.expect(!inE.is_zero(), "Phi(p+1) vanishes for every E at p=" + num(p), Status::Mismatch);
          std::vector<int> bad;
          for (int x = 1; x <= p; ++x)
            if (sgn(at.subs({{var::t, x + uv}, {var::E, Ep}}).const_value()) <= 0) bad.push_back(x);
          positive[p] = (positive.count(p) ? positive[p] : true) && bad.empty();
          if (tr == 0) table.push_back({{"p", p}, {"nonpositive_at", bad}});
        }
      }
      json pos = json::object();
      for (auto& [p, ok] : positive) {
        pos[num(p)] = ok;
        if (!ok) c.expect(false, "Phi(x) <= 0 for some x in 1.." + num(p), Status::Mismatch);
      }
      c.constants["positive_on_1..p"] = pos;
      c.constants["first_sample"] = table;
      // E_{k,n} = omega(2k+2n+a+b+2) is the branch at p = k + n + 1
      c.constants["offset"] = 1;
      c.expect(false, "E = omega(2p+a+b) equals omega(2(k+n)+a+b+2) for p = k+n+1, not p = k+n", Status::Mismatch);
      c.constants["samples"] = spec.trials;
    });
    rep.add(c);
  }
  return rep;
}

}  // namespace si
