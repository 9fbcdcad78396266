#include "superint/painleve.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "superint/linalg.hpp"
#include "superint/orthopoly.hpp"
#include "superint/rosenmorse.hpp"
#include "superint/upoly.hpp"

namespace si {

namespace {

using json = nlohmann::json;

MPoly G(int v) { return MPoly::gen(v); }
std::string num(long n) { return std::to_string(n); }
const int kQ[4] = {var::q7, var::q8, var::q9, var::q10};
const char* kQName[4] = {"q7", "q8", "q9", "q10"};

// coefficient equations of a polynomial in x (and s), as polynomials in the unknowns
std::vector<MPoly> coefficient_equations(const MPoly& p) {
  std::vector<MPoly> out;
  auto [p0, p1] = split_s(p);
  for (const MPoly* part : {&p0, &p1})
    for (auto& [k, c] : part->coeffs_in(var::x))
      if (!c.is_zero()) out.push_back(c);
  return out;
}

// row-reduce the q-part over Q[K]. Roots of pivots and of factors divided out of a row
// are lost to the generic reduction, so they come back as candidates.
struct Elimination {
  std::vector<UPoly> conditions, pivots, removed;
};

UPoly row_gcd(const std::vector<UPoly>& row) {
  UPoly g;
  for (auto& e : row)
    if (!e.is_zero()) g = g.is_zero() ? e.monic() : gcd(g, e);
  return g;
}

Elimination eliminate_q(std::vector<std::vector<UPoly>> rows) {
  Elimination el;
  const int nq = 4;
  size_t top = 0;
  for (int col = 0; col < nq; ++col) {
    size_t best = rows.size();
    for (size_t i = top; i < rows.size(); ++i)
      if (!rows[i][col].is_zero() && (best == rows.size() || rows[i][col].deg() < rows[best][col].deg())) best = i;
    if (best == rows.size()) continue;
    std::swap(rows[top], rows[best]);
    const UPoly p = rows[top][col];
    el.pivots.push_back(p);
    for (size_t i = top + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      UPoly f = rows[i][col];
      for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = p * rows[i][j] - f * rows[top][j];
      UPoly g = row_gcd(rows[i]);
      if (!g.is_zero() && g.deg() > 0) {
        el.removed.push_back(g);
        for (auto& e : rows[i]) e = divmod(e, g).first;
      }
    }
    ++top;
  }
  for (size_t i = top; i < rows.size(); ++i)
    if (!rows[i][nq].is_zero()) el.conditions.push_back(rows[i][nq]);
  return el;
}

RatFun dy_x(const RatFun& f) { return RatFun(-2) * f.diff(var::x); }  // d/dy with y = (1 - x)/2

RatFun sd1a_lhs(const RatFun& W, const RatFun& W1, const RatFun& W2, const RatFun& y, const std::map<int, Rational>& q) {
  auto Q = [&](int v) { return q.count(v) ? RatFun(q.at(v)) : RatFun::gen(v); };
  RatFun one(1), four(4), u = y * W1 - W;
  return y * y * (one - y) * (one - y) * W2 * W2 + four * W1 * u * u - four * W1 * W1 * u + four * Q(var::q7) * W1 * W1 +
         four * Q(var::q8) * W1 + four * Q(var::q9) * u + four * Q(var::q10);
}

}  // namespace

RatFun piv_residual(const RatFun& w, const RatFun& a, const RatFun& b) {
  RatFun z = RatFun::gen(var::z), w1 = w.diff(var::z), w2 = w1.diff(var::z);
  RatFun two(2);
  return w2 - (w1 * w1 / (two * w) + RatFun(rat(3, 2)) * w * w * w + RatFun(4) * z * w * w +
               two * (z * z - a) * w + b / w);
}

PIVCandidate piv_fit(const RatFun& g) {
  PIVCandidate c;
  c.g = g;
  if (g.is_zero()) throw std::invalid_argument("piv_fit: g must be nonzero");
  const Rational lattice[] = {1, -1, 2, -2, rat(1, 2), rat(-1, 2)};
  for (const Rational& mu : lattice)
    for (const Rational& la : lattice) {
      ++c.tried;
      RatFun w = RatFun(mu) * g.subs(var::x, RatFun(G(var::z) * la));
      MPoly N = piv_residual(w, RatFun::gen(var::a4), RatFun::gen(var::b4)).num();
      auto eqs = N.coeffs_in(var::z);
      RMat A(static_cast<int>(eqs.size()), 2);
      std::vector<Rational> rhs;
      int r = 0;
      bool linear = true;
      for (auto& [k, e] : eqs) {
        MPoly ca = e.coeff(var::a4, 1), cb = e.coeff(var::b4, 1);
        MPoly c0 = e.subs({{var::a4, 0}, {var::b4, 0}});
        if (!ca.is_const() || !cb.is_const() || !c0.is_const()) linear = false;
        if (!linear) break;
        A(r, 0) = ca.const_value();
        A(r, 1) = cb.const_value();
        rhs.push_back(-c0.const_value());
        ++r;
      }
      if (!linear) continue;
      LinearSolution s = solve_linear(A, rhs);
      if (!s.consistent || !s.free_vars.empty()) continue;
      c.consistent = true;
      c.mu = mu;
      c.lambda = la;
      c.a = s.x[0];
      c.b = s.x[1];
      return c;
    }
  return c;
}

Rational printed_K0(const Rational& a, const Rational& b) { return a * a - a * b + b * b + rat(7, 4); }

Rational sd1a_K(int m, const Rational& a, const Rational& b) { return printed_K0(a, b) + 2 * (m - 1) * (m + b - a); }

SD1aInstance build_T_W(int m, const Rational& alpha, const Rational& beta, TNorm norm) {
  SD1aInstance I;
  I.m = m;
  I.alpha = alpha;
  I.beta = beta;
  I.norm = norm;
  RosenMorseSystem sys = build_rosen_morse(m, RMParams::at(alpha, beta, 1));
  I.v = sys.L2.coeff(0, 0);
  MPoly x = G(var::x);
  RatFun s = RatFun::gen(var::s);
  Rational A1 = (alpha + 1) * (alpha + 1) - rat(1, 4), B1 = (beta - 1) * (beta - 1) - rat(1, 4);
  // int v dtheta = A1 tan - B1 cot - 2 w with w = 2 s ell, tan = s/(1-x), cot = s/(1+x)
  RatFun integral = RatFun(A1) / RatFun(MPoly(1) - x) - RatFun(B1) / RatFun(MPoly(1) + x) - RatFun(4) * sys.ell;
  RatFun factor = norm == TNorm::Half ? RatFun(rat(1, 2)) : RatFun(rat(1, 4));
  I.tau = factor * integral;
  RatFun T = s * I.tau + RatFun::gen(var::cT);
  RatFun dT = RatFun(2) * s * T.diff(var::x);
  I.T_ok = dT / factor == I.v;
  // W = -(sin cos/2)(T + K cot 2theta), sin cos = s/2, cot 2theta = -x/s
  I.W = RatFun(rat(-1, 4)) * (RatFun(MPoly(1) - x * x) * I.tau - RatFun::gen(var::K) * RatFun(x)) -
        RatFun::gen(var::cT) * s * RatFun(rat(1, 4));
  return I;
}

RatFun sd1a_residual(const RatFun& W_y, const std::map<int, Rational>& q) {
  RatFun W1 = W_y.diff(var::y), W2 = W1.diff(var::y);
  return sd1a_lhs(W_y, W1, W2, RatFun::gen(var::y), q);
}

SD1aInstance sd1a_fit(SD1aInstance I) {
  RatFun y = RatFun((MPoly(1) - G(var::x)) * rat(1, 2));
  RatFun W1 = dy_x(I.W), W2 = dy_x(W1);
  MPoly N = sd1a_lhs(I.W, W1, W2, y, {}).num();
  std::vector<MPoly> eqs = coefficient_equations(N);

  // c_T != 0: the s-odd part is c_T times a polynomial; linearise over monomials
  {
    std::vector<MPoly> sys;
    auto [p0, p1] = split_s(N);
    for (auto& [k, c] : p0.coeffs_in(var::x)) sys.push_back(c);
    MPoly ct = G(var::cT);
    for (auto& [k, c] : p1.coeffs_in(var::x)) {
      MPoly q;
      if (!divide_exact(c, ct, &q)) {
        I.notes.push_back("s-odd part of the residual is not divisible by c_T");
        q = c;
      }
      sys.push_back(q);
    }
    std::map<Mono, int> col;
    Mono one{};
    for (auto& e : sys)
      for (auto& [mo, c] : e.terms())
        if (mo != one && !col.count(mo)) col.emplace(mo, static_cast<int>(col.size()));
    RMat A(static_cast<int>(sys.size()), static_cast<int>(col.size()));
    std::vector<Rational> rhs(sys.size());
    for (size_t r = 0; r < sys.size(); ++r)
      for (auto& [mo, c] : sys[r].terms()) {
        if (mo == one)
          rhs[r] = -c;
        else
          A(static_cast<int>(r), col[mo]) = c;
      }
    I.ct_nonzero_excluded = !solve_linear(A, rhs).consistent;
    if (!I.ct_nonzero_excluded) I.notes.push_back("c_T != 0 not excluded by monomial linearisation");
  }

  // c_T = 0: eliminate q7..q10 over Q[K]
  std::vector<std::vector<UPoly>> rows;
  for (auto& e : eqs) {
    MPoly e0 = e.subs({{var::cT, 0}});
    if (e0.is_zero()) continue;
    std::vector<UPoly> row;
    MPoly rest = e0;
    for (int v : kQ) {
      MPoly c = e0.coeff(v, 1);
      row.push_back(UPoly::from_mpoly(c, var::K));
      rest = rest.subs({{v, 0}});
    }
    row.push_back(UPoly::from_mpoly(-rest, var::K));
    rows.push_back(row);
  }
  Elimination el = eliminate_q(rows);
  std::set<Rational> cand;
  if (el.conditions.empty()) {
    I.notes.push_back("K is not determined by the residual");
  } else {
    UPoly g = el.conditions.front().monic();
    for (auto& c : el.conditions) g = gcd(g, c);
    for (auto& r : rational_roots(g)) cand.insert(r);
  }
  for (auto* list : {&el.pivots, &el.removed})
    for (auto& p : *list)
      for (auto& r : rational_roots(p)) cand.insert(r);

  for (const Rational& K : cand) {
    RMat A(static_cast<int>(eqs.size()), 4);
    std::vector<Rational> rhs(eqs.size());
    for (size_t r = 0; r < eqs.size(); ++r) {
      MPoly e = eqs[r].subs({{var::cT, 0}, {var::K, K}});
      MPoly rest = e;
      for (int j = 0; j < 4; ++j) {
        MPoly c = e.coeff(kQ[j], 1);
        A(static_cast<int>(r), j) = c.is_zero() ? Rational(0) : c.const_value();
        rest = rest.subs({{kQ[j], 0}});
      }
      rhs[r] = rest.is_zero() ? Rational(0) : -rest.const_value();
    }
    LinearSolution s = solve_linear(A, rhs);
    if (!s.consistent) continue;
    if (!s.free_vars.empty()) I.notes.push_back("q constants not unique at K=" + to_string(K));
    std::map<int, Rational> q;
    for (int j = 0; j < 4; ++j) q[kQ[j]] = s.x[j];
    // independent check directly in y
    RatFun Wy = I.W.subs({{var::K, K}, {var::cT, 0}}).subs(var::x, RatFun(MPoly(1) - G(var::y) * Rational(2)));
    if (!sd1a_residual(Wy, q).is_zero()) {
      I.notes.push_back("residual in y does not vanish at K=" + to_string(K));
      continue;
    }
    if (I.solved) {
      I.notes.push_back("second solution at K=" + to_string(K));
      continue;
    }
    I.solved = true;
    I.W_y = Wy;
    I.constants["K"] = K;
    I.constants["c_T"] = 0;
    for (int j = 0; j < 4; ++j) I.constants[kQName[j]] = s.x[j];
  }
  return I;
}

Report verify_piv(const std::vector<int>& ks) {
  Report rep;
  {
    Check c("painleve.piv.examples", "PIV residual fit on elementary candidates");
    timed(c, [&] {
      RatFun x = RatFun::gen(var::x);
      PIVCandidate lin = piv_fit(RatFun(-2) * x);
      c.expect(lin.consistent && lin.mu == 1 && lin.lambda == 1 && lin.a == 0 && lin.b == -2,
               "w = -2z is not PIV(0, -2) at unit scaling");
      PIVCandidate id = piv_fit(x);
      c.expect(id.consistent, "g = x admits no lattice scaling");
      if (id.consistent)
        c.constants["g=x"] = {{"mu", to_string(id.mu)}, {"lambda", to_string(id.lambda)}, {"a", to_string(id.a)},
                              {"b", to_string(id.b)}};
      PIVCandidate bad = piv_fit(x * x + RatFun(1));
      c.expect(!bad.consistent, "x^2 + 1 should be inconsistent");
      c.constants["x^2+1"] = "inconsistent after " + num(bad.tried) + " scalings";
    });
    rep.add(c);
  }
  for (int k : ks) {
    Check c("painleve.piv[k=" + num(k) + "]", "g = H_k'/H_k solves PIV after scaling");
    timed(c, [&] {
      MPoly h = pseudo_hermite(k);
      PIVCandidate f = piv_fit(RatFun::frac(h.diff(var::x), h));
      c.expect(f.consistent, "no lattice scaling makes H_k'/H_k a PIV solution");
      if (f.consistent) {
        c.constants["mu"] = to_string(f.mu);
        c.constants["lambda"] = to_string(f.lambda);
        c.constants["a"] = to_string(f.a);
        c.constants["b"] = to_string(f.b);
        RatFun w = RatFun(f.mu) * RatFun::frac(h.diff(var::x), h).subs(var::x, RatFun(G(var::z) * f.lambda));
        c.expect(piv_residual(w, RatFun(f.a), RatFun(f.b)).is_zero(), "residual does not vanish on re-substitution");
      }
    });
    rep.add(c);
  }
  return rep;
}

Report verify_sd1a(const std::vector<int>& ms, SampleSpec spec) {
  Report rep;
  for (int m : ms) {
    std::vector<std::pair<Rational, Rational>> pts{{rat(5, 2), rat(7, 2)}};
    std::mt19937_64 rng(spec.seed * 1000003 + 101 * m);
    while (static_cast<int>(pts.size()) < std::max(3, spec.trials)) {
      RMParams q = RMParams::sample(rng);
      pts.emplace_back(q.alpha.const_value(), q.beta.const_value());
    }
    const std::string pfx = "painleve.sd1a[m=" + num(m) + "].";
    Check ct(pfx + "T", "2/r^2 T'(theta) against the angular potential, and T -> W", Mode::Sampled);
    Check cf(pfx + "fit", "W(y) solves SD-I.a for constants q7..q10", Mode::Sampled);
    json sols = json::array();
    for (auto& [a, b] : pts) {
      const std::string at = "alpha=" + to_string(a) + ", beta=" + to_string(b);
      SD1aInstance I;
      timed(ct, [&] {
        SD1aInstance quarter = build_T_W(m, a, b, TNorm::Quarter);
        ct.expect(quarter.T_ok, "4T' = v fails at " + at);
        I = build_T_W(m, a, b, TNorm::Half);
        ct.expect(I.T_ok, "2T' = v fails at " + at);
        if (a == rat(5, 2)) {
          // the printed normalisation V = w^2 r^2/2 + (2/r^2) T' leads to no solution
          SD1aInstance fq = sd1a_fit(quarter);
          ct.constants["quarter_normalisation_solves"] = fq.solved;
          ct.expect(fq.solved, "with V = w^2 r^2/2 + (2/r^2) T' no constants solve SD-I.a; T' = v/2 is needed",
                    Status::Mismatch);
        }
      });
      timed(cf, [&] {
        SD1aInstance S = sd1a_fit(I);
        cf.expect(S.solved, "no rational constants at " + at);
        cf.expect(S.ct_nonzero_excluded, "c_T != 0 not excluded at " + at, Status::Mismatch);
        for (auto& n : S.notes) cf.diffs.push_back(n + " at " + at);
        json sj;
        sj["alpha"] = to_string(a);
        sj["beta"] = to_string(b);
        sj["seed_regular"] = seed_regular(m, a, b);
        for (auto& [k, v] : S.constants) sj[k] = to_string(v);
        if (S.solved) {
          sj["K_closed_form"] = S.constants["K"] == sd1a_K(m, a, b);
          Rational K0 = printed_K0(a, b);
          if (S.constants["K"] != K0)
            cf.expect(false, "cot 2theta coefficient differs from alpha^2 - alpha beta + beta^2 + 7/4 for m=" + num(m),
                      Status::Mismatch);
        }
        sols.push_back(sj);
      });
    }
    cf.constants["solutions"] = sols;
    rep.add(ct);
    rep.add(cf);
  }
  return rep;
}

}  // namespace si
