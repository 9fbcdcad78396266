#include "superint/oscillator.hpp"

#include <stdexcept>

#include "superint/orthopoly.hpp"

namespace si {

namespace {

const Frame C = Frame::cartesian();
MPoly X() { return MPoly::gen(var::x); }
MPoly Y() { return MPoly::gen(var::y); }
DiffOp mul(const RatFun& f) { return DiffOp(C, f); }
DiffOp dx() { return DiffOp::d2(C); }
DiffOp dy() { return DiffOp::d1(C); }

// P == Q + c for a rational constant c
std::optional<Rational> const_offset(const DiffOp& p, const DiffOp& q) {
  DiffOp d = p - q;
  if (d.is_zero()) return Rational(0);
  if (d.terms().size() != 1 || !d.terms().count({0, 0})) return std::nullopt;
  const RatFun& c = d.terms().at({0, 0});
  if (!c.is_const()) return std::nullopt;
  return c.const_value();
}

std::string q(const Rational& r) { return to_string(r); }

}  // namespace

std::map<std::string, const DiffOp*> OscillatorSystem::named() const {
  return {{"a", &a},   {"adag", &adag}, {"A", &A},   {"Adag", &Adag}, {"Hx", &Hx},   {"H2", &H2},
          {"b", &b},   {"bdag", &bdag}, {"Hy", &Hy}, {"H2d", &H2d},   {"L1", &L1},   {"L2", &L2}};
}

OscillatorSystem build_oscillator(int k) {
  if (k < 2 || k % 2) throw std::invalid_argument("build_oscillator: k must be even and >= 2");
  OscillatorSystem s;
  s.k = k;
  MPoly Hk = pseudo_hermite(k);
  RatFun g = RatFun::frac(Hk.diff(var::x), Hk);
  s.W = RatFun(-X()) - g;
  s.a = dx() + mul(X());
  s.adag = -dx() + mul(X());
  s.A = dx() + mul(s.W);
  s.Adag = -dx() + mul(s.W);
  s.Hx = -DiffOp::d(C, 0, 2) + mul(X().pow(2));
  auto ws = const_offset(s.Hx, s.a * s.adag);
  if (!ws) throw std::logic_error("build_oscillator: a a^dagger is not Hx up to a constant");
  s.weyl_shift = *ws;

  // A^dagger A = Hx + kappa, so A Hx = (A A^dagger - kappa) A
  auto kappa = const_offset(s.Adag * s.A, s.Hx);
  if (!kappa) throw std::logic_error("build_oscillator: A^dagger A is not Hx up to a constant");
  s.shift = -*kappa;
  s.H2 = s.A * s.Adag + mul(RatFun(s.shift));

  s.b = s.A * s.a * s.Adag;
  s.bdag = s.A * s.adag * s.Adag;
  s.ay = dy() + mul(Y());
  s.aydag = -dy() + mul(Y());
  s.Hy = -DiffOp::d(C, 2, 0) + mul(Y().pow(2));
  s.H2d = s.H2 + s.Hy;
  DiffOp u = s.bdag * s.ay, v = s.aydag * s.b;
  s.L1 = RatFun(Rational(1, 2)) * (u - v);
  s.L2 = RatFun(Rational(1, 2)) * (u + v);
  return s;
}

GravelMatch gravel_match(const OscillatorSystem& sys) {
  GravelMatch m;
  MPoly Hk = pseudo_hermite(sys.k);
  m.g = RatFun::frac(Hk.diff(var::x), Hk);
  RatFun V = sys.H2d.coeff(0, 0);
  RatFun x = RatFun(X()), y = RatFun(Y());
  m.rest = V - (y * y + x * x - m.g.diff(var::x) + m.g * m.g + RatFun(2) * x * m.g);
  m.constant = m.rest.is_const();
  if (m.constant) m.c = m.rest.const_value();
  return m;
}

Report verify_weyl() {
  Report rep;
  DiffOp a = dx() + mul(X()), ad = -dx() + mul(X());
  DiffOp Hx = -DiffOp::d(C, 0, 2) + mul(X().pow(2));
  Check c{"oscillator.weyl", "Weyl relation [a, a^dagger] = 2 and Hx = a a^dagger - 1"};
  timed(c, [&] {
    DiffOp w = commutator(a, ad);
    c.expect(w == mul(RatFun(2)), "[a, a^dagger] = " + w.str());
    auto off = const_offset(Hx, a * ad);
    c.expect(off.has_value(), "a a^dagger - Hx is not constant");
    if (off) {
      c.constants["shift"] = q(*off);
      c.expect(*off == -1, "Hx = a a^dagger + " + q(*off) + ", reference -1", Status::Mismatch);
    }
    // ladder action on e^{-x^2/2} H_n
    Prefactor gs;
    gs.exp(X().pow(2) * Rational(-1, 2));
    for (int n = 1; n <= 5; ++n) {
      WaveFunction psi(gs, RatFun(hermite(n))), lower(gs, RatFun(hermite(n - 1)));
      c.expect(Hx.apply(psi).core() == RatFun(2 * n + 1) * psi.core(), "Hx psi_" + std::to_string(n));
      auto kk = proportionality(a.apply(psi), lower);
      c.expect(kk && *kk == RatFun(2 * n), "a psi_" + std::to_string(n) + " != 2n psi_{n-1}");
    }
  });
  rep.add(c);
  return rep;
}

Report verify_oscillator(int k, Mode mode, SampleSpec spec) {
  Report rep;
  const std::string K = "k=" + std::to_string(k);
  const std::string pfx = "oscillator[" + K + "].";
  OscillatorSystem s;

  Check build{pfx + "intertwining", "A Hx = H2 A and A^dagger H2 = Hx A^dagger with H2 = A A^dagger - 1", mode};
  timed(build, [&] {
    s = build_oscillator(k);
    build.constants["H2_shift"] = q(s.shift);
    build.constants["weyl_shift"] = q(s.weyl_shift);
    build.expect(op_zero(s.A * s.Hx - s.H2 * s.A, mode, spec), "A Hx - H2 A != 0");
    build.expect(op_zero(s.Adag * s.H2 - s.Hx * s.Adag, mode, spec), "A^dagger H2 - Hx A^dagger != 0");
    build.expect(s.shift == -1, "H2 = A A^dagger + (" + q(s.shift) + ") intertwines with Hx, reference -1",
                 Status::Mismatch);
  });
  rep.add(build);

  Check lad{pfx + "ladders", "[H2, b^dagger] = 2 b^dagger and [H2, b] = 2 b", mode};
  timed(lad, [&] {
    DiffOp cu = commutator(s.H2, s.bdag), cd = commutator(s.H2, s.b);
    int su = 0, sd = 0;
    if (op_zero(cu - RatFun(2) * s.bdag, mode, spec)) su = 2;
    else if (op_zero(cu + RatFun(2) * s.bdag, mode, spec)) su = -2;
    if (op_zero(cd - RatFun(2) * s.b, mode, spec)) sd = 2;
    else if (op_zero(cd + RatFun(2) * s.b, mode, spec)) sd = -2;
    lad.constants["raise"] = su;
    lad.constants["lower"] = sd;
    lad.expect(su != 0 && sd != 0, "commutators are not multiples of the ladders");
    lad.expect(su == 2, "[H2, b^dagger] = " + std::to_string(su) + " b^dagger", Status::Mismatch);
    lad.expect(sd == 2, "[H2, b] = " + std::to_string(sd) + " b, reference +2 b", Status::Mismatch);
    lad.expect(s.b.order() == 3 && s.bdag.order() == 3, "ladders are not third order");
  });
  rep.add(lad);

  Check spec_c{pfx + "spectrum", "H2 psi_n = (2n+1) psi_n for n = 1, k+1, k+2, ... with the displayed y_n", mode};
  timed(spec_c, [&] {
    Prefactor pre;
    pre.exp(X().pow(2) * Rational(-1, 2));
    MPoly Hk = pseudo_hermite(k);
    auto eigen = [&](const MPoly& y) -> std::optional<RatFun> {
      WaveFunction psi(pre, RatFun::frac(y, Hk));
      RatFun ratio = s.H2.apply(psi).core() / psi.core();
      if (ratio.is_const()) return ratio;
      return std::nullopt;
    };
    nlohmann::json printed = nlohmann::json::object(), states = nlohmann::json::object();
    std::vector<int> index;
    bool labels_ok = true;
    for (int n = 0; n <= k + 4; ++n) {
      try {
        auto e = eigen(exceptional_hermite(k, n).poly);
        printed[std::to_string(n)] = e ? to_string(e->const_value()) : "not an eigenfunction";
      } catch (const GapError&) {
      }
      try {
        auto e = eigen(exceptional_hermite_state(k, n).poly);
        spec_c.expect(e.has_value(), "state n=" + std::to_string(n) + " is not an eigenfunction");
        if (!e) continue;
        index.push_back(n);
        states[std::to_string(n)] = to_string(e->const_value());
        // same ladder of levels as 2n+1, shifted by a constant
        labels_ok = labels_ok && (e->const_value() - (2 * n + 1) == s.shift - 1);
      } catch (const GapError&) {
      }
    }
    spec_c.constants["index_set"] = index;
    spec_c.constants["eigenvalues"] = states;
    spec_c.constants["displayed_y_n"] = printed;
    spec_c.constants["offset_from_2n+1"] = q(s.shift - 1);
    spec_c.expect(labels_ok, "eigenvalues are not 2n+1 up to one constant");
    bool printed_ok = true;
    for (auto& [n, v] : printed.items())
      if (n != "0" && v == "not an eigenfunction") printed_ok = false;
    spec_c.expect(printed_ok,
                  "displayed y_n for n >= k is not an eigenfunction; the second term needs H_{n-k-1}",
                  Status::Mismatch);
    spec_c.expect(index.size() > 1 && index[1] == k + 1,
                  "index set starts 0, " + std::to_string(k + 1) + "; reference lists 1, k+1", Status::Mismatch);
    spec_c.expect(s.shift == -1, "eigenvalue of state n is 2n+1 + (" + q(s.shift - 1) + ")", Status::Mismatch);
  });
  rep.add(spec_c);

  Check sup{pfx + "integrals", "[H, L1] = [H, L2] = 0 with L1, L2 of order 3 and 4", mode};
  timed(sup, [&] {
    sup.expect(op_zero(commutator(s.H2d, s.L1), mode, spec), "[H2d, L1] != 0");
    sup.expect(op_zero(commutator(s.H2d, s.L2), mode, spec), "[H2d, L2] != 0");
    sup.constants["order_L1"] = s.L1.order();
    sup.constants["order_L2"] = s.L2.order();
    sup.expect(s.L1.order() == 3, "ord L1 = " + std::to_string(s.L1.order()));
    sup.expect(s.L2.order() == 4, "ord L2 = " + std::to_string(s.L2.order()));
    // L1 leading form {x d_y - y d_x, d_x^2}
    DiffOp rot = mul(X()) * dy() - mul(Y()) * dx(), dxx = DiffOp::d(C, 0, 2);
    DiffOp anti = rot * dxx + dxx * rot;
    auto ratio = principal_symbol(s.L1).ratio_to(principal_symbol(anti));
    sup.expect(ratio.has_value(), "symbol of L1 is not proportional to that of {x d_y - y d_x, d_x^2}");
    if (ratio) sup.constants["L1_symbol_ratio"] = ratio->str();
    sup.expect(s.L1.adjoint() == -s.L1, "L1 is not anti-self-adjoint");
    sup.expect(s.L2.adjoint() == s.L2, "L2 is not self-adjoint");
  });
  rep.add(sup);

  Check grav{pfx + "gravel", "V = y^2 + x^2 - g' + g^2 + 2xg - 1 with g = H_k'/H_k", mode};
  timed(grav, [&] {
    GravelMatch m = gravel_match(s);
    grav.constants["g"] = m.g.str();
    grav.expect(m.constant, "remainder is not constant: " + m.rest.str());
    if (m.constant) {
      grav.constants["c"] = q(m.c);
      grav.expect(m.c == -1, "c = " + q(m.c) + " for the intertwining H2, reference -1", Status::Mismatch);
    }
  });
  rep.add(grav);
  return rep;
}

}  // namespace si
