// One PASS/FAIL line per acceptance criterion. Criteria whose printed closed
// form is contradicted by the computation fail on purpose and are listed as
// known; the exit status is nonzero only for failures outside that list.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "superint/harness.hpp"
#include "superint/orthopoly.hpp"
#include "superint/oscillator.hpp"
#include "superint/painleve.hpp"
#include "superint/palgebra.hpp"
#include "superint/rosenmorse.hpp"

using namespace si;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void need(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok " : "FAIL ") + what);
  }
};

const std::map<int, std::string> kKnown = {
    {6, "printed Xi+- coefficients swap the b-factors and carry Lambda^2 instead of Lambda^2 - c_m"},
    {7, "printed D has the opposite sign and leaves a pole in Lambda - 1"},
    {9, "Phi has zeros at N = m and N = m + 1, so Phi > 0 on 1..p holds only for p < m"},
};

const Check* get(const Report& r, const std::string& name) { return r.find(name); }
bool fine(const Check* c) { return c && c->status != Status::Inconsistent; }
bool verified(const Check* c) { return c && c->status == Status::Verified; }
std::string first_diff(const Check* c) { return c && !c->diffs.empty() ? c->diffs.front() : ""; }

Outcome c1() {
  Outcome o;
  Report r = verify_weyl();
  const Check* w = get(r, "oscillator.weyl");
  o.need(verified(w), "[a, a^dagger] = 2 and H_x = a a^dagger - 1");
  return o;
}

Outcome c2() {
  Outcome o;
  for (int k : {2, 4, 6}) {
    Report r = verify_oscillator(k);
    std::string p = "oscillator[k=" + std::to_string(k) + "].";
    const Check* in = get(r, p + "intertwining");
    const Check* la = get(r, p + "ladders");
    o.need(fine(in), "k=" + std::to_string(k) + " A H = H2 A, A^dagger H2 = H A^dagger");
    o.need(fine(la) && la->constants.contains("raise"),
           "k=" + std::to_string(k) + " [H2, b^dagger] = " + (la ? la->constants["raise"].dump() : "?") + " b^dagger");
  }
  return o;
}

Outcome c3() {
  Outcome o;
  for (int k : {2, 4}) {
    Report r = verify_oscillator(k);
    const Check* c = get(r, "oscillator[k=" + std::to_string(k) + "].integrals");
    o.need(verified(c) && c->constants["order_L1"] == 3 && c->constants["order_L2"] == 4,
           "k=" + std::to_string(k) + " [H, L1] = [H, L2] = 0, orders 3 and 4, L1 symbol matches");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  for (int k : {2, 4}) {
    GravelMatch g = gravel_match(build_oscillator(k));
    o.need(g.constant, "k=" + std::to_string(k) + " Gravel remainder constant c = " + (g.constant ? to_string(g.c) : "?"));
    MPoly h = pseudo_hermite(k);
    PIVCandidate f = piv_fit(RatFun::frac(h.diff(var::x), h));
    o.need(f.consistent, "k=" + std::to_string(k) + " PIV (mu, lambda, a, b) = (" + to_string(f.mu) + ", " +
                             to_string(f.lambda) + ", " + to_string(f.a) + ", " + to_string(f.b) + ")");
  }
  return o;
}

Outcome c5() {
  Outcome o;
  RMOptions opt;
  opt.nmax = 4;
  opt.with_L4 = false;
  opt.groups = {"factorization", "intertwining", "L2_display", "eigenfunctions"};
  for (int m : {1, 2, 3}) {
    Report r = verify_rosen_morse(m, opt);
    std::string p = "rosen_morse[m=" + std::to_string(m) + "].", ms = "m=" + std::to_string(m) + " ";
    const Check* f = get(r, p + "factorization");
    o.need(fine(f), ms + "factorization constant " + (f ? f->constants["c_m"].get<std::string>() : "?"));
    o.need(verified(get(r, p + "intertwining")), ms + "A L = L2 A");
    const Check* d = get(r, p + "L2_display");
    o.need(fine(d) && (d->status == Status::Verified || !d->diffs.empty()), ms + "L2 display compared, diff logged");
    o.need(fine(get(r, p + "eigenfunctions")), ms + "L2 hatPsi_n = (2n+a+b+1)^2 hatPsi_n, n <= 4");
  }
  return o;
}

Outcome c6() {
  Outcome o;
  RMOptions opt;
  opt.nmax = 3;
  opt.with_L4 = false;
  opt.groups = {"ladder_C", "ladder_b", "ladder_Xi"};
  std::vector<std::pair<int, Mode>> runs{{1, Mode::Symbolic}, {1, Mode::Basis}, {2, Mode::Basis}, {3, Mode::Basis}};
  for (auto [m, mode] : runs) {
    opt.mode = mode;
    Report r = verify_rosen_morse(m, opt);
    std::string p = "rosen_morse[m=" + std::to_string(m) + "].";
    std::string ms = "m=" + std::to_string(m) + " " + mode_name(mode) + " ";
    o.need(verified(get(r, p + "ladder_C")), ms + "C and C^dagger actions");
    o.need(fine(get(r, p + "ladder_b")), ms + "b_Lambda and b_Lambda^dagger actions");
    const Check* xi = get(r, p + "ladder_Xi");
    o.need(verified(xi), ms + "printed Xi+- coefficients: " + first_diff(xi));
  }
  return o;
}

Outcome c7() {
  Outcome o;
  RMOptions opt;
  opt.nmax = 3;
  opt.groups = {"factorization"};
  for (int m : {1, 2}) {
    std::string p = "rosen_morse[m=" + std::to_string(m) + "].", ms = "m=" + std::to_string(m) + " ";
    opt.mode = Mode::Basis;
    Report b = verify_rosen_morse(m, opt);
    const Check* pr = get(b, p + "pole_removal");
    o.need(fine(pr), ms + "K odd in Lambda with D from its definition");
    o.need(pr && pr->status == Status::Verified, ms + "printed closed form of D: " + first_diff(pr));
    o.need(verified(get(b, p + "[H,L4]=0")), ms + "[H, L4] = 0 on Phi_{k,n}, k, n <= 3");
    opt.mode = Mode::Sampled;
    opt.spec.trials = 5;
    Report s = verify_rosen_morse(m, opt);
    const Check* hs = get(s, p + "[H,L4]=0");
    o.need(verified(hs) && hs->constants["samples"].size() >= 5, ms + "[H, L4] = 0 at 5 sampled parameter points");
  }
  Report si = verify_seed_independence({1, 2, 3}, RMParams::at(rat(5, 2), rat(7, 2), rat(3, 2)));
  o.need(verified(get(si, "rosen_morse.seed_independence")), "principal symbol of L4 identical for m = 1, 2, 3");
  return o;
}

Outcome c8() {
  Outcome o;
  for (int m : {1, 2}) {
    AlgebraPoint pt{rat(5, 2), rat(7, 2), rat(3, 2), m};
    AlgebraFit F = fit_algebra(pt, 8, 1 / (2 * pt.omega));
    std::string ms = "m=" + std::to_string(m) + " ";
    o.need(F.consistent && F.rank == F.unknowns, ms + "fit consistent and unique on levels 0..8");
    o.need(F.coeff["a"] == MPoly(0) && F.coeff["b"] == MPoly(8) && F.coeff["d"] == MPoly(-16) &&
               F.coeff["g"] == MPoly(-2),
           ms + "a = 0, b = 8, d = -16, g = -2");
    Report r = verify_algebra(m);
    std::string p = "algebra[m=" + std::to_string(m) + "].";
    const Check* co = get(r, p + "coefficients");
    const Check* ca = get(r, p + "casimir");
    o.need(fine(co), ms + "c, f, h, i, j compared: " + (co && co->diffs.empty() ? "all match" : first_diff(co)));
    o.need(fine(ca), ms + "Casimir compared: " + (ca && ca->diffs.empty() ? "matches" : first_diff(ca)));
  }
  return o;
}

Outcome c9() {
  Outcome o;
  Report r = phi_compare();
  o.need(verified(get(r, "structure_function.constant")), "-13510798882111488 = -3 2^52");
  const Check* f = get(r, "structure_function.forms");
  o.need(fine(f) && (f->status == Status::Verified || !f->diffs.empty()), "expanded against factored logged");
  SampleSpec spec;
  spec.trials = 3;
  Report s = spectrum_from_rep({1, 2, 3}, 3, spec);
  for (int m : {1, 2, 3}) {
    const Check* c = get(s, "structure_function.spectrum[m=" + std::to_string(m) + "]");
    std::string ms = "m=" + std::to_string(m) + " ";
    o.need(fine(c), ms + "Phi(0) = 0 and E = omega(2p+a+b) is a root of Phi(p+1)");
    std::string bad;
    if (c)
      for (auto& [p, ok] : c->constants["positive_on_1..p"].items())
        if (!ok.get<bool>()) bad += " " + p;
    o.need(c && bad.empty(), ms + "Phi > 0 on 1..p for p = 1..3 at 3 samples" + (bad.empty() ? "" : "; fails for p =" + bad));
  }
  return o;
}

Outcome c10() {
  Outcome o;
  SampleSpec spec;
  spec.trials = 4;  // the fixed point and three sampled ones
  for (int m : {1, 2}) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = verify_sd1a({m}, spec);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Check* c = get(r, "painleve.sd1a[m=" + std::to_string(m) + "].fit");
    int solved = 0;
    std::string K;
    if (c)
      for (auto& s : c->constants["solutions"])
        if (s.contains("K")) {
          ++solved;
          if (K.empty()) K = s["K"].get<std::string>();
        }
    o.need(fine(c) && solved >= 4, "m=" + std::to_string(m) + " residual identically zero at " + std::to_string(solved) +
                                       " points, K = " + K + " at (5/2, 7/2), c_T = 0");
    o.need(secs < 300 * 4, "m=" + std::to_string(m) + " within 5 min per instance");
  }
  return o;
}

Outcome c11() {
  Outcome o;
  Report r = verify_numerics();
  const Check* q = get(r, "numerics.quadrature[m=1]");
  o.need(verified(q), "off-diagonals < 1e-10 and node doubling < 1e-12, m=1, n <= 4, 200 nodes");
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome c12() {
  Outcome o;
  std::string a = "acceptance_all_1.json", b = "acceptance_all_2.json";
  std::string cli = SUPERINT_CLI;
  auto t0 = std::chrono::steady_clock::now();
  int ra = std::system((cli + " --seed 42 all --report " + a + " 2>/dev/null").c_str());
  double first = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int rb = std::system((cli + " --seed 42 all --report " + b + " 2>/dev/null").c_str());
  std::string ja = slurp(a), jb = slurp(b);
  std::remove(a.c_str());
  std::remove(b.c_str());
  o.need(ra == 0 && rb == 0, "both runs exit 0 (no inconsistent check)");
  o.need(!ja.empty() && ja == jb, "reports byte-identical (" + std::to_string(ja.size()) + " bytes)");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f s", first);
  o.need(first < 1200, std::string("full suite in ") + buf);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double budget;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all = {
      {1, "Weyl relation and baseline oscillator", 1, c1},
      {2, "intertwining and ladders, k = 2, 4, 6", 10, c2},
      {3, "superintegrability, k = 2, 4", 30, c3},
      {4, "Gravel form and PIV fit, k = 2, 4", 10, c4},
      {5, "exceptional Jacobi construction, m = 1, 2, 3 symbolic", 60, c5},
      {6, "ladder actions and Xi coefficients", 30, c6},
      {7, "fourth-order integral pipeline, m = 1, 2", 300, c7},
      {8, "cubic algebra closure and Casimir", 300, c8},
      {9, "structure function", 60, c9},
      {10, "SD-I.a for W, m = 1, 2", 600, c10},
      {11, "quadrature orthogonality", 30, c11},
      {12, "determinism and suite time", 1200, c12},
  };
  int unexpected = 0;
  std::vector<int> known_failed;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) o.need(false, "time budget exceeded");
    std::printf("criterion %2d: %s  %s (%.1f s, budget %.0f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.what, secs,
                c.budget);
    for (auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass) {
      if (kKnown.count(c.id))
        known_failed.push_back(c.id);
      else
        ++unexpected;
    }
  }
  if (!known_failed.empty()) {
    std::printf("known failures, printed form contradicted by the computation:\n");
    for (int id : known_failed) std::printf("  %2d: %s\n", id, kKnown.at(id).c_str());
  }
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected ? 1 : 0;
}
