#include "superint/harness.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "superint/oscillator.hpp"
#include "superint/orthopoly.hpp"
#include "superint/painleve.hpp"
#include "superint/palgebra.hpp"
#include "superint/rosenmorse.hpp"

namespace si {

namespace {

bool selected(const RunConfig& cfg, const std::string& s) { return cfg.suites.empty() || cfg.suites.count(s); }

double eval_d(const MPoly& p, double x, double s) {
  double out = 0;
  for (auto& [m, c] : p.terms()) {
    double t = c.get_d();
    for (int v = 0; v < kMaxVars; ++v) {
      if (!m.e[v]) continue;
      if (v == var::x)
        t *= std::pow(x, m.e[v]);
      else if (v == var::s)
        t *= std::pow(s, m.e[v]);
      else
        throw std::invalid_argument("eval_d: unassigned generator " + var::name(v));
    }
    out += t;
  }
  return out;
}

double eval_d(const RatFun& f, double x, double s) {
  double d = 1;
  for (auto& [g, e] : f.den()) d *= std::pow(eval_d(g, x, s), e);
  return eval_d(f.num(), x, s) / d;
}

// prefactor with constant exponents and no exponential, at a point in x
double prefactor_d(const Prefactor& p, double x, double s) {
  double out = 1;
  for (auto& [base, e] : p.powers) out *= std::pow(eval_d(base, x, s), e.const_value().get_d());
  if (!p.expo.is_zero()) out *= std::exp(eval_d(p.expo, x, s));
  return out;
}

std::vector<std::vector<double>> gram(const std::vector<WaveFunction>& fs, int nodes) {
  size_t n = fs.size();
  std::vector<std::vector<double>> G(n, std::vector<double>(n, 0.0));
  // Golub-Welsch nodes; the glfixed tables lose ~1e-10 at untabulated node counts
  gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(gsl_integration_fixed_legendre, nodes, 0, M_PI / 2, 0, 0);
  const double* th = gsl_integration_fixed_nodes(ws);
  const double* w = gsl_integration_fixed_weights(ws);
  std::vector<double> val(n);
  for (int i = 0; i < nodes; ++i) {
    double x = -std::cos(2 * th[i]), s = std::sin(2 * th[i]);
    for (size_t a = 0; a < n; ++a) val[a] = prefactor_d(fs[a].prefactor(), x, s) * eval_d(fs[a].core(), x, s);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) G[a][b] += w[i] * val[a] * val[b];
  }
  gsl_integration_fixed_free(ws);
  return G;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g17(const Rational& q) { return g17(q.get_d()); }

}  // namespace

int worker_count(int requested) {
  if (requested > 0) return requested;
  int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* e = std::getenv("SUPERINT_THREADS")) {
    int cap = std::atoi(e);
    if (cap > 0) return std::min(cap, hw);
  }
  return hw;
}

std::vector<Task> plan_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  const SampleSpec spec = cfg.spec;
  if (selected(cfg, "oscillator")) {
    tasks.push_back({"weyl", [] { return verify_weyl(); }});
    Mode om = cfg.mode == Mode::Sampled ? Mode::Sampled : Mode::Symbolic;
    for (int k : cfg.ks)
      tasks.push_back({"oscillator k=" + std::to_string(k), [k, om, spec] { return verify_oscillator(k, om, spec); }});
  }
  if (selected(cfg, "rosenmorse")) {
    RMOptions o;
    o.mode = cfg.mode;
    o.spec = spec;
    o.nmax = cfg.nmax;
    o.with_L4 = cfg.with_L4;
    for (int m : cfg.ms) tasks.push_back({"rosen-morse m=" + std::to_string(m), [m, o] { return verify_rosen_morse(m, o); }});
    std::vector<int> ms = cfg.ms;
    tasks.push_back({"seed independence", [ms] {
                       return verify_seed_independence(ms, RMParams::at(rat(5, 2), rat(7, 2), rat(3, 2)));
                     }});
  }
  if (selected(cfg, "algebra")) {
    AlgebraOptions o;
    o.spec = spec;
    o.pmax = cfg.pmax;
    for (int m : cfg.algebra_ms) tasks.push_back({"algebra m=" + std::to_string(m), [m, o] { return verify_algebra(m, o); }});
    tasks.push_back({"structure function", [] { return phi_compare(); }});
    std::vector<int> ms = cfg.ms;
    tasks.push_back({"spectrum", [ms, spec] { return spectrum_from_rep(ms, 3, spec); }});
  }
  if (selected(cfg, "painleve")) {
    tasks.push_back({"piv", [] { return verify_piv(); }});
    for (int m : cfg.sd1a_ms)
      tasks.push_back({"sd1a m=" + std::to_string(m), [m, spec] { return verify_sd1a({m}, spec); }});
  }
  if (selected(cfg, "numerics")) tasks.push_back({"numerics", [] { return verify_numerics(); }});
  return tasks;
}

Report run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<Report> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i].run();
      } catch (const std::exception& e) {
        Check c("error." + tasks[i].name, "task aborted");
        c.expect(false, e.what());
        out[i].add(c);
      }
    }
  };
  int n = std::min<int>(worker_count(threads), static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Report r;
  for (auto& o : out) r.merge(o);
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return r;
}

Report run_suite(const RunConfig& cfg) { return run_tasks(plan_suite(cfg), cfg.threads); }

int exit_code(const Report& r) { return r.ok() ? 0 : 2; }

QuadResult quad_orthogonality(int m, const Rational& alpha, const Rational& beta, int nmax, int nodes) {
  QuadResult q;
  q.regular = seed_regular(m, alpha, beta);
  if (!q.regular) {
    q.diagnostic = "seed P_" + std::to_string(m) + " has a zero on [-1, 1] at alpha=" + to_string(alpha) +
                   ", beta=" + to_string(beta);
    return q;
  }
  RosenMorseSystem sys = build_rosen_morse(m, RMParams::at(alpha, beta, 1));
  std::vector<WaveFunction> fs;
  for (int n = 0; n <= nmax; ++n) fs.push_back(psi_hat(sys, n));
  q.gram = gram(fs, nodes);
  q.min_diag = q.gram[0][0];
  for (size_t i = 0; i < fs.size(); ++i) {
    q.min_diag = std::min(q.min_diag, q.gram[i][i]);
    for (size_t j = 0; j < fs.size(); ++j)
      if (i != j)
        q.max_offdiag = std::max(q.max_offdiag, std::abs(q.gram[i][j]) / std::sqrt(q.gram[i][i] * q.gram[j][j]));
  }
  return q;
}

Report verify_numerics(int nodes) {
  Report rep;
  {
    Check c("numerics.quadrature[m=1]", "hatPsi_n are orthogonal in the factorised weight, n <= 4");
    timed(c, [&] {
      QuadResult a = quad_orthogonality(1, rat(5, 2), rat(7, 2), 4, nodes);
      c.expect(a.regular, a.diagnostic);
      if (!a.regular) return;
      QuadResult b = quad_orthogonality(1, rat(5, 2), rat(7, 2), 4, 2 * nodes);
      double drift = 0;
      for (size_t i = 0; i < a.gram.size(); ++i)
        for (size_t j = 0; j < a.gram.size(); ++j)
          drift = std::max(drift, std::abs(a.gram[i][j] - b.gram[i][j]) / std::sqrt(a.gram[i][i] * a.gram[j][j]));
      c.expect(a.max_offdiag < 1e-10, "normalised off-diagonal " + sci(a.max_offdiag));
      c.expect(a.min_diag > 0, "non-positive diagonal");
      c.expect(drift < 1e-12, "node doubling moves entries by " + sci(drift));
      c.constants["nodes"] = nodes;
      c.constants["max_offdiag_below_1e-10"] = a.max_offdiag < 1e-10;
      c.constants["doubling_below_1e-12"] = drift < 1e-12;
    });
    rep.add(c);
  }
  {
    Check c("numerics.quadrature.refusal", "quadrature refuses a seed with zeros on [-1, 1]");
    timed(c, [&] {
      // P_1^{(-a-1, b-1)} vanishes at x = 1 + 2a/(b - a), here -1/2
      QuadResult r = quad_orthogonality(1, rat(3, 2), rat(-1, 2), 4, nodes);
      c.expect(!r.regular && !r.diagnostic.empty(), "irregular seed accepted");
    });
    rep.add(c);
  }
  {
    Check c("numerics.plot", "plot data rows, exact cast of V, flagged poles");
    timed(c, [&] {
      PlotSpec p;
      std::string csv = emit_plot_data(p);
      size_t rows = std::count(csv.begin(), csv.end(), '\n') - 1;
      c.expect(rows == 401, "oscillator grid has " + std::to_string(rows) + " rows");
      RatFun V = build_oscillator(2).H2.coeff(0, 0);
      std::string mid = g17(V.eval({{var::x, 0}})) + ",";
      c.expect(csv.find("\n0," + mid) != std::string::npos, "V(0) is not the cast of the exact value");
      PlotSpec r;
      r.system = "rosenmorse";
      r.lo = -1;
      r.hi = 1;
      r.points = 21;
      r.states = {0, 1};
      std::string rm = emit_plot_data(r);
      size_t flagged = 0;
      for (size_t at = 0; (at = rm.find(",singular\n", at)) != std::string::npos; ++at) ++flagged;
      c.expect(flagged == 2, "expected the two endpoint poles flagged, got " + std::to_string(flagged));
    });
    rep.add(c);
  }
  return rep;
}

std::string emit_plot_data(const PlotSpec& p) {
  if (p.points < 2) throw std::invalid_argument("plot: need at least two grid points");
  std::ostringstream os;
  const bool rm = p.system == "rosenmorse";
  if (!rm && p.system != "oscillator") throw std::invalid_argument("plot: unknown system " + p.system);
  if (rm && (p.lo < -1 || p.hi > 1)) throw std::invalid_argument("plot: x = -cos 2theta must lie in [-1, 1]");

  RatFun V;
  std::vector<WaveFunction> states;
  if (rm) {
    RosenMorseSystem sys = build_rosen_morse(p.m, RMParams::at(p.alpha, p.beta, 1));
    V = sys.L2.coeff(0, 0);
    for (int n : p.states) states.push_back(psi_hat(sys, n));
    os << "x,theta,v";
  } else {
    OscillatorSystem sys = build_oscillator(p.k);
    V = sys.H2.coeff(0, 0);
    Prefactor pre;
    pre.exp(MPoly::gen(var::x, 2) * rat(-1, 2));
    for (int n : p.states)
      states.emplace_back(pre, RatFun::frac(exceptional_hermite_state(p.k, n).poly, pseudo_hermite(p.k)));
    os << "x,V";
  }
  for (int n : p.states) os << ",psi" << n << "_sq";
  os << ",flag\n";

  for (int i = 0; i < p.points; ++i) {
    Rational x = p.lo + (p.hi - p.lo) * Rational(i) / Rational(p.points - 1);
    std::ostringstream row;
    row << g17(x);
    if (rm) row << "," << g17(std::acos(-x.get_d()) / 2);
    bool singular = false;
    try {
      std::map<int, Rational> at{{var::x, x}};
      row << "," << g17(V.eval(at));
      for (auto& f : states) {
        Rational core = f.core().eval(at);
        double pre = prefactor_d(f.prefactor(), x.get_d(), 0);
        row << "," << g17(pre * pre * Rational(core * core).get_d());
      }
    } catch (const std::domain_error&) {
      singular = true;
    }
    if (singular) {
      os << g17(x);
      if (rm) os << "," << g17(std::acos(-x.get_d()) / 2);
      for (size_t j = 0; j <= states.size(); ++j) os << ",";
      os << ",singular\n";
    } else {
      os << row.str() << ",\n";
    }
  }
  return os.str();
}

}  // namespace si
