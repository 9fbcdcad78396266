#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "superint/harness.hpp"
#include "superint/orthopoly.hpp"
#include "superint/oscillator.hpp"
#include "superint/painleve.hpp"
#include "superint/palgebra.hpp"
#include "superint/rosenmorse.hpp"

using namespace si;

namespace {

struct Global {
  std::string mode;  // empty: subcommand default
  uint64_t seed = 1;
  int trials = 5;
  int threads = 0;
  std::string report, dump_op;
  bool with_time = false;

  SampleSpec spec() const { return {trials, seed}; }
  Mode mode_or(Mode d) const { return mode.empty() ? d : parse_mode(mode); }
};

// exit codes: 0 clean or mismatches only, 1 usage or I/O error, 2 inconsistent
int finish(const Global& g, const Report& r) {
  std::string text = r.dump(g.with_time);
  if (g.report.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.report, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to " << g.report << "\n";
      return 1;
    }
    out << text;
    if (!out.flush()) {
      std::cerr << "cannot write report to " << g.report << "\n";
      return 1;
    }
  }
  std::cerr << "verified " << r.count(Status::Verified) << ", mismatch " << r.count(Status::Mismatch)
            << ", inconsistent " << r.count(Status::Inconsistent) << "\n";
  for (auto& c : r.checks)
    if (c.status == Status::Inconsistent) std::cerr << "  inconsistent: " << c.name << "\n";
  return exit_code(r);
}

void dump(const std::map<std::string, const DiffOp*>& ops, const std::string& name) {
  auto it = ops.find(name);
  if (it == ops.end()) {
    std::string known;
    for (auto& [k, v] : ops) known += " " + k;
    throw CLI::ValidationError("--dump-op", "unknown operator " + name + "; known:" + known);
  }
  std::cout << name << " = " << it->second->str() << "\n";
}

MPoly param(const std::string& s, int gen) { return s.empty() ? MPoly::gen(gen) : MPoly(parse_rational(s)); }

nlohmann::json coefficients(const MPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  if (p.is_zero()) return out;
  auto cs = p.coeffs_in(var::x);
  int top = cs.rbegin()->first;
  for (int k = 0; k <= top; ++k) out.push_back(cs.count(k) ? cs[k].str() : "0");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the superintegrable systems and their algebras"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--mode", g.mode, "symbolic, sampled or basis")->check(CLI::IsMember({"symbolic", "sampled", "basis"}));
  app.add_option("--seed", g.seed, "seed for sampled parameters");
  app.add_option("--trials", g.trials, "number of sampled parameter points")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads (default: SUPERINT_THREADS or all cores)");
  app.add_option("--report", g.report, "write the JSON report here instead of stdout");
  app.add_option("--dump-op", g.dump_op, "print a named operator");
  app.add_flag("--with-time", g.with_time, "include wall times in the report");

  int result = 0;

  auto* osc = app.add_subcommand("verify-oscillator", "extended oscillator, intertwining, integrals, Gravel form");
  int k = 2;
  osc->add_option("--k", k, "even degree of the pseudo-Hermite seed")->check(CLI::PositiveNumber);
  osc->fallthrough();
  osc->callback([&] {
    if (!g.dump_op.empty()) {
      OscillatorSystem s = build_oscillator(k);
      dump(s.named(), g.dump_op);
    }
    Report r = verify_weyl();
    r.merge(verify_oscillator(k, g.mode_or(Mode::Symbolic), g.spec()));
    result = finish(g, r);
  });

  auto* rm = app.add_subcommand("verify-rosen-morse", "exceptional Jacobi system, ladders and the fourth-order integral");
  int m = 1, nmax = 3;
  bool no_L4 = false;
  rm->add_option("--m", m, "seed degree")->check(CLI::PositiveNumber);
  rm->add_option("--nmax", nmax, "largest angular quantum number in the basis checks");
  rm->add_flag("--no-L4", no_L4, "skip the fourth-order integral");
  rm->fallthrough();
  rm->callback([&] {
    if (!g.dump_op.empty()) {
      RosenMorseSystem s = build_rosen_morse(m, RMParams::symbolic());
      auto ops = s.named();
      IntegralL4 I;
      if (g.dump_op == "D" || g.dump_op == "L4" || g.dump_op == "L5") {
        I = build_L4(s, pole_term(s));
        ops["D"] = &I.D;
        ops["L4"] = &I.L4;
        ops["L5"] = &I.L5;
      }
      dump(ops, g.dump_op);
    }
    RMOptions o;
    o.mode = g.mode_or(Mode::Symbolic);
    o.spec = g.spec();
    o.nmax = nmax;
    o.with_L4 = !no_L4;
    result = finish(g, verify_rosen_morse(m, o));
  });

  auto* alg = app.add_subcommand("verify-algebra", "cubic algebra, Casimir and structure function");
  int am = 1, pmax = 8;
  alg->add_option("--m", am, "seed degree")->check(CLI::PositiveNumber);
  alg->add_option("--pmax", pmax, "highest energy level used in the fit");
  alg->fallthrough();
  alg->callback([&] {
    AlgebraOptions o;
    o.mode = g.mode_or(Mode::Basis);
    o.spec = g.spec();
    o.pmax = pmax;
    Report r = verify_algebra(am, o);
    r.merge(phi_compare());
    r.merge(spectrum_from_rep({am}, 3, g.spec()));
    result = finish(g, r);
  });

  auto* pl = app.add_subcommand("verify-painleve", "PIV lattice fit or the SD-I.a equation for W");
  std::string target = "sd1a";
  int pm = 1;
  pl->add_option("--target", target, "piv or sd1a")->check(CLI::IsMember({"piv", "sd1a"}));
  pl->add_option("--m", pm, "seed degree (sd1a)")->check(CLI::PositiveNumber);
  pl->fallthrough();
  pl->callback([&] { result = finish(g, target == "piv" ? verify_piv() : verify_sd1a({pm}, g.spec())); });

  auto* poly = app.add_subcommand("poly", "exact coefficient list of a polynomial family member, lowest degree first");
  std::string family = "hermite", pa, pb;
  int pn = 0, pk = 2, pmm = 1;
  poly->add_option("--family", family, "hermite, pseudo-hermite, laguerre, jacobi, xhermite, xjacobi")
      ->check(CLI::IsMember({"hermite", "pseudo-hermite", "laguerre", "jacobi", "xhermite", "xjacobi"}));
  poly->add_option("--n", pn, "degree index");
  poly->add_option("--k", pk, "pseudo-Hermite seed degree (xhermite)");
  poly->add_option("--m", pmm, "seed degree (xjacobi)");
  poly->add_option("--alpha", pa, "rational alpha (default symbolic)");
  poly->add_option("--beta", pb, "rational beta (default symbolic)");
  poly->callback([&] {
    MPoly a = param(pa, var::alpha), b = param(pb, var::beta), p;
    if (family == "hermite")
      p = hermite(pn);
    else if (family == "pseudo-hermite")
      p = pseudo_hermite(pn);
    else if (family == "laguerre")
      p = laguerre(pn, a, MPoly::gen(var::x));
    else if (family == "jacobi")
      p = jacobi(pn, a, b);
    else if (family == "xhermite")
      p = exceptional_hermite(pk, pn).poly;
    else
      p = exceptional_jacobi(pmm, pn, a, b).poly;
    nlohmann::json j;
    j["family"] = family;
    j["n"] = pn;
    if (family == "xhermite") j["k"] = pk;
    if (family == "xjacobi") j["m"] = pmm;
    if (family == "laguerre" || family == "jacobi" || family == "xjacobi") j["alpha"] = a.str();
    if (family == "jacobi" || family == "xjacobi") j["beta"] = b.str();
    j["degree"] = p.deg(var::x);
    j["coefficients"] = coefficients(p);
    std::cout << j.dump(2) << "\n";
  });

  auto* plot = app.add_subcommand("plot", "CSV of the potential and |psi|^2 on a grid");
  PlotSpec ps;
  std::string lo = "-4", hi = "4", pal = "5/2", pbe = "7/2", out;
  plot->add_option("--system", ps.system, "oscillator or rosenmorse")->check(CLI::IsMember({"oscillator", "rosenmorse"}));
  plot->add_option("--k", ps.k, "oscillator seed degree");
  plot->add_option("--m", ps.m, "Rosen-Morse seed degree");
  plot->add_option("--alpha", pal);
  plot->add_option("--beta", pbe);
  plot->add_option("--lo", lo, "grid start (x; for rosenmorse x = -cos 2theta)");
  plot->add_option("--hi", hi, "grid end");
  plot->add_option("--points", ps.points);
  plot->add_option("--states", ps.states, "state indices for |psi|^2 columns");
  plot->add_option("--out", out, "CSV path (default stdout)");
  plot->callback([&] {
    if (ps.system == "rosenmorse" && !plot->count("--lo")) lo = "-1";
    if (ps.system == "rosenmorse" && !plot->count("--hi")) hi = "1";
    ps.lo = parse_rational(lo);
    ps.hi = parse_rational(hi);
    ps.alpha = parse_rational(pal);
    ps.beta = parse_rational(pbe);
    std::string csv = emit_plot_data(ps);
    if (out.empty()) {
      std::cout << csv;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!(f << csv).flush()) {
        std::cerr << "cannot write " << out << "\n";
        result = 1;
      }
    }
  });

  auto* all = app.add_subcommand("all", "every suite");
  std::vector<std::string> suites;
  all->add_option("--suite", suites, "restrict to oscillator, rosenmorse, algebra, painleve, numerics")
      ->check(CLI::IsMember({"oscillator", "rosenmorse", "algebra", "painleve", "numerics"}));
  std::vector<int> ms;
  all->add_option("--m", ms, "seed degrees for the Rosen-Morse suite");
  all->fallthrough();
  all->callback([&] {
    RunConfig cfg;
    cfg.suites = {suites.begin(), suites.end()};
    cfg.mode = g.mode_or(Mode::Basis);
    if (!ms.empty()) cfg.ms = ms;
    cfg.spec = g.spec();
    cfg.threads = g.threads;
    result = finish(g, run_suite(cfg));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return result;
}
