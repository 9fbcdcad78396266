#pragma once
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "superint/report.hpp"

namespace si {

struct RunConfig {
  // oscillator, rosenmorse, algebra, painleve, numerics; empty selects all
  std::set<std::string> suites;
  Mode mode = Mode::Basis;  // for the Rosen-Morse operator checks
  std::vector<int> ks{2, 4, 6};
  std::vector<int> ms{1, 2, 3};
  std::vector<int> algebra_ms{1, 2};
  std::vector<int> sd1a_ms{1, 2};
  int nmax = 3, pmax = 8;
  bool with_L4 = true;
  SampleSpec spec;
  int threads = 0;  // 0: SUPERINT_THREADS or hardware concurrency
};

struct Task {
  std::string name;
  std::function<Report()> run;
};
std::vector<Task> plan_suite(const RunConfig& cfg);
// checks come back sorted by name whatever the completion order
Report run_tasks(const std::vector<Task>& tasks, int threads);
Report run_suite(const RunConfig& cfg);
int worker_count(int requested);

// 0 if nothing is inconsistent, 2 otherwise; mismatches with the print are warnings
int exit_code(const Report& r);

// Gram matrix of hatPsi_0..hatPsi_nmax in d theta on [0, pi/2], Gauss-Legendre
struct QuadResult {
  bool regular = false;  // seed free of zeros on [-1, 1]
  std::string diagnostic;
  std::vector<std::vector<double>> gram;
  double max_offdiag = 0;  // normalised by sqrt(G_ii G_jj)
  double min_diag = 0;
};
QuadResult quad_orthogonality(int m, const Rational& alpha, const Rational& beta, int nmax, int nodes);
Report verify_numerics(int nodes = 200);

// CSV: header row, then one row per grid point; singular points are flagged
struct PlotSpec {
  std::string system = "oscillator";  // or rosenmorse
  int k = 2, m = 1;
  Rational alpha = rat(5, 2), beta = rat(7, 2);
  Rational lo = -4, hi = 4;
  int points = 401;
  std::vector<int> states;
};
std::string emit_plot_data(const PlotSpec& p);

}  // namespace si
