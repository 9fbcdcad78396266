#include "doctest.h"
#include "superint/palgebra.hpp"

using namespace si;

namespace {
AlgebraPoint point(int m) { return {rat(5, 2), rat(7, 2), rat(3, 2), m}; }
MPoly E() { return MPoly::gen(var::E); }
}  // namespace

TEST_CASE("exact linear solve") {
  RMat A(3, 2);
  A(0, 0) = 1, A(0, 1) = 1;
  A(1, 0) = 1, A(1, 1) = -1;
  A(2, 0) = 2, A(2, 1) = 0;
  auto s = solve_linear(A, {3, 1, 4});
  CHECK(s.consistent);
  CHECK(s.rank == 2);
  CHECK(s.x == std::vector<Rational>{2, 1});
  CHECK_FALSE(solve_linear(A, {3, 1, 5}).consistent);
  RMat B(1, 2);
  B(0, 0) = 2, B(0, 1) = 4;
  auto t = solve_linear(B, {2});
  CHECK(t.rank == 1);
  CHECK(t.free_vars == std::vector<int>{1});
}

TEST_CASE("level matrices") {
  Level l = level_matrices(point(1), 3);
  CHECK(l.X.rows == 4);
  CHECK(l.E == rat(3, 2) * (6 + 2 + 6));
  // L4 only couples neighbours inside a level
  CHECK(l.Y(0, 2) == 0);
  CHECK(l.Y(3, 0) == 0);
  CHECK(l.Z == commutator(l.X, l.Y));
  CHECK(level_matrices(point(1), 2, rat(1, 3)).Y == rat(1, 3) * level_matrices(point(1), 2).Y);
}

TEST_CASE("closure coefficients") {
  for (int m : {1, 2}) {
    AlgebraPoint pt = point(m);
    AlgebraFit F = fit_algebra(pt, 8, 1 / (2 * pt.omega));
    REQUIRE(F.consistent);
    CHECK(F.rank == F.unknowns);
    CHECK(F.coeff["a"] == MPoly(0));
    CHECK(F.coeff["b"] == MPoly(8));
    CHECK(F.coeff["d"] == MPoly(-16));
    CHECK(F.coeff["g"] == MPoly(-2));
    CHECK(F.coeff["b2"] == MPoly(-8));
    CHECK(F.i_on_X);
    AlgebraFit raw = fit_algebra(pt, 8, 1);
    CHECK(raw.coeff["g"] == MPoly(-8 * pt.omega * pt.omega));
    CHECK(raw.coeff["b"] == MPoly(8));
    // c is linear in E
    CHECK(F.coeff["c"].deg(var::E) == 1);
    for (auto& k : casimir_levels(pt, F, 8, 1 / (2 * pt.omega))) CHECK(k.has_value());
  }
}

TEST_CASE("fit rejects energy-independent coefficients") {
  // coefficients frozen to constants cannot absorb the energy dependence
  AlgebraPoint pt = point(1);
  AlgebraFit F = fit_algebra(pt, 8, 1, 0);
  CHECK_FALSE(F.consistent);
}

TEST_CASE("displayed coefficients at m=1 with alpha of the opposite sign") {
  AlgebraPoint pt = point(1);
  AlgebraFit F = fit_algebra(pt, 8, 1 / (2 * pt.omega));
  auto P = printed_algebra();
  std::map<int, Rational> v{{var::alpha, -pt.alpha}, {var::beta, pt.beta}, {var::omega, pt.omega}, {var::m, 1}};
  for (const char* n : {"a", "b", "c", "d", "f", "g", "h", "i"}) CHECK(P[n].subs(v).num() == F.coeff[n]);
  CHECK(P["j_grouped"].subs(v).num() == F.coeff["j"]);
  CHECK(P["j"].subs(v).num() != F.coeff["j"]);
}

TEST_CASE("structure function displays") {
  Integer two52;
  mpz_ui_pow_ui(two52.get_mpz_t(), 2, 52);
  CHECK(phi_constant() == -3 * two52);
  RatFun phi = phi_factored();
  MPoly a = MPoly::gen(var::alpha), b = MPoly::gen(var::beta), w = MPoly::gen(var::omega);
  // vacuum
  CHECK(phi.subs(var::t, RatFun((MPoly(-1) + a + b) * Rational(1, 2))).is_zero());
  // explicit energy root
  CHECK(phi.subs(var::t, (RatFun(w) - RatFun(E())) / RatFun(w * Rational(2))).is_zero());
  CHECK(phi_expanded().deg(var::t) == 10);
  Report r = phi_compare();
  CHECK(r.ok());
  CHECK(r.find("structure_function.forms")->status == Status::Mismatch);
}

TEST_CASE("spectrum from the representation") {
  SampleSpec spec;
  spec.trials = 3;
  Report r = spectrum_from_rep({1, 2, 3}, 3, spec);
  CHECK(r.ok());
  const Check* c = r.find("structure_function.spectrum[m=3]");
  REQUIRE(c);
  // Phi vanishes at N = m, so positivity holds exactly for p < m
  CHECK(c->constants["positive_on_1..p"]["1"] == true);
  CHECK(c->constants["positive_on_1..p"]["2"] == true);
  CHECK(c->constants["positive_on_1..p"]["3"] == false);
  CHECK(r.find("structure_function.spectrum[m=1]")->constants["positive_on_1..p"]["1"] == false);
}

TEST_CASE("algebra report") {
  Report r = verify_algebra(1);
  CHECK(r.ok());
  CHECK(r.find("algebra[m=1].L4_matrix")->status == Status::Verified);
  CHECK(r.find("algebra[m=1].closure")->status == Status::Verified);
  CHECK(r.find("algebra[m=1].Y0")->status == Status::Verified);
}
