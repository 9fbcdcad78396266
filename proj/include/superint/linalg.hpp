#pragma once
#include <optional>
#include <string>
#include <vector>

#include "superint/rational.hpp"

namespace si {

// dense matrix over Q
struct RMat {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  RMat() = default;
  RMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static RMat identity(int n);
  static RMat diag(const std::vector<Rational>& d);

  Rational& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  friend RMat operator+(const RMat& x, const RMat& y);
  friend RMat operator-(const RMat& x, const RMat& y);
  friend RMat operator*(const RMat& x, const RMat& y);
  friend RMat operator*(const Rational& c, const RMat& x);
  bool operator==(const RMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;
  // c I for some c, returned
  std::optional<Rational> scalar() const;
  std::string str() const;
};

RMat commutator(const RMat& x, const RMat& y);
RMat anticommutator(const RMat& x, const RMat& y);
RMat power(const RMat& x, int e);

struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  std::vector<Rational> x;    // one solution, free unknowns set to 0
  std::vector<int> free_vars; // unknowns not fixed by the system
};

// exact Gauss-Jordan on the augmented system A x = b
LinearSolution solve_linear(RMat A, std::vector<Rational> b);

}  // namespace si
