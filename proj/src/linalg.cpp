#include "superint/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace si {

RMat RMat::identity(int n) {
  RMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMat RMat::diag(const std::vector<Rational>& d) {
  RMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

namespace {
void same_shape(const RMat& x, const RMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("RMat: shape mismatch");
}
}  // namespace

RMat operator+(const RMat& x, const RMat& y) {
  same_shape(x, y);
  RMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

RMat operator-(const RMat& x, const RMat& y) {
  same_shape(x, y);
  RMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

RMat operator*(const RMat& x, const RMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("RMat: shape mismatch");
  RMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

RMat operator*(const Rational& c, const RMat& x) {
  RMat r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

bool RMat::is_zero() const {
  for (auto& v : a)
    if (sgn(v) != 0) return false;
  return true;
}

std::optional<Rational> RMat::scalar() const {
  if (rows != cols) return std::nullopt;
  if (rows == 0) return Rational(0);
  Rational c = (*this)(0, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if ((*this)(i, j) != (i == j ? c : Rational(0))) return std::nullopt;
  return c;
}

std::string RMat::str() const {
  std::ostringstream o;
  o << "[";
  for (int i = 0; i < rows; ++i) {
    o << (i ? "; " : "");
    for (int j = 0; j < cols; ++j) o << (j ? ", " : "") << to_string((*this)(i, j));
  }
  o << "]";
  return o.str();
}

RMat commutator(const RMat& x, const RMat& y) { return x * y - y * x; }
RMat anticommutator(const RMat& x, const RMat& y) { return x * y + y * x; }

RMat power(const RMat& x, int e) {
  RMat r = RMat::identity(x.rows);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

LinearSolution solve_linear(RMat A, std::vector<Rational> b) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve_linear: shape mismatch");
  LinearSolution s;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < A.cols && row < A.rows; ++col) {
    int p = row;
    while (p < A.rows && sgn(A(p, col)) == 0) ++p;
    if (p == A.rows) continue;
    if (p != row) {
      for (int j = 0; j < A.cols; ++j) std::swap(A(p, j), A(row, j));
      std::swap(b[p], b[row]);
    }
    Rational inv = 1 / A(row, col);
    for (int j = col; j < A.cols; ++j) A(row, j) *= inv;
    b[row] *= inv;
    for (int i = 0; i < A.rows; ++i) {
      if (i == row || sgn(A(i, col)) == 0) continue;
      Rational f = A(i, col);
      for (int j = col; j < A.cols; ++j) A(i, j) -= f * A(row, j);
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  s.rank = row;
  s.consistent = true;
  for (int i = row; i < A.rows; ++i)
    if (sgn(b[i]) != 0) s.consistent = false;
  s.x.assign(A.cols, Rational(0));
  std::vector<bool> is_pivot(A.cols, false);
  for (int i = 0; i < row; ++i) {
    s.x[pivot_col[i]] = b[i];
    is_pivot[pivot_col[i]] = true;
  }
  for (int j = 0; j < A.cols; ++j)
    if (!is_pivot[j]) s.free_vars.push_back(j);
  return s;
}

}  // namespace si
