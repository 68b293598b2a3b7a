#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rscuc {

// Dense row-major matrix of doubles. Small enough for desk-scale networks;
// no sparsity, no expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return a_.size(); }
  bool empty() const { return a_.empty(); }

  double& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  double operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  double* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }
  const double* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    double* ci = c.row(i);
    const double* ai = a.row(i);
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = ai[k];
      if (aik == 0.0) continue;
      const double* bk = b.row(k);
      for (int j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

// LU factorization with partial pivoting; solves A x = b in place.
// Throws on numerically singular input.
class LuSolver {
 public:
  explicit LuSolver(Matrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const int n = lu_.rows();
    if (n != lu_.cols()) throw std::invalid_argument("LuSolver: matrix not square");
    for (int i = 0; i < n; ++i) perm_[i] = i;
    for (int k = 0; k < n; ++k) {
      int p = k;
      double best = std::abs(lu_(k, k));
      for (int i = k + 1; i < n; ++i) {
        const double v = std::abs(lu_(i, k));
        if (v > best) { best = v; p = i; }
      }
      if (best < kSingularTol) throw std::runtime_error("LuSolver: singular matrix");
      if (p != k) {
        for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        std::swap(perm_[k], perm_[p]);
      }
      for (int i = k + 1; i < n; ++i) {
        lu_(i, k) /= lu_(k, k);
        const double lik = lu_(i, k);
        if (lik == 0.0) continue;
        for (int j = k + 1; j < n; ++j) lu_(i, j) -= lik * lu_(k, j);
      }
    }
  }

  std::vector<double> solve(const std::vector<double>& b) const {
    const int n = lu_.rows();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("LuSolver::solve: size mismatch");
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

 private:
  static constexpr double kSingularTol = 1e-12;
  Matrix lu_;
  std::vector<int> perm_;
};

}  // namespace rscuc
