#pragma once

// Real symmetric eigenproblems: tridiagonal (implicit-shift QL), dense
// (Householder reduction + QL), and the generalized problem H v = E B v with
// B symmetric positive-definite tridiagonal (bidiagonal Cholesky reduction).

#include <cstddef>
#include <optional>
#include <vector>

namespace multipole {

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<double> column(std::size_t j) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Symmetric tridiagonal matrix: diag has n entries, offdiag n-1.
class SymTridiag {
 public:
  SymTridiag() = default;
  SymTridiag(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t size() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& offdiag() const noexcept { return offdiag_; }

  Matrix to_dense() const;

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

/// Dense symmetric matrix; construction checks |A_ij - A_ji| <= 1e-13 max|A|.
class SymDense {
 public:
  SymDense() = default;
  explicit SymDense(Matrix entries);

  std::size_t size() const noexcept { return entries_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Matrix& matrix() const noexcept { return entries_; }

 private:
  Matrix entries_;
};

struct EigenResult {
  std::vector<double> values;     // ascending
  std::optional<Matrix> vectors;  // column k belongs to values[k]
};

/// Cholesky factor of a tridiagonal SPD matrix: L has diag and one subdiagonal.
struct LowerBidiagonal {
  std::vector<double> diag;
  std::vector<double> sub;  // L(i+1, i)
};

inline constexpr int kMaxSweepsPerEigenvalue = 50;

EigenResult symtri_eigen(const SymTridiag& t, bool want_vectors);

EigenResult dense_sym_eigen(const SymDense& a, bool want_vectors);

/// Throws NotPositiveDefiniteError naming the failing pivot.
LowerBidiagonal cholesky_tridiag(const SymTridiag& b);

/// Solves H v = lambda B v. Eigenvectors are B-orthonormal.
EigenResult generalized_sym_eigen(const SymDense& h, const SymTridiag& b, bool want_vectors);

}  // namespace multipole
