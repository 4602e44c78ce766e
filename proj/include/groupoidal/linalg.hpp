#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "groupoidal/element.hpp"

namespace groupoidal {

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Complex> data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool all_finite(const Matrix& a);

/// Eigenvalues (ascending) of a Hermitian matrix by cyclic Jacobi rotations.
/// The matrix is embedded as the real symmetric [[Re, -Im], [Im, Re]], whose
/// spectrum is that of the input with every eigenvalue doubled.
std::vector<double> hermitian_eigenvalues(const Matrix& a);

/// Largest singular value: sqrt of the top eigenvalue of a^dagger a.
/// Throws std::domain_error on non-finite entries.
double largest_singular_value(const Matrix& a);

/// Rank of the span of the given vectors (all of equal length), by Gaussian
/// elimination with partial pivoting; pivots below pivot_tol times the largest
/// entry are treated as zero.
std::size_t span_rank(const std::vector<std::vector<Complex>>& vectors, double pivot_tol = 1e-9);
std::size_t matrix_rank(const Matrix& a, double pivot_tol = 1e-9);

}  // namespace groupoidal
