#include "groupoidal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace groupoidal {

namespace {

constexpr double kOffDiagonalThreshold = 1e-13;
constexpr int kMaxSweeps = 100;

// Cyclic Jacobi on a dense real symmetric matrix, row-major sweep order.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double scale = 0.0;
  for (double v : a) scale += v * v;
  scale = std::max(1.0, std::sqrt(scale));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off) < kOffDiagonalThreshold * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix adjoint(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

bool all_finite(const Matrix& a) {
  return std::all_of(a.data().begin(), a.data().end(),
                     [](Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  if (!all_finite(a)) throw std::domain_error("hermitian_eigenvalues: non-finite entry");
  const std::size_t n = a.rows();
  const std::size_t m = 2 * n;
  std::vector<double> real(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Symmetrize so round-off in a nearly Hermitian input cannot bias the result.
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      real[i * m + j] = v.real();
      real[(i + n) * m + (j + n)] = v.real();
      real[(i + n) * m + j] = v.imag();
      real[i * m + (j + n)] = -v.imag();
    }
  }
  std::vector<double> doubled = symmetric_eigenvalues(std::move(real), m);
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return eig;
}

double largest_singular_value(const Matrix& a) {
  if (!all_finite(a)) throw std::domain_error("operator norm: non-finite entry");
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const std::vector<double> eig = hermitian_eigenvalues(adjoint(a) * a);
  return std::sqrt(std::max(0.0, eig.back()));
}

std::size_t span_rank(const std::vector<std::vector<Complex>>& vectors, double pivot_tol) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<Complex>> rows = vectors;
  double largest = 0.0;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("span_rank: vectors differ in length");
    for (Complex v : r) largest = std::max(largest, std::abs(v));
  }
  if (largest == 0.0) return 0;
  const double threshold = pivot_tol * largest;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
    if (std::abs(rows[pivot][col]) <= threshold) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Complex factor = rows[r][col] / rows[rank][col];
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t matrix_rank(const Matrix& a, double pivot_tol) {
  std::vector<std::vector<Complex>> rows(a.rows(), std::vector<Complex>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return span_rank(rows, pivot_tol);
}

}  // namespace groupoidal
