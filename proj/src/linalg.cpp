#include "tau/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tau/errors.hpp"
#include "tau/kernels.hpp"

namespace tau {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ArgumentError("from_rows: ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Vector DenseMatrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

DenseMatrix DenseMatrix::block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw ArgumentError("block: exceeds matrix size");
  DenseMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto src = row(r);
    std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(cols),
              out.row(r).begin());
  }
  return out;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double DenseMatrix::norm1() const {
  std::vector<double> sums(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += std::abs((*this)(r, c));
  return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

double DenseMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (double v : row(r)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double DenseMatrix::max_abs() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ArgumentError("matrix sum: shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ArgumentError("matrix difference: shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
DenseMatrix operator*(double s, DenseMatrix a) { return a *= s; }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  return kernels::parallel::multiply(a, b);
}

Vector operator*(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw ArgumentError("matrix-vector: size mismatch");
  Vector y(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto row = a.row(r);
    double s = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) s += row[c] * x[c];
    y[r] = s;
  }
  return y;
}

double norm_inf(std::span<const double> x) {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  return best;
}

LUFactors::LUFactors(DenseMatrix a) : lu_(std::move(a)) {
  if (!lu_.square()) throw ArgumentError("LU: matrix must be square");
  norm1_ = lu_.norm1();
  const double max_a = lu_.max_abs();
  const std::size_t bad = kernels::parallel::lu_factor(lu_, perm_);
  if (bad < lu_.rows())
    throw SingularMatrixError(bad, std::numeric_limits<double>::infinity());
  double max_u = 0.0;
  for (std::size_t i = 0; i < lu_.rows(); ++i)
    for (std::size_t j = i; j < lu_.cols(); ++j) max_u = std::max(max_u, std::abs(lu_(i, j)));
  growth_ = max_a > 0.0 ? max_u / max_a : 1.0;
}

Vector LUFactors::solve(std::span<const double> b) const {
  const std::size_t n = size();
  if (b.size() != n) throw ArgumentError("LU solve: right-hand side size mismatch");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = lu_.row(i);
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= row[k] * x[k];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto row = lu_.row(i);
    double s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= row[k] * x[k];
    x[i] = s / row[i];
  }
  return x;
}

Vector LUFactors::solve_transposed(std::span<const double> b) const {
  // A^T = U^T L^T P, so solve U^T z = b, L^T w = z, x = P^T w.
  const std::size_t n = size();
  if (b.size() != n) throw ArgumentError("LU solve: right-hand side size mismatch");
  Vector z(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    z[i] /= lu_(i, i);
    const double zi = z[i];
    const auto row = lu_.row(i);
    for (std::size_t k = i + 1; k < n; ++k) z[k] -= row[k] * zi;
  }
  for (std::size_t i = n; i-- > 0;) {
    const double zi = z[i];
    const auto row = lu_.row(i);
    for (std::size_t k = 0; k < i; ++k) z[k] -= row[k] * zi;
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = z[i];
  return x;
}

double LUFactors::cond_estimate_1() const {
  const std::size_t n = size();
  if (n == 0) return 1.0;
  auto norm1v = [](const Vector& v) {
    double s = 0.0;
    for (double e : v) s += std::abs(e);
    return s;
  };

  // Hager's iteration for ||A^{-1}||_1 (as refined in LAPACK's xLACON).
  Vector x(n, 1.0 / static_cast<double>(n));
  double est = 0.0;
  std::size_t last_j = n;
  for (int iter = 0; iter < 5; ++iter) {
    const Vector y = solve(x);
    const double new_est = norm1v(y);
    if (iter > 0 && new_est <= est) break;
    est = new_est;
    Vector sign(n);
    for (std::size_t i = 0; i < n; ++i) sign[i] = y[i] >= 0.0 ? 1.0 : -1.0;
    const Vector z = solve_transposed(sign);
    std::size_t j = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(z[i]) > std::abs(z[j])) j = i;
    double ztx = 0.0;
    for (std::size_t i = 0; i < n; ++i) ztx += z[i] * x[i];
    if (iter > 0 && (std::abs(z[j]) <= ztx || j == last_j)) break;
    last_j = j;
    std::fill(x.begin(), x.end(), 0.0);
    x[j] = 1.0;
  }

  // Higham's alternating test vector guards against the iteration stalling.
  Vector alt(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = 1.0 + (n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0);
    alt[i] = (i % 2 == 0) ? mag : -mag;
  }
  const double alt_est = 2.0 * norm1v(solve(alt)) / (3.0 * static_cast<double>(n));
  est = std::max(est, alt_est);

  const double c = est * norm1_;
  return std::isfinite(c) ? c : std::numeric_limits<double>::infinity();
}

Vector lu_solve(const DenseMatrix& a, std::span<const double> b) {
  if (!a.square()) throw ArgumentError("lu_solve: matrix must be square");
  if (a.rows() != b.size()) throw ArgumentError("lu_solve: dimension mismatch");
  return LUFactors(a).solve(b);
}

double cond_estimate_1(const DenseMatrix& a) {
  if (!a.square()) throw ArgumentError("cond_estimate_1: matrix must be square");
  try {
    return LUFactors(a).cond_estimate_1();
  } catch (const SingularMatrixError&) {
    return std::numeric_limits<double>::infinity();
  }
}

Vector solve_upper(const DenseMatrix& u, std::span<const double> b) {
  const std::size_t n = u.rows();
  if (!u.square() || b.size() != n) throw ArgumentError("solve_upper: dimension mismatch");
  Vector x(b.begin(), b.end());
  for (std::size_t i = n; i-- > 0;) {
    if (u(i, i) == 0.0) throw SingularMatrixError(i, std::numeric_limits<double>::infinity());
    const auto row = u.row(i);
    double s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= row[k] * x[k];
    x[i] = s / row[i];
  }
  return x;
}

Vector solve_lower(const DenseMatrix& l, std::span<const double> b) {
  const std::size_t n = l.rows();
  if (!l.square() || b.size() != n) throw ArgumentError("solve_lower: dimension mismatch");
  Vector x(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (l(i, i) == 0.0) throw SingularMatrixError(i, std::numeric_limits<double>::infinity());
    const auto row = l.row(i);
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= row[k] * x[k];
    x[i] = s / row[i];
  }
  return x;
}

}  // namespace tau
