#include "tau/kernels.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "tau/errors.hpp"

namespace tau::kernels {

namespace {

void check_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw ArgumentError("multiply: inner dimensions differ");
}

// One row of C = A*B. Zero entries of A are skipped, which makes the
// triangular and banded operator products cheap.
inline void multiply_row(const DenseMatrix& a, const DenseMatrix& b,
                         DenseMatrix& c, std::size_t i) {
  auto out = c.row(i);
  const auto arow = a.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const double aik = arow[k];
    if (aik == 0.0) continue;
    const auto brow = b.row(k);
    for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
  }
}

std::size_t select_pivot(const DenseMatrix& a, std::size_t k) {
  std::size_t p = k;
  double best = std::abs(a(k, k));
  for (std::size_t i = k + 1; i < a.rows(); ++i) {
    const double v = std::abs(a(i, k));
    if (v > best) {
      best = v;
      p = i;
    }
  }
  return p;
}

void swap_rows(DenseMatrix& a, std::vector<std::size_t>& perm, std::size_t k,
               std::size_t p) {
  if (p == k) return;
  auto rk = a.row(k);
  auto rp = a.row(p);
  std::swap_ranges(rk.begin(), rk.end(), rp.begin());
  std::swap(perm[k], perm[p]);
}

inline void eliminate_row(DenseMatrix& a, std::size_t k, std::size_t i) {
  const std::size_t n = a.cols();
  const double l = a(i, k) / a(k, k);
  a(i, k) = l;
  if (l == 0.0) return;
  const auto pivot_row = a.row(k);
  auto target = a.row(i);
  for (std::size_t j = k + 1; j < n; ++j) target[j] -= l * pivot_row[j];
}

inline void integral_column(const DenseMatrix& deriv,
                            std::span<const ThreeTerm> coeffs,
                            DenseMatrix& theta, std::size_t j,
                            std::vector<double>& col) {
  col.assign(j + 2, 0.0);
  col[j + 1] = coeffs[j].next / static_cast<double>(j + 1);
  for (std::size_t i = j; i-- > 0;) {
    const auto hrow = deriv.row(i);
    double acc = 0.0;
    for (std::size_t k = i + 2; k <= j + 1; ++k) acc += hrow[k] * col[k];
    col[i + 1] = -coeffs[i].next / static_cast<double>(i + 1) * acc;
  }
  for (std::size_t r = 1; r <= j + 1; ++r) theta(r, j) = col[r];
}

void check_integral(const DenseMatrix& deriv, std::span<const ThreeTerm> coeffs) {
  if (!deriv.square() || deriv.rows() < 2)
    throw ArgumentError("integral_columns: derivative matrix must be square, size >= 2");
  if (coeffs.size() + 1 < deriv.rows())
    throw ArgumentError("integral_columns: coefficient table too short");
}

}  // namespace

namespace serial {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  check_multiply(a, b);
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
  return c;
}

std::size_t lu_factor(DenseMatrix& a, std::vector<std::size_t>& perm) {
  const std::size_t n = a.rows();
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = select_pivot(a, k);
    if (a(p, k) == 0.0) return k;
    swap_rows(a, perm, k, p);
    for (std::size_t i = k + 1; i < n; ++i) eliminate_row(a, k, i);
  }
  return n;
}

DenseMatrix integral_columns(const DenseMatrix& deriv,
                             std::span<const ThreeTerm> coeffs) {
  check_integral(deriv, coeffs);
  const std::size_t size = deriv.rows();
  DenseMatrix theta(size, size);
  std::vector<double> col;
  for (std::size_t j = 0; j + 1 < size; ++j) integral_column(deriv, coeffs, theta, j, col);
  return theta;
}

std::vector<double> eval_series(const RecurrenceBasis& basis,
                                std::span<const double> coeffs,
                                std::span<const double> xs) {
  if (coeffs.empty()) throw ArgumentError("eval_series: empty coefficient vector");
  const auto table = basis.coeff_table(coeffs.size() + 1);
  std::vector<double> out(xs.size());
  for (std::size_t p = 0; p < xs.size(); ++p)
    out[p] = detail::clenshaw_sum(table, coeffs, xs[p]);
  return out;
}

}  // namespace serial

namespace parallel {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  check_multiply(a, b);
  DenseMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

std::size_t lu_factor(DenseMatrix& a, std::vector<std::size_t>& perm) {
  const std::size_t n = a.rows();
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = select_pivot(a, k);
    if (a(p, k) == 0.0) return k;
    swap_rows(a, perm, k, p);
    const auto first = static_cast<std::ptrdiff_t>(k + 1);
    const auto last = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (last - first > 64)
    for (std::ptrdiff_t i = first; i < last; ++i)
      eliminate_row(a, k, static_cast<std::size_t>(i));
  }
  return n;
}

DenseMatrix integral_columns(const DenseMatrix& deriv,
                             std::span<const ThreeTerm> coeffs) {
  check_integral(deriv, coeffs);
  const std::size_t size = deriv.rows();
  DenseMatrix theta(size, size);
  const auto cols = static_cast<std::ptrdiff_t>(size - 1);
#pragma omp parallel
  {
    std::vector<double> col;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t j = 0; j < cols; ++j)
      integral_column(deriv, coeffs, theta, static_cast<std::size_t>(j), col);
  }
  return theta;
}

std::vector<double> eval_series(const RecurrenceBasis& basis,
                                std::span<const double> coeffs,
                                std::span<const double> xs) {
  if (coeffs.empty()) throw ArgumentError("eval_series: empty coefficient vector");
  const auto table = basis.coeff_table(coeffs.size() + 1);
  std::vector<double> out(xs.size());
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < count; ++p)
    out[p] = detail::clenshaw_sum(table, coeffs, xs[p]);
  return out;
}

}  // namespace parallel

}  // namespace tau::kernels
