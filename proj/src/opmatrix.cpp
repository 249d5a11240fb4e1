#include "tau/opmatrix.hpp"

#include <cmath>
#include <limits>

#include "tau/errors.hpp"
#include "tau/kernels.hpp"

namespace tau {

const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Shift: return "shift";
    case OpKind::Derivative: return "derivative";
    case OpKind::Integral: return "integral";
    case OpKind::VolterraIntegral: return "volterra";
    case OpKind::PowerShift: return "power-shift";
    case OpKind::PowerDerivative: return "power-derivative";
    case OpKind::PowerIntegral: return "power-integral";
    case OpKind::PowerVolterraIntegral: return "power-volterra";
  }
  return "?";
}

namespace {

void require_size(std::size_t s, std::size_t min, const char* what) {
  if (s < min) throw SizeError(std::string(what) + ": size must be >= " + std::to_string(min));
}

DenseMatrix build_derivative(std::span<const ThreeTerm> c, std::size_t s) {
  DenseMatrix h(s, s);
  if (s < 2) return h;
  h(0, 1) = 1.0 / c[0].next;
  for (std::size_t j = 1; j + 1 < s; ++j) {
    const double inv = 1.0 / c[j].next;
    for (std::size_t i = 0; i < j; ++i) {
      double acc = (c[i].same - c[j].same) * h(i, j) + c[i + 1].prev * h(i + 1, j) -
                   c[j].prev * h(i, j - 1);
      if (i > 0) acc += c[i - 1].next * h(i - 1, j);
      h(i, j + 1) = inv * acc;
    }
    h(j, j + 1) = inv * (c[j - 1].next * h(j - 1, j) + 1.0);
  }
  return h;
}

// Integral matrix at size s+1, so that row 0 of the Volterra matrix can use
// the entry theta_{s, s-1} that falls outside the stored block.
DenseMatrix extended_integral(const RecurrenceBasis& basis, std::size_t s) {
  const auto c = basis.coeff_table(s + 2);
  const DenseMatrix h = build_derivative(c, s + 1);
  return kernels::parallel::integral_columns(h, c);
}

}  // namespace

OpMatrix shift_matrix(const RecurrenceBasis& basis, std::size_t s) {
  require_size(s, 1, "shift_matrix");
  DenseMatrix m(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    const ThreeTerm c = basis.coeffs(j);
    if (j > 0) m(j - 1, j) = c.prev;
    m(j, j) = c.same;
    if (j + 1 < s) m(j + 1, j) = c.next;
  }
  return {OpKind::Shift, 0.0, std::move(m)};
}

OpMatrix derivative_matrix(const RecurrenceBasis& basis, std::size_t s) {
  require_size(s, 1, "derivative_matrix");
  const auto c = basis.coeff_table(s + 1);
  return {OpKind::Derivative, 0.0, build_derivative(c, s)};
}

OpMatrix integral_matrix(const RecurrenceBasis& basis, std::size_t s) {
  require_size(s, 2, "integral_matrix");
  return {OpKind::Integral, 0.0, extended_integral(basis, s).block(s, s)};
}

OpMatrix volterra_matrix(const RecurrenceBasis& basis, std::size_t s, double lower) {
  require_size(s, 2, "volterra_matrix");
  if (!std::isfinite(lower)) throw ArgumentError("volterra_matrix: lower limit must be finite");
  const DenseMatrix full = extended_integral(basis, s);
  const auto nu = eval_basis(basis, s, lower);
  DenseMatrix v = full.block(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= j + 1; ++i) acc += full(i, j) * nu[i];
    v(0, j) = -acc;
  }
  return {OpKind::VolterraIntegral, lower, std::move(v)};
}

PowerMatrices power_matrices(std::size_t s) {
  require_size(s, 1, "power_matrices");
  PowerMatrices p{DenseMatrix(s, s), DenseMatrix(s, s), DenseMatrix(s, s)};
  for (std::size_t i = 0; i + 1 < s; ++i) {
    p.derivative(i, i + 1) = static_cast<double>(i + 1);
    p.shift(i + 1, i) = 1.0;
    p.integral(i + 1, i) = 1.0 / static_cast<double>(i + 1);
  }
  return p;
}

DenseMatrix power_volterra_matrix(std::size_t s, double lower) {
  DenseMatrix m = power_matrices(s).integral;
  double pw = lower;
  for (std::size_t j = 0; j < s; ++j) {
    m(0, j) = -pw / static_cast<double>(j + 1);
    pw *= lower;
  }
  return m;
}

DenseMatrix similarity_pi(const DenseMatrix& v, const DenseMatrix& pi_power) {
  if (!v.square() || !pi_power.square() || v.rows() != pi_power.rows())
    throw ArgumentError("similarity_pi: V and Pi must be square and of equal size");
  const std::size_t n = v.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (v(i, i) == 0.0) throw SingularMatrixError(i, std::numeric_limits<double>::infinity());

  const DenseMatrix vt = v.transposed();
  DenseMatrix b = kernels::parallel::multiply(pi_power, vt);
  // Solve V^T X = B column by column; V^T is upper triangular.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      double s = b(i, c);
      const auto row = vt.row(i);
      for (std::size_t k = i + 1; k < n; ++k) s -= row[k] * b(k, c);
      b(i, c) = s / row[i];
    }
  }
  return b;
}

}  // namespace tau
