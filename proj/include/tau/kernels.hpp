#pragma once

// Data-parallel inner loops used by the solver. Every kernel has an OpenMP
// version, which the library calls, and a plain serial version kept as the
// reference for tests and benchmarks. Both perform the same floating-point
// operations in the same order per output entry, so their results are
// bitwise identical.

#include <cstddef>
#include <span>
#include <vector>

#include "tau/basis.hpp"
#include "tau/linalg.hpp"

namespace tau::kernels {

namespace serial {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// In-place LU with partial pivoting. perm receives the row permutation.
/// Returns the index of the first exactly-zero pivot column, or the matrix
/// size when the factorization succeeded.
std::size_t lu_factor(DenseMatrix& a, std::vector<std::size_t>& perm);

/// Back-substitution for the integral matrix. deriv is the derivative matrix
/// at size s+1; the result is the (s+1)x(s+1) integral matrix whose columns
/// 0..s-1 are exact.
DenseMatrix integral_columns(const DenseMatrix& deriv,
                             std::span<const ThreeTerm> coeffs);

std::vector<double> eval_series(const RecurrenceBasis& basis,
                                std::span<const double> coeffs,
                                std::span<const double> xs);

}  // namespace serial

namespace parallel {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
std::size_t lu_factor(DenseMatrix& a, std::vector<std::size_t>& perm);
DenseMatrix integral_columns(const DenseMatrix& deriv,
                             std::span<const ThreeTerm> coeffs);
std::vector<double> eval_series(const RecurrenceBasis& basis,
                                std::span<const double> coeffs,
                                std::span<const double> xs);

}  // namespace parallel

}  // namespace tau::kernels
