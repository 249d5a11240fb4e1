#pragma once

#include <cstddef>

#include "tau/basis.hpp"
#include "tau/linalg.hpp"

namespace tau {

enum class OpKind {
  Shift,
  Derivative,
  Integral,
  VolterraIntegral,
  PowerShift,
  PowerDerivative,
  PowerIntegral,
  PowerVolterraIntegral,
};

const char* to_string(OpKind kind);

/// Operational matrix at a finite size s: rows and columns 0..s-1 of the
/// infinite matrix. Column j holds the coefficients of the operator applied
/// to the j-th basis element. Every stored entry is exact; truncation only
/// decides which rows and columns exist.
struct OpMatrix {
  OpKind kind = OpKind::Shift;
  double lower = 0.0;  // lower limit, Volterra kinds only
  DenseMatrix data;

  std::size_t size() const noexcept { return data.rows(); }
};

/// Multiplication by x: tridiagonal with column j = (prev_j, same_j, next_j)
/// in rows j-1, j, j+1.
OpMatrix shift_matrix(const RecurrenceBasis& basis, std::size_t s);

/// d/dx, strictly upper triangular. Column j+1 follows from columns j and
/// j-1 by differentiating the three-term recurrence.
OpMatrix derivative_matrix(const RecurrenceBasis& basis, std::size_t s);

/// Indefinite integral with zero nu_0 component. Column j has entries in
/// rows 1..j+1 only, obtained by back-substitution through the derivative
/// matrix.
OpMatrix integral_matrix(const RecurrenceBasis& basis, std::size_t s);

/// x -> integral from lower to x. Same as integral_matrix except row 0,
/// which makes every column vanish at x = lower.
OpMatrix volterra_matrix(const RecurrenceBasis& basis, std::size_t s, double lower);

struct PowerMatrices {
  DenseMatrix derivative;  // (i, i+1) = i+1
  DenseMatrix shift;       // (i+1, i) = 1
  DenseMatrix integral;    // (i+1, i) = 1/(i+1)
};

/// Operators on power-basis coefficient columns.
PowerMatrices power_matrices(std::size_t s);

/// Power-basis integral from lower to x: power integral plus row 0 entries
/// -lower^{j+1}/(j+1).
DenseMatrix power_volterra_matrix(std::size_t s, double lower);

/// Classic construction V^{-T} P V^T of a nu-basis operator from a power
/// basis one, V = change_of_basis (nu = V x). V^{-T} is applied by back
/// substitution, never formed. Accuracy is governed by cond(V).
DenseMatrix similarity_pi(const DenseMatrix& v, const DenseMatrix& pi_power);

}  // namespace tau
