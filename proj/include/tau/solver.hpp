#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "tau/basis.hpp"
#include "tau/linalg.hpp"
#include "tau/poly.hpp"

namespace tau {

struct DerivativeAction {
  unsigned order = 1;
};
struct IdentityAction {};
struct VolterraAction {
  double lower = 0.0;
};
using Action = std::variant<DerivativeAction, IdentityAction, VolterraAction>;

/// p(x) * A[y] with A a derivative, the identity or a Volterra integral.
struct OperatorTerm {
  PowerPoly coeff{1.0};
  Action action = IdentityAction{};
};

using LinearOperator = std::vector<OperatorTerm>;

struct ConditionTerm {
  double coeff = 1.0;
  unsigned derivative = 0;
  double point = 0.0;
};

/// g(u) = sum coeff * u^{(derivative)}(point) = target.
struct ConditionSpec {
  std::vector<ConditionTerm> terms;
  double target = 0.0;
};

/// Which construction is used for the operational matrices.
enum class MatrixPath {
  Recurrence,  // built from the three-term recurrence
  Similarity,  // power-basis matrices conjugated by the change of basis
};

struct SolveOptions {
  MatrixPath path = MatrixPath::Recurrence;
  /// Scale every row of the square system to unit max-norm before the LU.
  bool equilibrate = false;
};

struct TauProblem {
  RecurrenceBasis basis = RecurrenceBasis::legendre();
  LinearOperator op;
  std::vector<ConditionSpec> conditions;
  PowerPoly rhs;
  std::size_t degree = 0;
  SolveOptions options;
};

struct TauDiagnostics {
  double cond_estimate = 0.0;
  double growth = 1.0;
  std::size_t height = 0;
};

struct TauSolution {
  std::vector<double> coeffs;
  RecurrenceBasis basis = RecurrenceBasis::legendre();
  TauDiagnostics diagnostics;

  double operator()(double x) const { return clenshaw(basis, coeffs, x); }
  std::vector<double> evaluate(std::span<const double> xs) const;
};

/// Coefficients h_{first} .. h_{first + values.size() - 1} of the
/// perturbation polynomial: the rows of Pi*a - f the solve did not impose.
struct ResidualTail {
  std::size_t first = 0;
  std::vector<double> values;
};

/// Largest possible degree increase of the operator:
/// max(0, deg p - i for derivatives, deg p for identity, deg p + 1 for
/// Volterra terms).
std::size_t operator_height(const LinearOperator& op);

/// Pi of shape (n+1+h) x (n+1): Pi*a are the nu-coefficients of L[u_n].
/// Each term contributes p(M) A, with p(M) expanded by Horner and every
/// factor generated at size n+1+h.
DenseMatrix assemble_pi(const TauProblem& problem);

/// nu-coefficients (length s) of a power-basis polynomial of degree < s.
std::vector<double> project_rhs(const PowerPoly& f, const RecurrenceBasis& basis,
                                std::size_t s);

/// Row k holds g(nu_k).
std::vector<double> condition_row(const ConditionSpec& cond,
                                  const RecurrenceBasis& basis, std::size_t n);

/// Conditions occupy the first m_c rows; residual rows 0..n-m_c of Pi*a = f
/// fill the rest.
TauSolution solve_tau(const TauProblem& problem);

ResidualTail residual_tail(const TauProblem& problem, const TauSolution& solution);

struct TauResult {
  TauSolution solution;
  ResidualTail tail;
};

/// solve_tau and residual_tail sharing one assembly of Pi.
TauResult solve_tau_with_tail(const TauProblem& problem);

double sup_error(const TauSolution& solution,
                 const std::function<double(double)>& reference,
                 std::span<const double> grid);

/// count points evenly spaced over [start, stop], endpoints included.
std::vector<double> uniform_grid(double start, double stop, std::size_t count);

}  // namespace tau
