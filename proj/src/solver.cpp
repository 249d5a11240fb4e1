#include "tau/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "tau/errors.hpp"
#include "tau/kernels.hpp"
#include "tau/opmatrix.hpp"

namespace tau {

namespace {

void validate(const TauProblem& p) {
  if (p.op.empty()) throw ArgumentError("operator has no terms");
  for (const auto& t : p.op) {
    if (const auto* d = std::get_if<DerivativeAction>(&t.action); d && d->order == 0)
      throw ArgumentError("derivative terms need order >= 1");
    if (const auto* v = std::get_if<VolterraAction>(&t.action); v && !std::isfinite(v->lower))
      throw ArgumentError("Volterra lower limit must be finite");
  }
  for (const auto& c : p.conditions) {
    if (c.terms.empty()) throw ArgumentError("condition without terms");
    for (const auto& t : c.terms)
      if (!std::isfinite(t.point)) throw ArgumentError("condition point must be finite");
  }
  if (p.conditions.size() > p.degree + 1)
    throw OverConstrainedError(std::to_string(p.conditions.size()) +
                               " conditions for " + std::to_string(p.degree + 1) +
                               " unknowns");
}

// Supplies the factor matrices of one construction path at size N. The
// similarity path conjugates each power-basis factor with the change of
// basis, as the classic formulation does.
class FactorSource {
 public:
  FactorSource(const RecurrenceBasis& basis, MatrixPath path, std::size_t size)
      : basis_(basis), path_(path), size_(size) {
    // Conjugating at size N+1 keeps column N-1 exact: its image under x or
    // the integral has degree N.
    if (path_ == MatrixPath::Similarity) v_ = change_of_basis(basis_, size_);
  }

  DenseMatrix conjugate(const DenseMatrix& power) const {
    return similarity_pi(*v_, power).block(size_, size_);
  }

  const DenseMatrix& shift() {
    if (!shift_) {
      shift_ = path_ == MatrixPath::Recurrence ? shift_matrix(basis_, size_).data
                                               : conjugate(power_matrices(size_ + 1).shift);
    }
    return *shift_;
  }

  const DenseMatrix& derivative() {
    if (!deriv_) {
      deriv_ = path_ == MatrixPath::Recurrence
                   ? derivative_matrix(basis_, size_).data
                   : conjugate(power_matrices(size_ + 1).derivative);
    }
    return *deriv_;
  }

  const DenseMatrix& volterra(double lower) {
    auto it = volterra_.find(lower);
    if (it == volterra_.end()) {
      DenseMatrix m = path_ == MatrixPath::Recurrence
                          ? volterra_matrix(basis_, size_, lower).data
                          : conjugate(power_volterra_matrix(size_ + 1, lower));
      it = volterra_.emplace(lower, std::move(m)).first;
    }
    return it->second;
  }

 private:
  const RecurrenceBasis& basis_;
  MatrixPath path_;
  std::size_t size_;
  std::optional<DenseMatrix> v_;
  std::optional<DenseMatrix> shift_;
  std::optional<DenseMatrix> deriv_;
  std::map<double, DenseMatrix> volterra_;
};

DenseMatrix leading_identity(std::size_t rows, std::size_t cols) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) m(i, i) = 1.0;
  return m;
}

// Pi restricted to its first `cols` columns, in the coordinates of `path`.
DenseMatrix assemble(const TauProblem& p, MatrixPath path, std::size_t size,
                     std::size_t cols) {
  FactorSource src(p.basis, path, size);
  DenseMatrix pi(size, cols);
  for (const auto& term : p.op) {
    DenseMatrix a;
    if (const auto* d = std::get_if<DerivativeAction>(&term.action)) {
      a = leading_identity(size, cols);
      for (unsigned k = 0; k < d->order; ++k) a = kernels::parallel::multiply(src.derivative(), a);
    } else if (const auto* v = std::get_if<VolterraAction>(&term.action)) {
      a = src.volterra(v->lower).block(size, cols);
    } else {
      a = leading_identity(size, cols);
    }
    // Horner in the shift matrix: p(M) A = p_0 A + M (p_1 A + M (...)).
    const auto& c = term.coeff.coeffs();
    DenseMatrix acc = c.back() * a;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      acc = kernels::parallel::multiply(src.shift(), acc);
      if (c[k] != 0.0) acc += c[k] * a;
    }
    pi += acc;
  }
  return pi;
}

struct Assembled {
  DenseMatrix pi;
  std::vector<double> f;
  std::size_t height = 0;
};

Assembled assemble_all(const TauProblem& p) {
  validate(p);
  Assembled out;
  out.height = operator_height(p.op);
  const std::size_t size = p.degree + 1 + out.height;
  if (p.rhs.degree() >= size) {
    throw SizeError("right-hand side degree " + std::to_string(p.rhs.degree()) +
                    " exceeds the range of the operator (" + std::to_string(size - 1) + ")");
  }
  out.pi = assemble_pi(p);
  out.f = project_rhs(p.rhs, p.basis, size);
  return out;
}

ResidualTail tail_of(const Assembled& a, const TauProblem& p,
                     std::span<const double> coeffs) {
  const Vector r = a.pi * coeffs;
  const std::size_t first = p.degree + 1 - p.conditions.size();
  ResidualTail tail;
  tail.first = first;
  for (std::size_t i = first; i < r.size(); ++i) tail.values.push_back(r[i] - a.f[i]);
  return tail;
}

TauSolution solve_assembled(const TauProblem& p, const Assembled& a) {
  const std::size_t n = p.degree;
  const std::size_t mc = p.conditions.size();
  DenseMatrix sys(n + 1, n + 1);
  Vector rhs(n + 1, 0.0);
  for (std::size_t r = 0; r < mc; ++r) {
    const auto row = condition_row(p.conditions[r], p.basis, n);
    std::copy(row.begin(), row.end(), sys.row(r).begin());
    rhs[r] = p.conditions[r].target;
  }
  for (std::size_t i = 0; i + mc <= n; ++i) {
    const auto src = a.pi.row(i);
    std::copy(src.begin(), src.end(), sys.row(mc + i).begin());
    rhs[mc + i] = a.f[i];
  }
  if (p.options.equilibrate) {
    for (std::size_t r = 0; r <= n; ++r) {
      double m = 0.0;
      for (double v : sys.row(r)) m = std::max(m, std::abs(v));
      if (m == 0.0) continue;
      for (double& v : sys.row(r)) v /= m;
      rhs[r] /= m;
    }
  }

  const LUFactors lu(std::move(sys));
  TauSolution sol;
  sol.basis = p.basis;
  sol.coeffs = lu.solve(rhs);
  sol.diagnostics.cond_estimate = lu.cond_estimate_1();
  sol.diagnostics.growth = lu.growth();
  sol.diagnostics.height = a.height;
  for (double v : sol.coeffs)
    if (!std::isfinite(v)) throw NumericalError("Tau solve produced non-finite coefficients");
  return sol;
}

}  // namespace

std::size_t operator_height(const LinearOperator& op) {
  long h = 0;
  for (const auto& t : op) {
    const long d = static_cast<long>(t.coeff.degree());
    long term = 0;
    if (const auto* der = std::get_if<DerivativeAction>(&t.action)) {
      term = d - static_cast<long>(der->order);
    } else if (std::holds_alternative<VolterraAction>(t.action)) {
      term = d + 1;
    } else {
      term = d;
    }
    h = std::max(h, term);
  }
  return static_cast<std::size_t>(h);
}

DenseMatrix assemble_pi(const TauProblem& problem) {
  validate(problem);
  const std::size_t cols = problem.degree + 1;
  const std::size_t size = cols + operator_height(problem.op);
  return assemble(problem, problem.options.path, size, cols);
}

std::vector<double> project_rhs(const PowerPoly& f, const RecurrenceBasis& basis,
                                std::size_t s) {
  const std::size_t d = f.degree();
  if (d >= s) {
    throw SizeError("project_rhs: degree " + std::to_string(d) +
                    " does not fit in length " + std::to_string(s));
  }
  // Power coefficients c = V^T a with V = change_of_basis; only the leading
  // (d+1)x(d+1) block matters because V is lower triangular.
  const DenseMatrix vt = change_of_basis(basis, d).transposed();
  const auto a = solve_upper(vt, f.coeffs());
  std::vector<double> out(s, 0.0);
  std::copy(a.begin(), a.end(), out.begin());
  return out;
}

std::vector<double> condition_row(const ConditionSpec& cond,
                                  const RecurrenceBasis& basis, std::size_t n) {
  std::vector<double> row(n + 1, 0.0);
  for (const auto& t : cond.terms) {
    const auto table = eval_basis_derivs(basis, n, t.point, t.derivative);
    const auto& vals = table.values[t.derivative];
    for (std::size_t k = 0; k <= n; ++k) row[k] += t.coeff * vals[k];
  }
  return row;
}

TauSolution solve_tau(const TauProblem& problem) {
  return solve_assembled(problem, assemble_all(problem));
}

TauResult solve_tau_with_tail(const TauProblem& problem) {
  const Assembled a = assemble_all(problem);
  TauResult r{solve_assembled(problem, a), {}};
  r.tail = tail_of(a, problem, r.solution.coeffs);
  return r;
}

ResidualTail residual_tail(const TauProblem& problem, const TauSolution& solution) {
  if (solution.coeffs.size() != problem.degree + 1 || !solution.basis.same_as(problem.basis))
    throw ArgumentError("residual_tail: solution does not belong to this problem");
  return tail_of(assemble_all(problem), problem, solution.coeffs);
}

std::vector<double> TauSolution::evaluate(std::span<const double> xs) const {
  return kernels::parallel::eval_series(basis, coeffs, xs);
}

double sup_error(const TauSolution& solution,
                 const std::function<double(double)>& reference,
                 std::span<const double> grid) {
  if (grid.empty()) throw ArgumentError("sup_error: empty grid");
  const auto y = solution.evaluate(grid);
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = std::abs(y[i] - reference(grid[i]));
    if (std::isnan(d)) return std::numeric_limits<double>::quiet_NaN();
    best = std::max(best, d);
  }
  return best;
}

std::vector<double> uniform_grid(double start, double stop, std::size_t count) {
  if (count == 0) throw ArgumentError("uniform_grid: count must be positive");
  std::vector<double> g(count);
  if (count == 1) {
    g[0] = start;
    return g;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) g[i] = start + step * static_cast<double>(i);
  g.back() = stop;
  return g;
}

}  // namespace tau
