#include "tau/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tau/errors.hpp"
#include "tau/linalg.hpp"
#include "tau/oracles.hpp"
#include "tau/problems.hpp"

namespace tau::experiments {

std::vector<JacobiPair> table1_pairs() {
  return {{0.0, 0.0, "(0,0)"},
          {-0.5, -0.5, "(-1/2,-1/2)"},
          {1.0, -0.9, "(1,-9/10)"},
          {-0.9, -0.9, "(-9/10,-9/10)"},
          {0.5, -0.5, "(1/2,-1/2)"}};
}

std::vector<JacobiPair> table2_pairs() {
  return {{0.0, 0.0, "(0,0)"},
          {-0.5, -0.5, "(-1/2,-1/2)"},
          {1.0, -0.9, "(1,-9/10)"},
          {10.0, 0.0, "(10,0)"}};
}

std::vector<std::size_t> table1_degrees() { return {150, 250, 350, 1000}; }
std::vector<std::size_t> table2_degrees() { return {50, 100, 150, 1000}; }

double sup_distance(const TauSolution& a, const TauSolution& b,
                    const std::vector<double>& grid) {
  const auto ya = a.evaluate(grid);
  const auto yb = b.evaluate(grid);
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = std::abs(ya[i] - yb[i]);
    if (std::isnan(d)) return std::numeric_limits<double>::quiet_NaN();
    best = std::max(best, d);
  }
  return best;
}

namespace {

template <typename CellFn>
ErrorTable fill_table(const std::vector<JacobiPair>& pairs,
                      const std::vector<std::size_t>& degrees, CellFn cell) {
  ErrorTable t;
  t.rows = pairs;
  t.degrees = degrees;
  t.cells.assign(pairs.size(), std::vector<double>(degrees.size(), 0.0));
  t.failures.assign(pairs.size(), std::vector<std::string>(degrees.size()));
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    for (std::size_t c = 0; c < degrees.size(); ++c) {
      try {
        const auto basis = RecurrenceBasis::jacobi(pairs[r].alpha, pairs[r].beta);
        t.cells[r][c] = cell(basis, degrees[c]);
      } catch (const Error& e) {
        t.cells[r][c] = std::numeric_limits<double>::quiet_NaN();
        t.failures[r][c] = e.what();
      }
    }
  }
  return t;
}

}  // namespace

ErrorTable table1(const std::vector<JacobiPair>& pairs,
                  const std::vector<std::size_t>& degrees,
                  std::size_t reference_degree) {
  const auto grid = uniform_grid(-1.0, 1.0, problems::kJacobiGridPoints);
  const TauSolution ref = solve_tau(
      problems::airy(RecurrenceBasis::legendre(), reference_degree, problems::kAiryEpsilon));
  ErrorTable t = fill_table(pairs, degrees, [&](const RecurrenceBasis& basis, std::size_t n) {
    const TauSolution s = solve_tau(problems::airy(basis, n, problems::kAiryEpsilon));
    return sup_distance(s, ref, grid);
  });
  t.reference = "legendre_tau_n" + std::to_string(reference_degree);
  return t;
}

ErrorTable table2(const std::vector<JacobiPair>& pairs,
                  const std::vector<std::size_t>& degrees) {
  const auto grid = uniform_grid(-1.0, 1.0, problems::kJacobiGridPoints);
  const double a = problems::kVolterraShift;
  ErrorTable t = fill_table(pairs, degrees, [&](const RecurrenceBasis& basis, std::size_t n) {
    const TauSolution s = solve_tau(problems::volterra(basis, n, a));
    return sup_error(s, [a](double x) { return oracles::volterra_exact(a, x); }, grid);
  });
  t.reference = "volterra_exact";
  return t;
}

BesselRun bessel_run(std::size_t degree, unsigned m, double right,
                     std::size_t grid_points) {
  BesselRun run;
  run.degree = degree;
  const TauSolution s = solve_tau(problems::bessel(degree, m, right));
  run.x = uniform_grid(0.0, right, grid_points);
  run.y = s.evaluate(run.x);
  const double scale = oracles::bessel_j(m, right);
  run.reference.resize(run.x.size());
  for (std::size_t i = 0; i < run.x.size(); ++i) {
    run.reference[i] = oracles::bessel_j(m, run.x[i]) / scale;
    run.sup_error = std::max(run.sup_error, std::abs(run.y[i] - run.reference[i]));
  }
  run.value_at_left = s(0.0);
  run.value_at_right = s(right);
  run.cond_estimate = s.diagnostics.cond_estimate;
  return run;
}

ConditionDemo condition_demo(std::size_t degree) {
  if (degree < 10) throw ArgumentError("condition demo needs degree >= 10");
  const double a = problems::kVolterraShift;
  const auto grid = uniform_grid(-1.0, 1.0, problems::kJacobiGridPoints);
  const auto exact = [a](double x) { return oracles::volterra_exact(a, x); };

  TauProblem p = problems::volterra(RecurrenceBasis::legendre(), degree, a);
  const TauSolution rec = solve_tau(p);
  p.options.path = MatrixPath::Similarity;
  const TauSolution sim = solve_tau(p);

  ConditionDemo d;
  d.degree = degree;
  d.recurrence_error = sup_error(rec, exact, grid);
  d.similarity_error = sup_error(sim, exact, grid);
  d.cond_v = cond_estimate_1(change_of_basis(RecurrenceBasis::legendre(), degree));
  d.path_difference = sup_distance(rec, sim, grid);
  for (double y : rec.evaluate(grid)) d.solution_scale = std::max(d.solution_scale, std::abs(y));
  return d;
}

}  // namespace tau::experiments
