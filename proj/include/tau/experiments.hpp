#pragma once

// The benchmark computations behind the CLI table, bessel and
// condition-demo commands, exposed so tests can check the numbers directly.

#include <cstddef>
#include <string>
#include <vector>

#include "tau/basis.hpp"
#include "tau/solver.hpp"

namespace tau::experiments {

struct JacobiPair {
  double alpha = 0.0;
  double beta = 0.0;
  std::string label;
};

struct ErrorTable {
  std::vector<JacobiPair> rows;
  std::vector<std::size_t> degrees;
  /// cells[r][c]; NaN marks a cell whose solve failed.
  std::vector<std::vector<double>> cells;
  std::vector<std::vector<std::string>> failures;
  std::string reference;
};

std::vector<JacobiPair> table1_pairs();
std::vector<JacobiPair> table2_pairs();
std::vector<std::size_t> table1_degrees();
std::vector<std::size_t> table2_degrees();

/// Turning-point problem at epsilon = 1e-5. No double-precision reference
/// exists there, so each cell is the sup distance to the Legendre-Tau
/// solution of degree reference_degree (a consistency measure).
ErrorTable table1(const std::vector<JacobiPair>& pairs,
                  const std::vector<std::size_t>& degrees,
                  std::size_t reference_degree = 600);

/// Volterra problem with a = 1.25 against its closed-form solution.
ErrorTable table2(const std::vector<JacobiPair>& pairs,
                  const std::vector<std::size_t>& degrees);

/// Sup distance between two Tau solutions on a grid.
double sup_distance(const TauSolution& a, const TauSolution& b,
                    const std::vector<double>& grid);

struct BesselRun {
  std::size_t degree = 0;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> reference;
  double sup_error = 0.0;
  double value_at_left = 0.0;
  double value_at_right = 0.0;
  double cond_estimate = 0.0;
};

BesselRun bessel_run(std::size_t degree, unsigned m, double right,
                     std::size_t grid_points);

struct ConditionDemo {
  std::size_t degree = 0;
  double recurrence_error = 0.0;
  double similarity_error = 0.0;
  double cond_v = 0.0;
  /// sup over the grid of |y_recurrence - y_similarity|.
  double path_difference = 0.0;
  /// sup over the grid of |y_recurrence|.
  double solution_scale = 0.0;
};

/// Volterra problem in the Legendre basis solved with both matrix paths.
ConditionDemo condition_demo(std::size_t degree);

}  // namespace tau::experiments
