#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "tau/solver.hpp"

namespace tau::config {

enum class ReferenceKind { None, VolterraExact, Bessel, AiryBvp };

struct ReferenceSpec {
  ReferenceKind kind = ReferenceKind::None;
  double a = 0.0;        // volterra_exact
  unsigned m = 0;        // bessel
  double right = 60.0;   // bessel: y = J_m(x) / J_m(right)
  double epsilon = 0.0;  // airy_bvp
};

struct GridSpec {
  double start = -1.0;
  double stop = 1.0;
  std::size_t count = 2001;
};

/// A problem file: basis, degree, operator terms, conditions, right-hand
/// side, evaluation grid and an optional reference solution. Unknown keys
/// are rejected at every level.
struct ProblemConfig {
  TauProblem problem;
  GridSpec grid;
  ReferenceSpec reference;
};

/// Throws ConfigError with a path to the offending key.
ProblemConfig parse_problem(const std::string& json_text);
ProblemConfig load_problem(const std::string& path);

/// Empty function for ReferenceKind::None.
std::function<double(double)> make_reference(const ReferenceSpec& spec);

/// "jacobi:A,B", "legendre", "chebyshev" or "laguerre".
RecurrenceBasis parse_basis_spec(const std::string& spec);

}  // namespace tau::config
