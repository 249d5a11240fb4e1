#pragma once

#include <cstddef>

#include "tau/solver.hpp"

namespace tau::problems {

/// eps y'' - x y = 0 on [-1, 1], y(-1) = y(1) = 1.
TauProblem airy(const RecurrenceBasis& basis, std::size_t degree, double epsilon);

/// (x - a)^3 y + int_{-1}^x y = -exp(1/(2 (1 + a)^2)) on [-1, 1]; no
/// supplementary conditions.
TauProblem volterra(const RecurrenceBasis& basis, std::size_t degree, double a);

/// x^2 y'' + x y' + (x^2 - m^2) y = 0 on [0, right], y(0) = 0,
/// y(right) = 1, in the Laguerre basis. Rows are equilibrated: the
/// condition at x = right has entries of order exp(right/2).
TauProblem bessel(std::size_t degree, unsigned m, double right);

inline constexpr double kVolterraShift = 1.25;
inline constexpr double kAiryEpsilon = 1e-5;
inline constexpr unsigned kBesselOrder = 10;
inline constexpr double kBesselRight = 60.0;
inline constexpr std::size_t kJacobiGridPoints = 2001;
inline constexpr std::size_t kBesselGridPoints = 1201;

}  // namespace tau::problems
