#pragma once

// Reference computations that do not share code paths with the
// recurrence-built operational matrices or the Tau solver.

#include <cstddef>
#include <vector>

#include "tau/basis.hpp"
#include "tau/opmatrix.hpp"

namespace tau::oracles {

namespace detail {
// Working type for the reference computations that cancel many digits.
#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif
}  // namespace detail

/// Largest column index power_oracle_column accepts. Beyond it the monomial
/// round trip loses too many digits to serve as a reference.
inline constexpr std::size_t kMaxOracleColumn = 25;

/// Column j of the shift, derivative, integral or Volterra matrix computed
/// by brute force: expand nu_j in powers, apply the power-basis operator,
/// convert back. The round trip runs in quad precision where available. The result has j+2 entries (rows 0..j+1). For Integral
/// the nu_0 component is set to zero to match the free-constant convention.
std::vector<double> power_oracle_column(const RecurrenceBasis& basis, OpKind kind,
                                        std::size_t j, double lower = 0.0);

/// Bessel function of the first kind J_m(x), x >= 0, by Miller's backward
/// recurrence normalized with J_0 + 2 sum J_{2k} = 1.
double bessel_j(unsigned m, double x);

/// Ascending series sum (-1)^k (x/2)^{2k+m} / (k! (k+m)!). Accurate only
/// for moderate x; used to validate bessel_j.
double bessel_j_series(unsigned m, double x);

/// Closed-form solution y(x) = (a - x)^{-3} exp(1/(2 (x - a)^2)) of
/// (x - a)^3 y(x) + int_{-1}^x y = -exp(1/(2 (1 + a)^2)).
double volterra_exact(double a, double x);

/// Forcing term exp(1/(2 (x - a)^2)) of the Volterra benchmark.
double volterra_forcing(double a, double x);

/// Reference solution of eps y'' = x y on [-1, 1], y(-1) = y(1) = 1, built
/// from the two Maclaurin solutions of the equation (no Airy functions).
class AiryBvpReference {
 public:
  /// terms = 0 picks the truncation automatically.
  explicit AiryBvpReference(double epsilon, std::size_t terms = 0);

  double operator()(double x) const;
  double second_derivative(double x) const;

  double epsilon() const noexcept { return eps_; }
  std::size_t terms() const noexcept { return first_.size(); }

 private:
  double eps_;
  std::vector<detail::Wide> first_;   // y1: y(0) = 1, y'(0) = 0
  std::vector<detail::Wide> second_;  // y2: y(0) = 0, y'(0) = 1
  detail::Wide c1_ = 0;
  detail::Wide c2_ = 0;
};

/// Smallest epsilon the series reference supports in double precision.
inline constexpr double kAiryMinEpsilon = 1e-3;

double airy_bvp_reference(double epsilon, double x);

}  // namespace tau::oracles
