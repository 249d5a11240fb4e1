#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tau/linalg.hpp"

namespace tau {

/// Coefficients of x*nu_j = next*nu_{j+1} + same*nu_j + prev*nu_{j-1}.
struct ThreeTerm {
  double next = 0.0;
  double same = 0.0;
  double prev = 0.0;
};

enum class Family { Jacobi, Laguerre, Custom };

/// An orthogonal polynomial basis defined by its three-term recurrence,
/// normalized so that nu_0 = 1 and nu_{-1} = 0.
///
/// Jacobi(a, b) lives on [-1, 1] with weight (1-x)^a (1+x)^b, Laguerre on
/// [0, inf) with weight exp(-x). Custom bases supply the coefficients and
/// the zeroth moment of their weight; nothing checks that they are
/// actually orthogonal.
class RecurrenceBasis {
 public:
  using CoeffProvider = std::function<ThreeTerm(std::size_t)>;

  static RecurrenceBasis jacobi(double alpha, double beta);
  static RecurrenceBasis legendre() { return jacobi(0.0, 0.0); }
  static RecurrenceBasis laguerre();
  static RecurrenceBasis custom(CoeffProvider provider, double mu0,
                                double lower, double upper,
                                std::string name = "custom");

  Family family() const noexcept { return family_; }
  double jacobi_alpha() const noexcept { return alpha_; }
  double jacobi_beta() const noexcept { return beta_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double mu0() const noexcept { return mu0_; }
  std::string name() const;

  /// Recurrence coefficients for index j. Throws BasisError when the
  /// coefficient of nu_{j+1} vanishes.
  ThreeTerm coeffs(std::size_t j) const;

  /// coeffs(0) .. coeffs(count - 1).
  std::vector<ThreeTerm> coeff_table(std::size_t count) const;

  bool same_as(const RecurrenceBasis& other) const;

 private:
  RecurrenceBasis() = default;

  Family family_ = Family::Jacobi;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double lower_ = -1.0;
  double upper_ = 1.0;
  double mu0_ = 2.0;
  CoeffProvider provider_;
  std::string custom_name_;
};

/// Table of derivatives: values[d][k] = nu_k^{(d)}(x).
struct BasisDerivTable {
  std::vector<std::vector<double>> values;

  double operator()(std::size_t derivative, std::size_t k) const {
    return values[derivative][k];
  }
};

/// nu_k^{(d)}(x) for 0 <= k <= degree and 0 <= d <= max_derivative, from the
/// recurrence differentiated d times:
///   x nu_j^{(d)} + d nu_j^{(d-1)} = next_j nu_{j+1}^{(d)} + same_j nu_j^{(d)}
///                                   + prev_j nu_{j-1}^{(d)}.
BasisDerivTable eval_basis_derivs(const RecurrenceBasis& basis,
                                  std::size_t degree, double x,
                                  std::size_t max_derivative);

/// nu_0(x) .. nu_degree(x).
std::vector<double> eval_basis(const RecurrenceBasis& basis, std::size_t degree,
                               double x);

/// Sum_k coeffs[k] nu_k(x) by backward (Clenshaw) summation.
double clenshaw(const RecurrenceBasis& basis, std::span<const double> coeffs,
                double x);

namespace detail {
/// Clenshaw summation against a precomputed coefficient table holding at
/// least coeffs.size() + 1 entries.
double clenshaw_sum(std::span<const ThreeTerm> table,
                    std::span<const double> coeffs, double x);
}  // namespace detail

/// Same sum accumulated along the forward recurrence.
double forward_sum(const RecurrenceBasis& basis, std::span<const double> coeffs,
                   double x);

/// ||nu_0||^2 .. ||nu_degree||^2 with respect to the basis weight.
std::vector<double> norms_sq(const RecurrenceBasis& basis, std::size_t degree);

/// Lower-triangular V with nu_i = sum_j V(i, j) x^j, 0 <= i, j <= degree.
/// Monomial conversion is badly conditioned: for Legendre the entries of
/// row i grow roughly like 2^i.
DenseMatrix change_of_basis(const RecurrenceBasis& basis, std::size_t degree);

}  // namespace tau
