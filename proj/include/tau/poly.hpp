#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace tau {

/// Polynomial in the power basis, c_0 + c_1 x + ... + c_d x^d, with
/// trailing zeros trimmed. The zero polynomial keeps a single 0 coefficient.
class PowerPoly {
 public:
  PowerPoly() : c_{0.0} {}
  PowerPoly(std::initializer_list<double> c) : c_(c) { trim(); }
  explicit PowerPoly(std::vector<double> c) : c_(std::move(c)) { trim(); }

  /// (x - root)^power, expanded.
  static PowerPoly shifted_power(double root, unsigned power);

  std::size_t degree() const noexcept { return c_.size() - 1; }
  bool is_zero() const noexcept { return c_.size() == 1 && c_[0] == 0.0; }
  const std::vector<double>& coeffs() const noexcept { return c_; }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

  double operator()(double x) const;

  PowerPoly derivative(unsigned order = 1) const;
  /// Primitive with zero constant term.
  PowerPoly primitive() const;
  /// x -> integral of this from lower to x.
  PowerPoly definite_from(double lower) const;

  PowerPoly& operator+=(const PowerPoly& o);
  PowerPoly& operator*=(double s);
  friend PowerPoly operator+(PowerPoly a, const PowerPoly& b) { return a += b; }
  friend PowerPoly operator*(double s, PowerPoly a) { return a *= s; }
  friend PowerPoly operator*(const PowerPoly& a, const PowerPoly& b);

 private:
  void trim();
  std::vector<double> c_;
};

}  // namespace tau
