#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tau {

using Vector = std::vector<double>;

/// Dense row-major matrix. Coefficient vectors are columns, so an operator
/// matrix A maps the coefficient column a to A*a.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  /// Leading rows x cols block.
  DenseMatrix block(std::size_t rows, std::size_t cols) const;
  DenseMatrix transposed() const;

  double norm1() const;
  double norm_inf() const;
  double max_abs() const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(double s, DenseMatrix a);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
Vector operator*(const DenseMatrix& a, std::span<const double> x);

double norm_inf(std::span<const double> x);

/// PA = LU with partial pivoting, L unit lower triangular.
class LUFactors {
 public:
  /// Throws SingularMatrixError on an exactly zero pivot column.
  explicit LUFactors(DenseMatrix a);

  std::size_t size() const noexcept { return lu_.rows(); }
  /// max|U| / max|A|.
  double growth() const noexcept { return growth_; }
  double norm1_of_original() const noexcept { return norm1_; }
  const DenseMatrix& packed() const noexcept { return lu_; }
  const std::vector<std::size_t>& pivots() const noexcept { return perm_; }

  Vector solve(std::span<const double> b) const;
  Vector solve_transposed(std::span<const double> b) const;

  /// Hager/Higham estimate of ||A||_1 ||A^{-1}||_1.
  double cond_estimate_1() const;

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;  // row i of PA is row perm_[i] of A
  double growth_ = 1.0;
  double norm1_ = 0.0;
};

Vector lu_solve(const DenseMatrix& a, std::span<const double> b);

/// Estimate of the 1-norm condition number; +inf for singular input.
double cond_estimate_1(const DenseMatrix& a);

/// Solves U x = b for upper-triangular U (entries below the diagonal ignored).
Vector solve_upper(const DenseMatrix& u, std::span<const double> b);
/// Solves L x = b for lower-triangular L (entries above the diagonal ignored).
Vector solve_lower(const DenseMatrix& l, std::span<const double> b);

}  // namespace tau
