#include "tau/basis.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "tau/errors.hpp"

namespace tau {

namespace {

ThreeTerm jacobi_coeffs(double a, double b, std::size_t j) {
  const double g = a + b;
  if (j == 0) {
    // Limits of the general formulas; those are 0/0 for g = 0 or g = -1.
    return {2.0 / (g + 2.0), (b - a) / (g + 2.0), 0.0};
  }
  const double n = static_cast<double>(j);
  const double t = 2.0 * n + g;
  return {2.0 * (n + 1.0) * (n + g + 1.0) / ((t + 1.0) * (t + 2.0)),
          (b - a) * g / (t * (t + 2.0)),
          2.0 * (n + a) * (n + b) / (t * (t + 1.0))};
}

ThreeTerm laguerre_coeffs(std::size_t j) {
  const double n = static_cast<double>(j);
  return {-(n + 1.0), 2.0 * n + 1.0, -n};
}

}  // namespace

RecurrenceBasis RecurrenceBasis::jacobi(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "Jacobi parameters must satisfy alpha, beta > -1 (got " << alpha
        << ", " << beta << ")";
    throw ParameterError(msg.str());
  }
  RecurrenceBasis b;
  b.family_ = Family::Jacobi;
  b.alpha_ = alpha;
  b.beta_ = beta;
  b.lower_ = -1.0;
  b.upper_ = 1.0;
  // log-Gamma keeps 2^{a+b+1} G(a+1) G(b+1) / G(a+b+2) finite for large a, b.
  b.mu0_ = std::exp((alpha + beta + 1.0) * std::log(2.0) +
                    std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                    std::lgamma(alpha + beta + 2.0));
  return b;
}

RecurrenceBasis RecurrenceBasis::laguerre() {
  RecurrenceBasis b;
  b.family_ = Family::Laguerre;
  b.lower_ = 0.0;
  b.upper_ = std::numeric_limits<double>::infinity();
  b.mu0_ = 1.0;
  return b;
}

RecurrenceBasis RecurrenceBasis::custom(CoeffProvider provider, double mu0,
                                        double lower, double upper,
                                        std::string name) {
  if (!provider) throw ArgumentError("custom basis needs a coefficient provider");
  if (!(mu0 > 0.0)) throw ParameterError("custom basis needs mu0 > 0");
  RecurrenceBasis b;
  b.family_ = Family::Custom;
  b.provider_ = std::move(provider);
  b.mu0_ = mu0;
  b.lower_ = lower;
  b.upper_ = upper;
  b.custom_name_ = std::move(name);
  return b;
}

std::string RecurrenceBasis::name() const {
  switch (family_) {
    case Family::Jacobi: {
      std::ostringstream s;
      s << "jacobi(" << alpha_ << "," << beta_ << ")";
      return s.str();
    }
    case Family::Laguerre:
      return "laguerre";
    case Family::Custom:
      return custom_name_;
  }
  return {};
}

ThreeTerm RecurrenceBasis::coeffs(std::size_t j) const {
  ThreeTerm t;
  switch (family_) {
    case Family::Jacobi:
      t = jacobi_coeffs(alpha_, beta_, j);
      break;
    case Family::Laguerre:
      t = laguerre_coeffs(j);
      break;
    case Family::Custom:
      t = provider_(j);
      break;
  }
  if (j == 0) t.prev = 0.0;
  if (t.next == 0.0 || !std::isfinite(t.next)) {
    throw BasisError("recurrence coefficient of nu_{j+1} vanishes at j = " +
                     std::to_string(j));
  }
  return t;
}

std::vector<ThreeTerm> RecurrenceBasis::coeff_table(std::size_t count) const {
  std::vector<ThreeTerm> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(coeffs(j));
  return out;
}

bool RecurrenceBasis::same_as(const RecurrenceBasis& other) const {
  if (family_ != other.family_) return false;
  switch (family_) {
    case Family::Jacobi:
      return alpha_ == other.alpha_ && beta_ == other.beta_;
    case Family::Laguerre:
      return true;
    case Family::Custom:
      return custom_name_ == other.custom_name_ && mu0_ == other.mu0_;
  }
  return false;
}

BasisDerivTable eval_basis_derivs(const RecurrenceBasis& basis,
                                  std::size_t degree, double x,
                                  std::size_t max_derivative) {
  const auto c = basis.coeff_table(degree + 1);
  BasisDerivTable t;
  t.values.assign(max_derivative + 1, std::vector<double>(degree + 1, 0.0));
  t.values[0][0] = 1.0;
  for (std::size_t d = 0; d <= max_derivative; ++d) {
    auto& cur = t.values[d];
    const double dd = static_cast<double>(d);
    for (std::size_t j = 0; j < degree; ++j) {
      const double lower_order = d > 0 ? t.values[d - 1][j] : 0.0;
      const double prev = j > 0 ? cur[j - 1] : 0.0;
      cur[j + 1] = ((x - c[j].same) * cur[j] + dd * lower_order -
                    c[j].prev * prev) /
                   c[j].next;
    }
  }
  return t;
}

std::vector<double> eval_basis(const RecurrenceBasis& basis, std::size_t degree,
                               double x) {
  return std::move(eval_basis_derivs(basis, degree, x, 0).values[0]);
}

double detail::clenshaw_sum(std::span<const ThreeTerm> table,
                            std::span<const double> coeffs, double x) {
  // nu_{k+1} = A_k nu_k + B_k nu_{k-1} with A_k = (x - same_k)/next_k and
  // B_k = -prev_k/next_k; nu_{-1} = 0 leaves the sum equal to b_0.
  double b1 = 0.0;  // b_{k+1}
  double b2 = 0.0;  // b_{k+2}
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const ThreeTerm& ck = table[k];
    const ThreeTerm& up = table[k + 1];
    const double b = coeffs[k] + (x - ck.same) / ck.next * b1 - up.prev / up.next * b2;
    b2 = b1;
    b1 = b;
  }
  return b1;
}

double clenshaw(const RecurrenceBasis& basis, std::span<const double> coeffs,
                double x) {
  if (coeffs.empty()) throw ArgumentError("clenshaw: empty coefficient vector");
  const auto table = basis.coeff_table(coeffs.size() + 1);
  return detail::clenshaw_sum(table, coeffs, x);
}

double forward_sum(const RecurrenceBasis& basis, std::span<const double> coeffs,
                   double x) {
  if (coeffs.empty()) throw ArgumentError("forward_sum: empty coefficient vector");
  const auto nu = eval_basis(basis, coeffs.size() - 1, x);
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * nu[k];
  return s;
}

std::vector<double> norms_sq(const RecurrenceBasis& basis, std::size_t degree) {
  std::vector<double> out(degree + 1);
  out[0] = basis.mu0();
  // <x nu_j, nu_{j+1}> = next_j ||nu_{j+1}||^2 = prev_{j+1} ||nu_j||^2.
  for (std::size_t j = 0; j < degree; ++j) {
    out[j + 1] = basis.coeffs(j + 1).prev / basis.coeffs(j).next * out[j];
    if (!(out[j + 1] > 0.0) || !std::isfinite(out[j + 1])) {
      throw BasisError("nonpositive norm for nu_" + std::to_string(j + 1) +
                       " (recurrence does not define an orthogonal family)");
    }
  }
  return out;
}

DenseMatrix change_of_basis(const RecurrenceBasis& basis, std::size_t degree) {
  const std::size_t s = degree + 1;
  DenseMatrix v(s, s);
  v(0, 0) = 1.0;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    const ThreeTerm c = basis.coeffs(i);
    for (std::size_t j = 0; j <= i + 1; ++j) {
      double acc = 0.0;
      if (j > 0) acc += v(i, j - 1);
      if (j <= i) acc -= c.same * v(i, j);
      if (i > 0 && j < i) acc -= c.prev * v(i - 1, j);
      v(i + 1, j) = acc / c.next;
    }
  }
  return v;
}

}  // namespace tau
