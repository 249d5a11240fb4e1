#include "tau/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tau/errors.hpp"

namespace tau::oracles {

namespace {

// The monomial round trip loses about cond(V) digits, so the oracle carries
// it out in a wider type than the matrices it checks.
using detail::Wide;
using WidePoly = std::vector<Wide>;

}  // namespace

std::vector<double> power_oracle_column(const RecurrenceBasis& basis, OpKind kind,
                                        std::size_t j, double lower) {
  if (j > kMaxOracleColumn) {
    throw RangeError("power_oracle_column: column " + std::to_string(j) +
                     " is beyond the reliable range (<= " +
                     std::to_string(kMaxOracleColumn) + ")");
  }
  if (kind != OpKind::Shift && kind != OpKind::Derivative && kind != OpKind::Integral &&
      kind != OpKind::VolterraIntegral) {
    throw ArgumentError("power_oracle_column: kind must be a nu-basis operator");
  }
  const std::size_t s = j + 2;

  // nu_0 .. nu_{j+1} in powers, straight from the recurrence.
  std::vector<WidePoly> nu(s, WidePoly(s, Wide(0)));
  nu[0][0] = 1;
  for (std::size_t k = 0; k + 1 < s; ++k) {
    const ThreeTerm c = basis.coeffs(k);
    for (std::size_t d = 0; d <= k; ++d) {
      nu[k + 1][d + 1] += nu[k][d];
      nu[k + 1][d] -= Wide(c.same) * nu[k][d];
      if (k > 0) nu[k + 1][d] -= Wide(c.prev) * nu[k - 1][d];
    }
    for (auto& v : nu[k + 1]) v /= Wide(c.next);
  }

  WidePoly image(s, Wide(0));
  const WidePoly& p = nu[j];
  switch (kind) {
    case OpKind::Shift:
      for (std::size_t d = 0; d <= j; ++d) image[d + 1] = p[d];
      break;
    case OpKind::Derivative:
      for (std::size_t d = 1; d <= j; ++d) image[d - 1] = Wide(d) * p[d];
      break;
    default: {
      for (std::size_t d = 0; d <= j; ++d) image[d + 1] = p[d] / Wide(d + 1);
      if (kind == OpKind::VolterraIntegral) {
        Wide at = 0;
        for (std::size_t d = s; d-- > 0;) at = at * Wide(lower) + image[d];
        image[0] -= at;
      }
    }
  }

  // Peel off the leading power with the matching nu_d.
  std::vector<double> col(s, 0.0);
  for (std::size_t d = s; d-- > 0;) {
    const Wide coef = image[d] / nu[d][d];
    col[d] = static_cast<double>(coef);
    for (std::size_t k = 0; k <= d; ++k) image[k] -= coef * nu[d][k];
  }
  if (kind == OpKind::Integral) col[0] = 0.0;
  return col;
}

double bessel_j_series(unsigned m, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (unsigned k = 1; k <= m; ++k) term *= half / static_cast<double>(k);
  double sum = term;
  const double q = half * half;
  for (unsigned k = 1; k < 500; ++k) {
    term *= -q / (static_cast<double>(k) * static_cast<double>(k + m));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > half) break;
  }
  return sum;
}

double bessel_j(unsigned m, double x) {
  if (x < 0.0 || !std::isfinite(x)) throw RangeError("bessel_j: x must be finite and >= 0");
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;

  // m + 20 + 1.2x alone leaves ~1e-12 error near x = 60; the sqrt(x) margin
  // brings it to roundoff for x <= 100.
  std::size_t start = m + 30 + static_cast<std::size_t>(std::ceil(1.2 * x + 4.0 * std::sqrt(x)));
  start += start % 2;  // even, so the normalization sum sees every J_{2k}
  constexpr double kBig = 1e250;

  double above = 0.0;  // J_{k+1}
  double cur = 1e-300;  // J_k, arbitrary seed
  double norm = 0.0;
  double jm = 0.0;
  for (std::size_t k = start; k > 0; --k) {
    if (k == m) jm = cur;
    if (k % 2 == 0) norm += 2.0 * cur;
    const double below = 2.0 * static_cast<double>(k) / x * cur - above;
    above = cur;
    cur = below;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      above /= kBig;
      norm /= kBig;
      jm /= kBig;
    }
  }
  // cur now holds the unnormalized J_0.
  if (m == 0) jm = cur;
  norm += cur;
  return jm / norm;
}

double volterra_forcing(double a, double x) {
  const double d = x - a;
  return std::exp(1.0 / (2.0 * d * d));
}

double volterra_exact(double a, double x) {
  if (x == a) throw RangeError("volterra_exact: singular at x = a");
  const double d = a - x;
  return volterra_forcing(a, x) / (d * d * d);
}

namespace {

Wide horner(const std::vector<Wide>& c, Wide x) {
  Wide s = 0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
  return s;
}

Wide horner_second_derivative(const std::vector<Wide>& c, Wide x) {
  Wide s = 0;
  for (std::size_t k = c.size(); k-- > 2;) s = s * x + Wide(k) * Wide(k - 1) * c[k];
  return s;
}

// Maclaurin coefficients of eps y'' = x y: c_{k+2} = c_{k-1} / (eps (k+1)(k+2)).
std::vector<Wide> airy_series(double eps, Wide c0, Wide c1, std::size_t terms) {
  std::vector<Wide> c(terms, Wide(0));
  c[0] = c0;
  if (terms > 1) c[1] = c1;
  for (std::size_t k = 1; k + 2 < terms; ++k)
    c[k + 2] = c[k - 1] / (Wide(eps) * Wide(k + 1) * Wide(k + 2));
  return c;
}

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

// Length at which both fundamental series have fallen far below the
// resolution of their largest coefficient on |x| <= 1.
std::size_t airy_auto_terms(double eps) {
  std::size_t terms = 64;
  while (true) {
    const auto a = airy_series(eps, 1, 0, terms);
    const auto b = airy_series(eps, 0, 1, terms);
    Wide peak = 0;
    for (std::size_t k = 0; k < terms; ++k)
      peak = std::max({peak, wide_abs(a[k]), wide_abs(b[k])});
    Wide tail = 0;
    for (std::size_t k = terms - 6; k < terms; ++k)
      tail = std::max({tail, wide_abs(a[k]), wide_abs(b[k])});
    if (tail < Wide(1e-36) * peak || terms > 100000) return terms;
    terms *= 2;
  }
}

}  // namespace

// The two series grow like exp((2/3) / sqrt(eps)) at x = +-1 while the
// solution stays O(1), so fitting the boundary values cancels about
// log10 of that many digits; the wide type absorbs it for eps >= 1e-3.
AiryBvpReference::AiryBvpReference(double epsilon, std::size_t terms) : eps_(epsilon) {
  if (!(epsilon >= kAiryMinEpsilon)) {
    throw AccuracyError("airy reference: epsilon below 1e-3 is not supported");
  }
  if (terms == 0) terms = airy_auto_terms(epsilon);
  if (terms < 3) throw ArgumentError("airy reference: need at least 3 series terms");
  first_ = airy_series(epsilon, 1, 0, terms);
  second_ = airy_series(epsilon, 0, 1, terms);
  const Wide a11 = horner(first_, -1);
  const Wide a12 = horner(second_, -1);
  const Wide a21 = horner(first_, 1);
  const Wide a22 = horner(second_, 1);
  const Wide det = a11 * a22 - a12 * a21;
  c1_ = (a22 - a12) / det;
  c2_ = (a11 - a21) / det;
}

double AiryBvpReference::operator()(double x) const {
  return static_cast<double>(c1_ * horner(first_, x) + c2_ * horner(second_, x));
}

double AiryBvpReference::second_derivative(double x) const {
  return static_cast<double>(c1_ * horner_second_derivative(first_, x) +
                             c2_ * horner_second_derivative(second_, x));
}

double airy_bvp_reference(double epsilon, double x) {
  return AiryBvpReference(epsilon)(x);
}

}  // namespace tau::oracles
