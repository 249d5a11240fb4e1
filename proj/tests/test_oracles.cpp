#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "tau/errors.hpp"
#include "tau/oracles.hpp"

using namespace tau;
using namespace tau::oracles;
using doctest::Approx;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15 * tol) return left + right + diff / 15;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 30);
}

// eps y'' = x y, y(-1) = y(1) = 1 by second-order finite differences on n
// intervals (Thomas algorithm); returns y(0). n must be even.
double airy_fd_at_zero(double eps, std::size_t n) {
  double h = 2.0 / double(n);
  std::size_t m = n - 1;  // interior unknowns
  std::vector<double> diag(m), rhs(m, 0.0);
  double off = eps / (h * h);
  for (std::size_t i = 0; i < m; ++i) {
    double x = -1.0 + h * double(i + 1);
    diag[i] = -2.0 * off - x;
  }
  rhs.front() -= off;
  rhs.back() -= off;
  for (std::size_t i = 1; i < m; ++i) {
    double w = off / diag[i - 1];
    diag[i] -= w * off;
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> y(m);
  y[m - 1] = rhs[m - 1] / diag[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) y[i] = (rhs[i] - off * y[i + 1]) / diag[i];
  return y[n / 2 - 1];
}

}  // namespace

TEST_CASE("power oracle examples") {
  auto leg = RecurrenceBasis::legendre();
  auto d3 = power_oracle_column(leg, OpKind::Derivative, 3);
  REQUIRE(d3.size() == 5);
  CHECK(d3[0] == Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(d3[1]) <= 1e-15);
  CHECK(d3[2] == Approx(5.0).epsilon(1e-15));
  CHECK(std::abs(d3[3]) <= 1e-15);

  for (auto b : {leg, RecurrenceBasis::laguerre(), RecurrenceBasis::jacobi(1.0, -0.9)}) {
    auto d0 = power_oracle_column(b, OpKind::Derivative, 0);
    for (double v : d0) CHECK(v == 0.0);
  }

  auto v0 = power_oracle_column(leg, OpKind::VolterraIntegral, 0, -1.0);
  REQUIRE(v0.size() == 2);
  CHECK(v0[0] == Approx(1.0).epsilon(1e-15));
  CHECK(v0[1] == Approx(1.0).epsilon(1e-15));

  auto i1 = power_oracle_column(leg, OpKind::Integral, 1);
  CHECK(i1[0] == 0.0);
  CHECK(i1[2] == Approx(1.0 / 3.0).epsilon(1e-15));

  CHECK_NOTHROW(power_oracle_column(leg, OpKind::Shift, kMaxOracleColumn));
  CHECK_THROWS_AS(power_oracle_column(leg, OpKind::Shift, kMaxOracleColumn + 1), RangeError);
  CHECK_THROWS_AS(power_oracle_column(leg, OpKind::PowerShift, 2), ArgumentError);
}

TEST_CASE("bessel examples") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  for (unsigned m : {1u, 2u, 10u}) CHECK(bessel_j(m, 0.0) == 0.0);
  CHECK(bessel_j_series(1, 1.0) == Approx(0.44005058574493355).epsilon(1e-14));
  CHECK(bessel_j(1, 1.0) == Approx(0.44005058574493355).epsilon(1e-13));
  CHECK_THROWS_AS(bessel_j(1, -1.0), RangeError);
}

TEST_CASE("bessel against independent values") {
  // Values from an independent 40-digit evaluation.
  CHECK(std::abs(bessel_j(10, 60.0) - 0.0971771433280711) <= 1e-12);
  CHECK(std::abs(bessel_j(0, 60.0) - -0.09147180408906187) <= 1e-12);
  CHECK(std::abs(bessel_j(20, 30.0) - 0.004831019993404065) <= 1e-12);
  CHECK(std::abs(bessel_j(30, 100.0) - 0.08146012958117222) <= 1e-12);
}

TEST_CASE("bessel against the ascending series") {
  for (unsigned m = 0; m <= 30; ++m) {
    for (double x : {0.1, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0}) {
      INFO("m=" << m << " x=" << x);
      CHECK(std::abs(bessel_j(m, x) - bessel_j_series(m, x)) <= 1e-12);
    }
  }
}

TEST_CASE("bessel three-term identity") {
  for (unsigned m = 1; m <= 20; ++m) {
    for (double x : {1.0, 10.0, 30.0, 60.0}) {
      double lo = bessel_j(m - 1, x), mid = bessel_j(m, x), hi = bessel_j(m + 1, x);
      double rhs = 2.0 * m / x * mid;
      double scale = std::abs(lo) + std::abs(hi) + std::abs(rhs);
      INFO("m=" << m << " x=" << x);
      CHECK(std::abs(lo + hi - rhs) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("volterra closed form") {
  CHECK(volterra_exact(1.25, -1.0) ==
        Approx(std::exp(1.0 / 10.125) / (2.25 * 2.25 * 2.25)).epsilon(1e-15));
  CHECK(volterra_exact(1.25, -1.0) == Approx(0.0969049).epsilon(1e-6));
  CHECK(volterra_exact(2.0, 1.0) == Approx(std::exp(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(volterra_exact(0.5, 0.5), RangeError);
}

TEST_CASE("volterra identity by quadrature") {
  const double a = 1.25;
  auto y = [a](double x) { return volterra_exact(a, x); };
  const double target = -volterra_forcing(a, -1.0);
  for (double x : {-0.5, 0.0, 0.3, 0.75, 1.0}) {
    double d = x - a;
    double lhs = d * d * d * y(x) + adaptive_simpson(y, -1.0, x, 1e-13);
    INFO("x=" << x);
    CHECK(std::abs(lhs - target) <= 1e-12);
  }
}

TEST_CASE("airy reference") {
  for (double eps : {1.0, 1e-1, 1e-2, 3e-3, 1e-3}) {
    AiryBvpReference ref(eps);
    INFO("eps=" << eps);
    CHECK(std::abs(ref(-1.0) - 1.0) <= 1e-12);
    CHECK(std::abs(ref(1.0) - 1.0) <= 1e-12);
    double ymax = 0.0;
    for (int i = 0; i <= 40; ++i) ymax = std::max(ymax, std::abs(ref(-1.0 + i / 20.0)));
    for (int i = 0; i <= 40; ++i) {
      double x = -1.0 + i / 20.0;
      CHECK(std::abs(eps * ref.second_derivative(x) - x * ref(x)) <= 1e-10 * ymax);
    }
  }
  CHECK(airy_bvp_reference(1e-2, 1.0) == Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(AiryBvpReference(1e-5), AccuracyError);
  CHECK_THROWS_AS(airy_bvp_reference(5e-4, 0.0), AccuracyError);
}

TEST_CASE("airy truncation") {
  for (double eps : {1.0, 1e-1, 1e-2}) {
    AiryBvpReference base(eps);
    AiryBvpReference doubled(eps, 2 * base.terms());
    for (int i = 0; i <= 20; ++i) {
      double x = -1.0 + i / 10.0;
      INFO("eps=" << eps << " x=" << x);
      CHECK(std::abs(base(x) - doubled(x)) <= 1e-12);
    }
  }
}

TEST_CASE("airy reference agrees with finite differences") {
  // Two levels of Richardson extrapolation on 2nd-order differences.
  const double eps = 1e-2;
  double u1 = airy_fd_at_zero(eps, 2000);
  double u2 = airy_fd_at_zero(eps, 4000);
  double u3 = airy_fd_at_zero(eps, 8000);
  double r1 = (4 * u2 - u1) / 3, r2 = (4 * u3 - u2) / 3;
  double fd = (16 * r2 - r1) / 15;
  CHECK(std::abs(fd - airy_bvp_reference(eps, 0.0)) <= 1e-8);
}
