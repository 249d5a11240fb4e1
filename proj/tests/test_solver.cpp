#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "exactness.hpp"
#include "tau/errors.hpp"
#include "tau/experiments.hpp"
#include "tau/oracles.hpp"
#include "tau/problems.hpp"
#include "tau/solver.hpp"

using namespace tau;
using doctest::Approx;

namespace {

// y' - y = 0, y(0) = 1.
TauProblem growth_problem(std::size_t n, const RecurrenceBasis& b = RecurrenceBasis::legendre()) {
  TauProblem p;
  p.basis = b;
  p.degree = n;
  p.op = {{PowerPoly{1.0}, DerivativeAction{1}}, {PowerPoly{-1.0}, IdentityAction{}}};
  p.conditions = {{{{1.0, 0, 0.0}}, 1.0}};
  return p;
}

// y' = 0, y(0) = c.
TauProblem constant_problem(const RecurrenceBasis& b, double c) {
  TauProblem p;
  p.basis = b;
  p.degree = 2;
  p.op = {{PowerPoly{1.0}, DerivativeAction{1}}};
  p.conditions = {{{{1.0, 0, 0.0}}, c}};
  return p;
}

}  // namespace

TEST_CASE("operator height") {
  auto airy = problems::airy(RecurrenceBasis::legendre(), 10, 1e-5);
  CHECK(operator_height(airy.op) == 1);
  CHECK(operator_height(growth_problem(3).op) == 0);
  auto volterra = problems::volterra(RecurrenceBasis::legendre(), 10, 1.25);
  CHECK(operator_height(volterra.op) == 3);
  LinearOperator integral_only{{PowerPoly{2.0}, VolterraAction{-1.0}}};
  CHECK(operator_height(integral_only) == 1);
}

TEST_CASE("assemble_pi examples") {
  auto pi = assemble_pi(growth_problem(1));
  REQUIRE(pi.rows() == 2);
  REQUIRE(pi.cols() == 2);
  CHECK(pi(0, 0) == -1.0);
  CHECK(pi(0, 1) == 1.0);
  CHECK(pi(1, 0) == 0.0);
  CHECK(pi(1, 1) == -1.0);

  TauProblem id;
  id.basis = RecurrenceBasis::jacobi(1.0, -0.9);
  id.degree = 4;
  id.op = {{PowerPoly{1.0}, IdentityAction{}}};
  auto eye = assemble_pi(id);
  CHECK(eye.rows() == 5);
  CHECK((eye - DenseMatrix::identity(5)).max_abs() == 0.0);

  TauProblem shift;
  shift.degree = 1;
  shift.op = {{PowerPoly{0.0, 1.0}, IdentityAction{}}};
  auto m = assemble_pi(shift);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == 0.0);
  CHECK(m(1, 0) == 1.0);
  CHECK(m(2, 0) == 0.0);
  CHECK(m(0, 1) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m(1, 1) == 0.0);
  CHECK(m(2, 1) == Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("project_rhs examples") {
  auto leg = RecurrenceBasis::legendre();
  for (const auto& b : testing::sweep_bases()) {
    auto c = project_rhs(PowerPoly{2.5}, b, 4);
    CHECK(c[0] == 2.5);
    CHECK(c[1] == 0.0);
  }
  auto x = project_rhs(PowerPoly{0.0, 1.0}, leg, 3);
  CHECK(x[0] == 0.0);
  CHECK(x[1] == 1.0);
  CHECK(x[2] == 0.0);
  auto x2 = project_rhs(PowerPoly{0.0, 0.0, 1.0}, leg, 4);
  CHECK(x2[0] == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(x2[1] == 0.0);
  CHECK(x2[2] == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(x2[3] == 0.0);
  CHECK_THROWS_AS(project_rhs(PowerPoly{0.0, 0.0, 1.0}, leg, 2), SizeError);

  std::mt19937_64 rng(21);
  for (const auto& b : testing::sweep_bases()) {
    auto f = testing::random_poly_for(rng, b, 9);
    auto c = project_rhs(f, b, 12);
    for (double t : testing::sample_points(b, 7)) {
      double scale = 0.0;
      for (std::size_t k = f.degree() + 1; k-- > 0;) scale = scale * std::abs(t) + std::abs(f[k]);
      CHECK(std::abs(clenshaw(b, c, t) - f(t)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("condition rows") {
  auto leg = RecurrenceBasis::legendre();
  auto r1 = condition_row({{{1.0, 0, 1.0}}, 1.0}, leg, 3);
  for (double v : r1) CHECK(v == Approx(1.0).epsilon(1e-15));
  auto r0 = condition_row({{{1.0, 0, 0.0}}, 0.0}, RecurrenceBasis::laguerre(), 3);
  for (double v : r0) CHECK(v == Approx(1.0).epsilon(1e-15));
  auto r2 = condition_row({{{1.0, 0, 0.0}}, 1.0}, leg, 1);
  CHECK(r2[0] == 1.0);
  CHECK(r2[1] == 0.0);
  // y'(1) + 2 y(-1): P_k'(1) = k(k+1)/2, P_k(-1) = (-1)^k.
  auto mixed = condition_row({{{1.0, 1, 1.0}, {2.0, 0, -1.0}}, 0.0}, leg, 3);
  CHECK(mixed[0] == Approx(2.0));
  CHECK(mixed[1] == Approx(1.0 - 2.0));
  CHECK(mixed[2] == Approx(3.0 + 2.0));
  CHECK(mixed[3] == Approx(6.0 - 2.0));
}

TEST_CASE("solve_tau examples") {
  auto s = solve_tau(growth_problem(1));
  CHECK(s.coeffs[0] == Approx(1.0).epsilon(1e-15));
  CHECK(s.coeffs[1] == Approx(1.0).epsilon(1e-15));
  CHECK(s.diagnostics.height == 0);
  CHECK(s.diagnostics.cond_estimate >= 1.0);

  for (const auto& b : testing::sweep_bases()) {
    if (b.family() != Family::Jacobi) continue;
    auto c = solve_tau(constant_problem(b, 3.5));
    CHECK(c.coeffs[0] == Approx(3.5).epsilon(1e-14));
    CHECK(std::abs(c.coeffs[1]) <= 1e-14);
    CHECK(std::abs(c.coeffs[2]) <= 1e-14);
  }

  auto over = growth_problem(0);
  over.conditions.push_back({{{1.0, 0, 0.5}}, 2.0});
  CHECK_THROWS_AS(solve_tau(over), OverConstrainedError);

  // y' = 0 without a condition leaves the constant free.
  TauProblem free;
  free.degree = 3;
  free.op = {{PowerPoly{1.0}, DerivativeAction{1}}};
  CHECK_THROWS_AS(solve_tau(free), SingularMatrixError);
}

TEST_CASE("residual tail") {
  auto p = growth_problem(1);
  auto s = solve_tau(p);
  auto tail = residual_tail(p, s);
  CHECK(tail.first == 1);
  REQUIRE(tail.values.size() == 1);
  CHECK(tail.values[0] == Approx(-1.0).epsilon(1e-15));

  auto cp = constant_problem(RecurrenceBasis::legendre(), 2.0);
  auto ct = residual_tail(cp, solve_tau(cp));
  for (double v : ct.values) CHECK(std::abs(v) <= 1e-12);

  auto wrong = growth_problem(4);
  CHECK_THROWS_AS(residual_tail(wrong, s), ArgumentError);

  // Imposed rows plus the tail reproduce Pi a - f.
  auto vp = problems::volterra(RecurrenceBasis::legendre(), 30, 1.25);
  auto r = solve_tau_with_tail(vp);
  auto pi = assemble_pi(vp);
  auto f = project_rhs(vp.rhs, vp.basis, pi.rows());
  auto res = pi * std::span<const double>(r.solution.coeffs);
  double scale = pi.norm_inf() * norm_inf(r.solution.coeffs);
  for (std::size_t i = 0; i < res.size(); ++i) {
    double ri = res[i] - f[i];
    if (i < r.tail.first) {
      CHECK(std::abs(ri) <= 1e-9 * scale);
    } else {
      CHECK(ri == Approx(r.tail.values[i - r.tail.first]).epsilon(1e-12).scale(scale * 1e-3));
    }
  }
}

TEST_CASE("airy tail shrinks with the degree") {
  auto leg = RecurrenceBasis::legendre();
  auto max_tail = [&](std::size_t n) {
    auto r = solve_tau_with_tail(problems::airy(leg, n, problems::kAiryEpsilon));
    double m = 0.0;
    for (double v : r.tail.values) m = std::max(m, std::abs(v));
    return m;
  };
  double t250 = max_tail(250);
  double t350 = max_tail(350);
  CHECK(t350 < t250);
  CHECK(t350 <= 1e-6);
}

TEST_CASE("condition rows are satisfied") {
  auto leg = RecurrenceBasis::legendre();
  auto airy = problems::airy(leg, 120, 1e-2);
  auto s = solve_tau(airy);
  CHECK(s(-1.0) == Approx(1.0).epsilon(1e-10));
  CHECK(s(1.0) == Approx(1.0).epsilon(1e-10));
  auto g = solve_tau(growth_problem(12, RecurrenceBasis::jacobi(1.0, -0.9)));
  CHECK(g(0.0) == Approx(1.0).epsilon(1e-12));
  CHECK(g(0.5) == Approx(std::exp(0.5)).epsilon(1e-10));
}

TEST_CASE("sup_error") {
  auto s = solve_tau(growth_problem(1));
  std::vector<double> grid{-1.0, 0.0, 1.0};
  CHECK(sup_error(s, [&](double x) { return s(x); }, grid) == 0.0);
  CHECK(sup_error(s, [](double x) { return std::exp(x); }, grid) ==
        Approx(std::exp(1.0) - 2.0).epsilon(1e-14));
  auto g = uniform_grid(-1.0, 1.0, 5);
  CHECK(g.front() == -1.0);
  CHECK(g[2] == 0.0);
  CHECK(g.back() == 1.0);
}

TEST_CASE("volterra problem at n = 100") {
  auto leg = RecurrenceBasis::legendre();
  auto s = solve_tau(problems::volterra(leg, 100, problems::kVolterraShift));
  auto grid = uniform_grid(-1.0, 1.0, problems::kJacobiGridPoints);
  double err = sup_error(
      s, [](double x) { return oracles::volterra_exact(problems::kVolterraShift, x); }, grid);
  CHECK(err >= 1e-8);
  CHECK(err <= 1e-5);
  CHECK(s.diagnostics.height == 3);
}

TEST_CASE("basis independence") {
  auto grid = uniform_grid(-1.0, 1.0, problems::kJacobiGridPoints);
  auto a = solve_tau(problems::volterra(RecurrenceBasis::legendre(), 150, 1.25));
  auto b = solve_tau(problems::volterra(RecurrenceBasis::jacobi(-0.5, -0.5), 150, 1.25));
  // Larger of the published n = 150 errors for the two bases, times 10.
  CHECK(experiments::sup_distance(a, b, grid) <= 10 * 5.46e-7);
}

TEST_CASE("polynomial solutions are reproduced") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = testing::random_exact_case(rng);
    auto r = testing::check_exactness(c);
    INFO(c.label);
    CHECK(r.coeff_error <= 1e-10);
    CHECK(r.max_tail <= 1e-10);
  }
}

TEST_CASE("similarity path at small degree") {
  auto p = problems::volterra(RecurrenceBasis::legendre(), 12, 1.25);
  auto rec = solve_tau(p);
  p.options.path = MatrixPath::Similarity;
  auto sim = solve_tau(p);
  for (std::size_t k = 0; k < rec.coeffs.size(); ++k)
    CHECK(sim.coeffs[k] == Approx(rec.coeffs[k]).epsilon(1e-6).scale(norm_inf(rec.coeffs)));
}
