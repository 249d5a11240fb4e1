#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "tau/config.hpp"
#include "tau/errors.hpp"

using namespace tau;
using namespace tau::config;
using doctest::Approx;

namespace {

const std::string kDir = TAU_CONFIG_DIR;

const char* kGrowth = R"({
  "basis": {"family": "jacobi", "alpha": 0, "beta": 0},
  "degree": 1,
  "operator": [
    {"action": "derivative", "order": 1, "coeff": [1]},
    {"action": "identity", "coeff": [-1]}
  ],
  "conditions": [{"terms": [{"coeff": 1, "deriv": 0, "point": 0}], "value": 1}],
  "rhs": {"coeff": [0]},
  "grid": {"start": -1, "stop": 1, "count": 3}
})";

std::string with(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("parse a complete problem") {
  auto cfg = parse_problem(kGrowth);
  CHECK(cfg.problem.degree == 1);
  CHECK(cfg.problem.basis.family() == Family::Jacobi);
  REQUIRE(cfg.problem.op.size() == 2);
  CHECK(std::holds_alternative<DerivativeAction>(cfg.problem.op[0].action));
  CHECK(std::holds_alternative<IdentityAction>(cfg.problem.op[1].action));
  CHECK(cfg.problem.op[1].coeff[0] == -1.0);
  REQUIRE(cfg.problem.conditions.size() == 1);
  CHECK(cfg.problem.conditions[0].target == 1.0);
  CHECK(cfg.grid.count == 3);
  CHECK(cfg.reference.kind == ReferenceKind::None);
  CHECK(!make_reference(cfg.reference));

  auto s = solve_tau(cfg.problem);
  CHECK(s.coeffs[0] == Approx(1.0));
  CHECK(s.coeffs[1] == Approx(1.0));
}

TEST_CASE("unknown keys are rejected at every level") {
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"degree\": 1", "\"degree\": 1, \"foo\": 2")),
                  ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"beta\": 0", "\"beta\": 0, \"gamma\": 1")),
                  ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"order\": 1", "\"order\": 1, \"x\": 1")),
                  ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"point\": 0", "\"point\": 0, \"at\": 0")),
                  ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"count\": 3", "\"count\": 3, \"step\": 1")),
                  ConfigError);
  try {
    parse_problem(with(kGrowth, "\"degree\": 1", "\"degree\": 1, \"foo\": 2"));
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
}

TEST_CASE("malformed values are rejected") {
  CHECK_THROWS_AS(parse_problem("{"), ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"degree\": 1", "\"degree\": -1")), ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"degree\": 1", "\"degree\": 1.5")), ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"alpha\": 0", "\"alpha\": -1")), ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"jacobi\"", "\"hermite\"")), ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"order\": 1", "\"order\": 0")), ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"coeff\": [-1]", "\"coeff\": []")), ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"action\": \"identity\"", "\"action\": \"shift\"")),
                  ConfigError);
  CHECK_THROWS_AS(parse_problem(with(kGrowth, "\"count\": 3", "\"count\": 0")), ConfigError);
  CHECK_THROWS_AS(
      parse_problem(with(kGrowth, "\"degree\": 1", "\"degree\": 0, \"solver\": {\"path\": \"x\"}")),
      ConfigError);
  // Two conditions for a single unknown.
  CHECK_THROWS_AS(parse_problem(with(with(kGrowth, "\"degree\": 1", "\"degree\": 0"), "\"value\": 1}]",
                                     "\"value\": 1}, {\"terms\": [{\"coeff\": 1, \"deriv\": 0, "
                                     "\"point\": 1}], \"value\": 2}]")),
                  ConfigError);
}

TEST_CASE("shipped configs") {
  auto v = load_problem(kDir + "/volterra.json");
  CHECK(v.problem.degree == 100);
  CHECK(v.reference.kind == ReferenceKind::VolterraExact);
  CHECK(v.reference.a == 1.25);
  REQUIRE(std::holds_alternative<VolterraAction>(v.problem.op[1].action));
  CHECK(std::get<VolterraAction>(v.problem.op[1].action).lower == -1.0);
  auto ref = make_reference(v.reference);
  CHECK(ref(0.0) == Approx(std::exp(1.0 / 3.125) / (1.25 * 1.25 * 1.25)));

  auto b = load_problem(kDir + "/bessel.json");
  CHECK(b.problem.basis.family() == Family::Laguerre);
  CHECK(b.problem.options.equilibrate);
  CHECK(make_reference(b.reference)(60.0) == Approx(1.0).epsilon(1e-15));

  auto a = load_problem(kDir + "/airy.json");
  CHECK(a.reference.epsilon == 0.01);
  CHECK(make_reference(a.reference)(1.0) == Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(load_problem(kDir + "/does-not-exist.json"), IoError);
}

TEST_CASE("basis specs") {
  CHECK(parse_basis_spec("legendre").same_as(RecurrenceBasis::legendre()));
  CHECK(parse_basis_spec("chebyshev").same_as(RecurrenceBasis::jacobi(-0.5, -0.5)));
  CHECK(parse_basis_spec("laguerre").family() == Family::Laguerre);
  auto j = parse_basis_spec("jacobi:1,-0.9");
  CHECK(j.jacobi_alpha() == 1.0);
  CHECK(j.jacobi_beta() == -0.9);
  CHECK_THROWS_AS(parse_basis_spec("jacobi:1"), ConfigError);
  CHECK_THROWS_AS(parse_basis_spec("jacobi:-2,0"), ConfigError);
  CHECK_THROWS_AS(parse_basis_spec("hermite"), ConfigError);
}
