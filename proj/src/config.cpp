#include "tau/config.hpp"

#include <fstream>
#include <initializer_list>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tau/errors.hpp"
#include "tau/oracles.hpp"

namespace tau::config {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items())
    if (!ok.contains(key)) throw ConfigError(where + ": unknown key \"" + key + "\"");
}

const json& require(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing key \"" + key + "\"");
  return obj.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + ": expected a number");
  return v.get<double>();
}

std::size_t count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError(where + ": expected a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

PowerPoly poly(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ConfigError(where + ": expected a non-empty array");
  std::vector<double> c;
  for (std::size_t i = 0; i < v.size(); ++i)
    c.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
  return PowerPoly(std::move(c));
}

RecurrenceBasis parse_basis(const json& b) {
  check_keys(b, "basis", {"family", "alpha", "beta"});
  const json& fam = require(b, "basis", "family");
  if (!fam.is_string()) throw ConfigError("basis.family: expected a string");
  const std::string family = fam.get<std::string>();
  if (family == "laguerre") {
    if (b.contains("alpha") || b.contains("beta"))
      throw ConfigError("basis: alpha/beta apply to the jacobi family only");
    return RecurrenceBasis::laguerre();
  }
  if (family != "jacobi") throw ConfigError("basis.family: must be \"jacobi\" or \"laguerre\"");
  const double alpha = number(require(b, "basis", "alpha"), "basis.alpha");
  const double beta = number(require(b, "basis", "beta"), "basis.beta");
  try {
    return RecurrenceBasis::jacobi(alpha, beta);
  } catch (const ParameterError& e) {
    throw ConfigError(std::string("basis: ") + e.what());
  }
}

OperatorTerm parse_term(const json& t, const std::string& where) {
  check_keys(t, where, {"action", "order", "lower", "coeff"});
  const json& act = require(t, where, "action");
  if (!act.is_string()) throw ConfigError(where + ".action: expected a string");
  const std::string action = act.get<std::string>();
  OperatorTerm term;
  term.coeff = poly(require(t, where, "coeff"), where + ".coeff");
  if (action == "derivative") {
    if (t.contains("lower")) throw ConfigError(where + ": \"lower\" only applies to volterra");
    const std::size_t order = count(require(t, where, "order"), where + ".order");
    if (order == 0) throw ConfigError(where + ".order: must be >= 1");
    term.action = DerivativeAction{static_cast<unsigned>(order)};
  } else if (action == "identity") {
    if (t.contains("lower") || t.contains("order"))
      throw ConfigError(where + ": identity takes neither \"order\" nor \"lower\"");
    term.action = IdentityAction{};
  } else if (action == "volterra") {
    if (t.contains("order")) throw ConfigError(where + ": \"order\" only applies to derivative");
    term.action = VolterraAction{number(require(t, where, "lower"), where + ".lower")};
  } else {
    throw ConfigError(where + ".action: must be derivative, identity or volterra");
  }
  return term;
}

ConditionSpec parse_condition(const json& c, const std::string& where) {
  check_keys(c, where, {"terms", "value"});
  const json& terms = require(c, where, "terms");
  if (!terms.is_array() || terms.empty()) throw ConfigError(where + ".terms: expected a non-empty array");
  ConditionSpec spec;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = where + ".terms[" + std::to_string(i) + "]";
    check_keys(terms[i], w, {"coeff", "deriv", "point"});
    ConditionTerm t;
    t.coeff = number(require(terms[i], w, "coeff"), w + ".coeff");
    t.derivative = static_cast<unsigned>(count(require(terms[i], w, "deriv"), w + ".deriv"));
    t.point = number(require(terms[i], w, "point"), w + ".point");
    spec.terms.push_back(t);
  }
  spec.target = number(require(c, where, "value"), where + ".value");
  return spec;
}

ReferenceSpec parse_reference(const json& r) {
  check_keys(r, "reference", {"kind", "params"});
  const json& k = require(r, "reference", "kind");
  if (!k.is_string()) throw ConfigError("reference.kind: expected a string");
  const std::string kind = k.get<std::string>();
  const json params = r.contains("params") ? r.at("params") : json::object();
  ReferenceSpec spec;
  if (kind == "none") {
    check_keys(params, "reference.params", {});
  } else if (kind == "volterra_exact") {
    check_keys(params, "reference.params", {"a"});
    spec.kind = ReferenceKind::VolterraExact;
    spec.a = number(require(params, "reference.params", "a"), "reference.params.a");
  } else if (kind == "bessel") {
    check_keys(params, "reference.params", {"m", "right"});
    spec.kind = ReferenceKind::Bessel;
    spec.m = static_cast<unsigned>(count(require(params, "reference.params", "m"), "reference.params.m"));
    if (params.contains("right")) spec.right = number(params.at("right"), "reference.params.right");
  } else if (kind == "airy_bvp") {
    check_keys(params, "reference.params", {"epsilon"});
    spec.kind = ReferenceKind::AiryBvp;
    spec.epsilon = number(require(params, "reference.params", "epsilon"), "reference.params.epsilon");
    if (!(spec.epsilon >= oracles::kAiryMinEpsilon))
      throw ConfigError("reference.params.epsilon: airy_bvp needs epsilon >= 1e-3");
  } else {
    throw ConfigError("reference.kind: must be none, volterra_exact, bessel or airy_bvp");
  }
  return spec;
}

}  // namespace

ProblemConfig parse_problem(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  check_keys(doc, "config",
             {"basis", "degree", "operator", "conditions", "rhs", "grid", "reference", "solver"});

  ProblemConfig cfg;
  TauProblem& p = cfg.problem;
  p.basis = parse_basis(require(doc, "config", "basis"));
  p.degree = count(require(doc, "config", "degree"), "degree");

  const json& op = require(doc, "config", "operator");
  if (!op.is_array() || op.empty()) throw ConfigError("operator: expected a non-empty array");
  for (std::size_t i = 0; i < op.size(); ++i)
    p.op.push_back(parse_term(op[i], "operator[" + std::to_string(i) + "]"));

  if (doc.contains("conditions")) {
    const json& cs = doc.at("conditions");
    if (!cs.is_array()) throw ConfigError("conditions: expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i)
      p.conditions.push_back(parse_condition(cs[i], "conditions[" + std::to_string(i) + "]"));
  }
  if (p.conditions.size() > p.degree + 1)
    throw ConfigError("conditions: more conditions than unknowns (degree + 1)");

  if (doc.contains("rhs")) {
    check_keys(doc.at("rhs"), "rhs", {"coeff"});
    p.rhs = poly(require(doc.at("rhs"), "rhs", "coeff"), "rhs.coeff");
  }

  const json& g = require(doc, "config", "grid");
  check_keys(g, "grid", {"start", "stop", "count"});
  cfg.grid.start = number(require(g, "grid", "start"), "grid.start");
  cfg.grid.stop = number(require(g, "grid", "stop"), "grid.stop");
  cfg.grid.count = count(require(g, "grid", "count"), "grid.count");
  if (cfg.grid.count == 0) throw ConfigError("grid.count: must be positive");

  if (doc.contains("reference")) cfg.reference = parse_reference(doc.at("reference"));

  if (doc.contains("solver")) {
    const json& s = doc.at("solver");
    check_keys(s, "solver", {"equilibrate", "path"});
    if (s.contains("equilibrate")) {
      if (!s.at("equilibrate").is_boolean()) throw ConfigError("solver.equilibrate: expected a boolean");
      p.options.equilibrate = s.at("equilibrate").get<bool>();
    }
    if (s.contains("path")) {
      const json& path = s.at("path");
      if (path == "recurrence") {
        p.options.path = MatrixPath::Recurrence;
      } else if (path == "similarity") {
        p.options.path = MatrixPath::Similarity;
      } else {
        throw ConfigError("solver.path: must be \"recurrence\" or \"similarity\"");
      }
    }
  }
  return cfg;
}

ProblemConfig load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::function<double(double)> make_reference(const ReferenceSpec& spec) {
  switch (spec.kind) {
    case ReferenceKind::None:
      return {};
    case ReferenceKind::VolterraExact:
      return [a = spec.a](double x) { return oracles::volterra_exact(a, x); };
    case ReferenceKind::Bessel: {
      const double scale = oracles::bessel_j(spec.m, spec.right);
      return [m = spec.m, scale](double x) { return oracles::bessel_j(m, x) / scale; };
    }
    case ReferenceKind::AiryBvp: {
      auto ref = std::make_shared<oracles::AiryBvpReference>(spec.epsilon);
      return [ref](double x) { return (*ref)(x); };
    }
  }
  return {};
}

RecurrenceBasis parse_basis_spec(const std::string& spec) {
  if (spec == "legendre") return RecurrenceBasis::legendre();
  if (spec == "chebyshev") return RecurrenceBasis::jacobi(-0.5, -0.5);
  if (spec == "laguerre") return RecurrenceBasis::laguerre();
  const std::string prefix = "jacobi:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string rest = spec.substr(prefix.size());
    const auto comma = rest.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string sa = rest.substr(0, comma);
        const std::string sb = rest.substr(comma + 1);
        const double a = std::stod(sa, &used_a);
        const double b = std::stod(sb, &used_b);
        if (used_a == sa.size() && used_b == sb.size()) return RecurrenceBasis::jacobi(a, b);
      } catch (const std::logic_error&) {
      } catch (const ParameterError& e) {
        throw ConfigError(std::string("basis spec: ") + e.what());
      }
    }
  }
  throw ConfigError("basis spec must be jacobi:A,B, legendre, chebyshev or laguerre (got \"" +
                    spec + "\")");
}

}  // namespace tau::config
