#include "tau/problems.hpp"

#include "tau/oracles.hpp"

namespace tau::problems {

TauProblem airy(const RecurrenceBasis& basis, std::size_t degree, double epsilon) {
  TauProblem p;
  p.basis = basis;
  p.degree = degree;
  p.op = {
      {PowerPoly{epsilon}, DerivativeAction{2}},
      {PowerPoly{0.0, -1.0}, IdentityAction{}},
  };
  p.conditions = {
      {{{1.0, 0, -1.0}}, 1.0},
      {{{1.0, 0, 1.0}}, 1.0},
  };
  p.rhs = PowerPoly{0.0};
  return p;
}

TauProblem volterra(const RecurrenceBasis& basis, std::size_t degree, double a) {
  TauProblem p;
  p.basis = basis;
  p.degree = degree;
  p.op = {
      {PowerPoly::shifted_power(a, 3), IdentityAction{}},
      {PowerPoly{1.0}, VolterraAction{-1.0}},
  };
  p.rhs = PowerPoly{-oracles::volterra_forcing(a, -1.0)};
  return p;
}

TauProblem bessel(std::size_t degree, unsigned m, double right) {
  const double m2 = static_cast<double>(m) * static_cast<double>(m);
  TauProblem p;
  p.basis = RecurrenceBasis::laguerre();
  p.degree = degree;
  p.op = {
      {PowerPoly{0.0, 0.0, 1.0}, DerivativeAction{2}},
      {PowerPoly{0.0, 1.0}, DerivativeAction{1}},
      {PowerPoly{-m2, 0.0, 1.0}, IdentityAction{}},
  };
  p.conditions = {
      {{{1.0, 0, 0.0}}, 0.0},
      {{{1.0, 0, right}}, 1.0},
  };
  p.rhs = PowerPoly{0.0};
  p.options.equilibrate = true;
  return p;
}

}  // namespace tau::problems
