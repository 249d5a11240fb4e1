#include "tau/poly.hpp"

#include <algorithm>

namespace tau {

void PowerPoly::trim() {
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
  if (c_.empty()) c_.push_back(0.0);
}

PowerPoly PowerPoly::shifted_power(double root, unsigned power) {
  PowerPoly p{1.0};
  const PowerPoly factor{-root, 1.0};
  for (unsigned i = 0; i < power; ++i) p = p * factor;
  return p;
}

double PowerPoly::operator()(double x) const {
  double s = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) s = s * x + c_[k];
  return s;
}

PowerPoly PowerPoly::derivative(unsigned order) const {
  std::vector<double> c = c_;
  for (unsigned o = 0; o < order; ++o) {
    if (c.size() <= 1) return PowerPoly{};
    std::vector<double> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    c = std::move(d);
  }
  return PowerPoly(std::move(c));
}

PowerPoly PowerPoly::primitive() const {
  std::vector<double> p(c_.size() + 1, 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) p[k + 1] = c_[k] / static_cast<double>(k + 1);
  return PowerPoly(std::move(p));
}

PowerPoly PowerPoly::definite_from(double lower) const {
  PowerPoly p = primitive();
  p.c_[0] -= p(lower);
  p.trim();
  return p;
}

PowerPoly& PowerPoly::operator+=(const PowerPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

PowerPoly& PowerPoly::operator*=(double s) {
  for (double& v : c_) v *= s;
  trim();
  return *this;
}

PowerPoly operator*(const PowerPoly& a, const PowerPoly& b) {
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return PowerPoly(std::move(c));
}

}  // namespace tau
