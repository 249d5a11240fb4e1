#pragma once
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "tau/basis.hpp"

namespace tau::testing {

// Bases the structural and oracle checks sweep over.
inline std::vector<RecurrenceBasis> sweep_bases() {
  return {RecurrenceBasis::jacobi(0.0, 0.0), RecurrenceBasis::jacobi(-0.5, -0.5),
          RecurrenceBasis::jacobi(1.0, -0.9), RecurrenceBasis::jacobi(10.0, 0.0),
          RecurrenceBasis::laguerre()};
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n,
                                         double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

inline DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  DenseMatrix m(r, c);
  auto v = random_vector(rng, r * c);
  for (std::size_t i = 0; i < v.size(); ++i) m.data()[i] = v[i];
  return m;
}

// Sample points inside the natural interval; Laguerre uses [0, 60].
inline std::vector<double> sample_points(const RecurrenceBasis& b, std::size_t count) {
  double lo = b.lower();
  double hi = std::isfinite(b.upper()) ? b.upper() : 60.0;
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i)
    xs[i] = lo + (hi - lo) * double(i) / double(count - 1);
  return xs;
}

}  // namespace tau::testing
