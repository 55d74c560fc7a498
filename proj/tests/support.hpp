#pragma once

#include <initializer_list>
#include <random>

#include "ffd/funfield.hpp"

namespace ffd::testing {

inline RatFun T() { return RatFun::t(); }
inline RatFun K(long num, long den = 1) { return RatFun(make_rational(num, den)); }

/// Coefficients in ascending degree order.
inline UniPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

inline UniPoly random_poly(std::mt19937_64& rng, int max_degree, long coef_bound, bool nonzero = true) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-coef_bound, coef_bound);
  for (;;) {
    const int d = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coef(rng);
    UniPoly p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline RatFun random_ratfun(std::mt19937_64& rng, int max_degree, long coef_bound) {
  return RatFun(random_poly(rng, max_degree, coef_bound), random_poly(rng, max_degree, coef_bound));
}

}  // namespace ffd::testing
