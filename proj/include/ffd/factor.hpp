#pragma once

#include <utility>
#include <vector>

#include "ffd/unipoly.hpp"

namespace ffd {

struct Factorization {
  Rational unit;
  /// Monic irreducible factors with multiplicities, in canonical UniPoly order.
  std::vector<std::pair<UniPoly, int>> factors;
};

/// Complete factorization over Q (Zassenhaus: modular factorization,
/// Hensel lifting, factor recombination). Throws on the zero polynomial.
Factorization factor(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

}  // namespace ffd
