#pragma once

#include <vector>

#include "ffd/rational.hpp"

namespace ffd::detail {

using QMatrix = std::vector<std::vector<Rational>>;

Rational determinant(QMatrix a);
int rank(QMatrix a);
/// Inverse of a square matrix; std::domain_error when singular.
QMatrix inverse(const QMatrix& a);

}  // namespace ffd::detail
