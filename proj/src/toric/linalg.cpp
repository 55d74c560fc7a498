#include "linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ffd::detail {

namespace {

// Gauss-Jordan on the first `cols` columns; returns the rank and the sign
// of the row permutation, leaving pivots in place.
int eliminate(QMatrix& a, std::size_t cols, int* sign, bool reduce_above) {
  const std::size_t rows = a.size();
  int r = 0;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != static_cast<std::size_t>(r)) {
      std::swap(a[pivot], a[static_cast<std::size_t>(r)]);
      if (sign) *sign = -*sign;
    }
    auto& prow = a[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || a[i][c] == 0) continue;
      if (!reduce_above && i < static_cast<std::size_t>(r)) continue;
      const Rational f = a[i][c] / prow[c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * prow[j];
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational determinant(QMatrix a) {
  const std::size_t n = a.size();
  int sign = 1;
  if (eliminate(a, n, &sign, false) < static_cast<int>(n)) return 0;
  Rational d = sign;
  for (std::size_t i = 0; i < n; ++i) d *= a[i][i];
  return d;
}

int rank(QMatrix a) {
  if (a.empty()) return 0;
  return eliminate(a, a[0].size(), nullptr, false);
}

QMatrix inverse(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  if (eliminate(aug, n, nullptr, true) < static_cast<int>(n)) throw std::domain_error("singular matrix");
  QMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j] / aug[i][i];
  return out;
}

}  // namespace ffd::detail
