#include <algorithm>
#include <stdexcept>

#include "ffd/toric.hpp"
#include "linalg.hpp"

namespace ffd {

int LatticePolytope::affine_dimension() const {
  if (vertices.empty()) return -1;
  detail::QMatrix diffs;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    std::vector<Rational> d(vertices[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = vertices[i][j] - vertices[0][j];
    diffs.push_back(std::move(d));
  }
  return detail::rank(diffs);
}

LatticePolytope invariant_divisor_polytope(const Fan& fan, std::span<const Rational> a) {
  if (a.size() != fan.rays.size()) throw std::invalid_argument("need one coefficient per ray");
  const auto n = static_cast<std::size_t>(fan.dim);
  const std::size_t k = fan.rays.size();
  auto feasible = [&](const std::vector<Rational>& m) {
    for (std::size_t r = 0; r < k; ++r) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[j] * fan.rays[r][j];
      if (s < -a[r]) return false;
    }
    return true;
  };

  // Vertices are the feasible points where n independent constraints are tight.
  LatticePolytope out;
  out.dim = fan.dim;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (k >= n) {
    detail::QMatrix A(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A[i][j] = fan.rays[pick[i]][j];
    if (detail::determinant(A) != 0) {
      const detail::QMatrix inv = detail::inverse(A);
      std::vector<Rational> m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i] -= inv[i][j] * a[pick[j]];
      if (feasible(m)) out.vertices.push_back(std::move(m));
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == k - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

bool is_big(const LatticePolytope& polytope) { return polytope.affine_dimension() == polytope.dim; }

}  // namespace ffd
