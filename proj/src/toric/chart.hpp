#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ffd/toric.hpp"

namespace ffd::detail {

/// Rows m_k with <m_k, r_l> = delta_kl for the generators r_l of the cone.
std::vector<IntVector> dual_basis(const Fan& fan, std::size_t cone);
long pairing(const IntVector& m, std::span<const long> w);
/// Dual bases of every maximal cone of a smooth fan.
struct Atlas {
  explicit Atlas(const Fan& fan);
  std::vector<std::vector<IntVector>> duals;
  /// First cone in stored order containing w.
  std::optional<std::size_t> containing(std::span<const long> w) const;
  /// First cone in stored order whose chart coordinates have valuations >= 0.
  std::size_t integral_chart(std::span<const long> w) const;
};

}  // namespace ffd::detail
