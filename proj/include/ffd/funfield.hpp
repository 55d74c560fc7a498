#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ffd/place.hpp"
#include "ffd/ratfun.hpp"

namespace ffd {

/// v_p(f). Throws std::domain_error("valuation of zero undefined") for f = 0.
int order_at(const RatFun& f, const Place& p);

/// h(f) = max(deg num, deg den); zero is rejected.
long height(const RatFun& f);

enum class CountMode { Zeros, Poles };

/// Truncation level m >= 1; std::nullopt means unbounded.
using Truncation = std::optional<long>;

struct CountingReport {
  long total = 0;
  /// Always contains level 1; also the requested level when bounded.
  std::map<long, long> truncated;
  /// Places outside S with their (positive) local multiplicity.
  std::vector<std::pair<Place, int>> per_place;
};

/// N_{0,S} / N_{inf,S} with truncations. Throws std::invalid_argument
/// ("place set incompatible with coefficient field") if a conjugacy class in S
/// properly splits a factor of f.
CountingReport counting(const RatFun& f, const PlaceSet& S, CountMode mode, Truncation m);

/// Truncated count only (no place enumeration); m = nullopt gives the total.
long count(const RatFun& f, const PlaceSet& S, CountMode mode, Truncation m);

/// h(f_0, ..., f_k) = sum_p -min_i v_p(f_i) deg p over the nonzero entries.
long projective_height(std::span<const RatFun> fs);

/// max{0, 2g - 2 + |S|} with g = 0.
long chi_plus(const PlaceSet& S);

bool is_s_unit(const RatFun& f, const PlaceSet& S);
bool is_s_integer(const RatFun& f, const PlaceSet& S);

/// S together with every place where some g_i has a zero or a pole.
PlaceSet enlarge_places(std::span<const RatFun> gs, const PlaceSet& S);

/// All places with v_p(f) != 0, infinity included, in canonical order.
std::vector<std::pair<Place, int>> divisor(const RatFun& f);

/// Monic, squarefree, pairwise coprime polynomials such that every nonzero
/// input is a constant times a product of powers of them.
std::vector<UniPoly> coprime_basis(std::span<const UniPoly> inputs);

/// A set of geometric points sharing all valuations of a family of functions:
/// either a single known place, or the roots of a squarefree polynomial that
/// is coprime to every place of S. `weight` is the number of geometric points.
struct Locus {
  std::optional<Place> place;
  UniPoly poly;  // empty for infinity
  int weight = 1;
  bool in_s = false;
  /// Actual places (factors) of a composite locus; computed on demand.
  std::vector<Place> places() const;
};

/// Orders of a family of functions at every point where any of them has a
/// zero or a pole, plus all places of S and infinity. orders[i][j] is the
/// order of fs[j] at loci[i]; zero functions get std::nullopt (+infinity).
struct LocalTable {
  std::vector<Locus> loci;
  std::vector<std::vector<std::optional<int>>> orders;
};

/// Extra polynomials only refine the loci (their roots become separate loci).
LocalTable local_table(std::span<const RatFun> fs, const PlaceSet& S, std::span<const UniPoly> extra = {});

}  // namespace ffd
