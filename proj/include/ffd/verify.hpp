#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffd/toric.hpp"

namespace ffd {

enum class Status { Holds, Fails, Degenerate, PreconditionFailed, Unchecked };
std::string to_string(Status s);

struct Precondition {
  std::string name;
  bool satisfied = true;
  std::string witness;
};

/// Uniform verdict: holds iff lhs <= rhs, slack = rhs - lhs. `asserted` is
/// false for clauses that are only reported (no theorem forces them).
struct InequalityReport {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  Rational slack;
  bool asserted = true;
  std::vector<Precondition> preconditions;
  std::vector<std::string> notes;
  Status status = Status::Unchecked;

  void set_sides(const Rational& l, const Rational& r);
  bool preconditions_ok() const;
};

/// Brownawell-Masser: sum f_i = 1 (n + 1 >= 2 nonzero entries, else
/// std::invalid_argument). A vanishing proper subsum makes the verdict Degenerate.
InequalityReport brownawell_masser(std::span<const RatFun> fs, const PlaceSet& S);

struct BmConstants {
  Integer B;
  Integer c1_tilde;
  Integer c2_tilde;
};
/// B = binomial(n + d, n), c1~ = B(B + 1)/2, c2~ = 2(B - 1)c1~; n, d >= 1.
BmConstants bm_constants(int n, int d);

/// sum_{p in S} v_p^0(F(g)) deg p <= c1~ chi_S^+ + c2~ h(F), with F scaled so F(0) = 1.
InequalityReport proximity_bound(const MPoly& F, std::span<const RatFun> g, const PlaceSet& S);

struct AbcParameters {
  Rational epsilon = Rational(1, 3);
  long ell = 6;
  long c0 = 100;
};

struct TrichotomyReport {
  bool hypothesis_ok = false;
  /// l (N^(1)_{0,S}(g_i) + N^(1)_{inf,S}(g_i)) and h(g_i) per coordinate.
  std::vector<std::pair<long, long>> hypothesis_terms;
  bool height_bounded = false;
  long max_height = 0;
  Rational height_bound;
  InequalityReport clause_a;
  std::optional<InequalityReport> clause_b;
  std::vector<std::string> notes;
};

/// Reports every clause with exact sides; never asserts the disjunction.
/// Throws std::invalid_argument when G has a monomial factor, a repeated
/// factor, vanishes at the origin or is constant, or when some g_i is zero.
TrichotomyReport abc_trichotomy(const MPoly& G, std::span<const RatFun> g, const PlaceSet& S,
                                const AbcParameters& params);

struct TruncationGapReport {
  CampanaVerdict integrality;
  long N1 = 0;
  long N = 0;
  long h = 0;
  InequalityReport half_truncation;  // N^(1)_{A,S} <= N_{A,S} / 2
  InequalityReport lower_bound;      // (1 - eps) h_A <= N^(1)_{A,S}, reported only
};

TruncationGapReport campana_truncation_gap(const Fan& fan, const HypersurfaceDivisor& A,
                                           std::span<const OrbifoldComponent> delta, const TorusPoint& u,
                                           const PlaceSet& S, const Rational& epsilon);

struct PerfectPower {
  bool is_power = false;
  /// std::nullopt for a nonzero constant (a power of every order).
  std::optional<long> exponent;
  UniPoly base;
  Rational unit;
};
/// f = unit * base^exponent with the largest exponent >= 2 possible.
/// Throws std::invalid_argument for zero or a nonconstant denominator.
PerfectPower perfect_power(const RatFun& f);

// ---- seeded generation ----

/// Independent per-instance seed (splitmix64 of seed and index).
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

struct BmInstance {
  std::vector<RatFun> fs;
  PlaceSet S;
  int resamples = 0;
};
BmInstance bm_instance(std::uint64_t seed, int n, int max_degree, int max_s = 6);

/// n S-units (supported on S); exponents bounded by max_exponent.
std::vector<RatFun> s_unit_tuple(std::uint64_t seed, const PlaceSet& S, int n, int max_exponent = 4);

struct ProximityInstance {
  MPoly F;
  std::vector<RatFun> g;
  PlaceSet S;
  int resamples = 0;
};
ProximityInstance proximity_instance(std::uint64_t seed, int n, int d);

struct CampanaInstance {
  std::vector<RatFun> homogeneous;  // [x_0 : x_1 : x_2]
  TorusPoint u;
  int resamples = 0;
};
/// Without a hyperplane: [1 : f1^l : f2^l]. With coefficients (a0, a1, a2):
/// [1 : f1^l : x2] where a0 + a1 f1^l + a2 x2 = w^l.
CampanaInstance campana_point(std::uint64_t seed, long ell, int max_degree,
                              std::optional<std::vector<Rational>> hyperplane = std::nullopt);

struct PowerTuple {
  std::vector<UniPoly> f;  // coprime triple
  std::vector<long> n;     // exponents >= m
};
PowerTuple power_tuple(std::uint64_t seed, int max_degree, long m, long window);

struct ScanHit {
  std::vector<UniPoly> f;
  std::vector<long> n;
  UniPoly value;
  PerfectPower power;
  bool degenerate = false;
};

struct ScanReport {
  bool squarefree = false;
  bool nonvanishing_at_coordinate_points = false;
  long examined = 0;
  long skipped_not_coprime = 0;
  std::vector<ScanHit> hits;
  std::vector<std::string> notes;
};

/// F homogeneous in three variables with constant coefficients.
ScanReport perfect_power_scan(const MPoly& F, int max_degree, long m, long window, long samples, std::uint64_t seed);

}  // namespace ffd
