#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ffd/mpoly.hpp"

namespace ffd {

using IntVector = std::vector<long>;

/// A simplicial fan in Z^n given by its rays and maximal cones (ray indices).
struct Fan {
  std::string name;
  int dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
};

/// P^n: ray i = e_{i+1} for i < n (the divisor x_{i+1} = 0) and ray n = -(e_1 + ... + e_n)
/// (the divisor x_0 = 0). Cone k omits the ray of x_k, so it is the chart x_k != 0.
Fan projective_space(int n);
/// Hirzebruch surface F_a: rays e1, e2, -e1 + a e2, -e2.
Fan hirzebruch(int a);
Fan product(const Fan& a, const Fan& b);
/// "P1".."P4", "F0".."F3" and 'x'-separated products such as "P1xP1".
Fan builtin_fan(std::string_view name);

/// JSON document {"dim": n, "rays": [[...], ...], "cones": [[...], ...]}.
Fan fan_from_json(std::string_view text);
std::string fan_to_json(const Fan& fan);

struct FanVerdict {
  bool smooth = false;
  bool complete = false;
  /// Admissibility holds for smooth complete surfaces; in higher dimension
  /// it is recorded as an assumption.
  bool admissible = false;
  bool admissibility_assumed = false;
  std::vector<std::string> issues;
};

/// Throws std::invalid_argument for a zero ray or inconsistent dimensions.
FanVerdict validate_fan(const Fan& fan);

/// Point of the torus G_m^n(K): n nonzero rational functions.
using TorusPoint = std::vector<RatFun>;

/// [f_0 : ... : f_n] with all f_i nonzero, as (f_1/f_0, ..., f_n/f_0).
TorusPoint torus_point(std::span<const RatFun> homogeneous);

/// (u^{m_1}, ..., u^{m_n}) for the dual basis m of the generators of cone `cone`.
std::vector<RatFun> chart_coordinates(const Fan& fan, std::size_t cone, const TorusPoint& u);

/// Coefficient of ray `ray` in the decomposition of (v_p(u_i))_i over a cone containing it.
long boundary_weil(const Fan& fan, std::size_t ray, const TorusPoint& u, const Place& p);

/// A hypersurface given by a homogeneous form on the built-in P^n fan or by
/// one polynomial per maximal cone.
class HypersurfaceDivisor {
 public:
  /// F homogeneous in x_0, ..., x_n.
  static HypersurfaceDivisor homogeneous(MPoly F);
  /// Chart polynomials keyed by cone index; a nonzero constant term is scaled to 1.
  static HypersurfaceDivisor per_chart(std::map<std::size_t, MPoly> charts);

  bool is_homogeneous() const { return form_.has_value(); }
  const MPoly& form() const { return *form_; }
  const std::map<std::size_t, MPoly>& charts() const { return charts_; }

  /// f_sigma on the chart of `cone`; a homogeneous form is dehomogenized.
  MPoly chart_polynomial(const Fan& fan, std::size_t cone) const;

 private:
  std::optional<MPoly> form_;
  std::map<std::size_t, MPoly> charts_;
};

struct WeilValue {
  long value = 0;
  /// Upper bound -v_p(f_sigma) of the constant separating charts; 0 for constant coefficients.
  long ambiguity = 0;
  std::size_t cone = 0;
};

/// v_p^0(f_sigma(i_sigma(u))) in the first cone whose chart coordinates are
/// p-integral. Throws std::domain_error("Weil function undefined on support").
WeilValue hypersurface_weil(const Fan& fan, const HypersurfaceDivisor& D, const TorusPoint& u, const Place& p);

/// A boundary divisor (ray index) or a hypersurface.
using ToricComponent = std::variant<std::size_t, HypersurfaceDivisor>;

struct DivisorCounting {
  long m_S = 0;
  long N_S = 0;
  long N_S_truncated = 0;
  long h = 0;
  /// Loci with nonzero local value, with that value.
  std::vector<std::pair<Locus, long>> contributions;
};

DivisorCounting divisor_counting(const Fan& fan, const ToricComponent& D, const TorusPoint& u, const PlaceSet& S,
                                 Truncation m);

/// Local values of several components at every place where any is nonzero.
struct WeilProfile {
  std::vector<Locus> loci;
  std::vector<std::vector<long>> values;  // values[locus][component]
};
WeilProfile weil_profile(const Fan& fan, std::span<const ToricComponent> components, const TorusPoint& u,
                         const PlaceSet& S);

struct OrbifoldComponent {
  ToricComponent divisor;
  Rational epsilon;  // 1 or 1 - 1/m with m >= 2
  std::string label;
};

/// m = 1/(1 - epsilon); std::nullopt for epsilon = 1. Throws on an illegal weight.
std::optional<long> campana_multiplicity(const Rational& epsilon);

struct CampanaViolation {
  std::size_t component = 0;
  Place place;
  long lambda = 0;
};

struct CampanaVerdict {
  bool integral = true;
  std::vector<CampanaViolation> violations;
};

CampanaVerdict is_campana_integral(const Fan& fan, std::span<const OrbifoldComponent> delta, const TorusPoint& u,
                                   const PlaceSet& S);

/// {m in Q^n : <m, rho> >= -a_rho} through its vertices.
struct LatticePolytope {
  int dim = 0;
  std::vector<std::vector<Rational>> vertices;
  /// -1 when empty.
  int affine_dimension() const;
};

LatticePolytope invariant_divisor_polytope(const Fan& fan, std::span<const Rational> a);
bool is_big(const LatticePolytope& polytope);

/// True iff every chart polynomial has a nonzero constant term.
bool general_position_check(const HypersurfaceDivisor& D, const Fan& fan);

}  // namespace ffd
