#include <algorithm>
#include <stdexcept>

#include "chart.hpp"
#include "ffd/toric.hpp"

namespace ffd {

namespace {

void require_point(const Fan& fan, const TorusPoint& u) {
  if (u.size() != static_cast<std::size_t>(fan.dim))
    throw std::invalid_argument("torus point has " + std::to_string(u.size()) + " coordinates, fan has dimension " +
                                std::to_string(fan.dim));
  for (const auto& x : u)
    if (x.is_zero()) throw std::invalid_argument("torus point coordinates must be nonzero");
}

std::vector<long> valuations(const TorusPoint& u, const Place& p) {
  std::vector<long> w;
  for (const auto& x : u) w.push_back(order_at(x, p));
  return w;
}

RatFun monomial(const TorusPoint& u, const IntVector& m) {
  RatFun out(Rational(1));
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] != 0) out *= pow(u[j], m[j]);
  return out;
}

long ray_coefficient(const Fan& fan, const detail::Atlas& atlas, std::size_t ray, std::span<const long> w) {
  const std::size_t c = atlas.integral_chart(w);
  const auto& gens = fan.cones[c];
  const auto it = std::find(gens.begin(), gens.end(), ray);
  if (it == gens.end()) return 0;
  return detail::pairing(atlas.duals[c][static_cast<std::size_t>(it - gens.begin())], w);
}

void check_truncation(Truncation m) {
  if (m && *m < 1) throw std::invalid_argument("truncation level must be a positive integer");
}

[[noreturn]] void on_support() { throw std::domain_error("Weil function undefined on support"); }

}  // namespace

TorusPoint torus_point(std::span<const RatFun> homogeneous) {
  if (homogeneous.size() < 2) throw std::invalid_argument("homogeneous point needs at least two coordinates");
  for (const auto& x : homogeneous)
    if (x.is_zero()) throw std::invalid_argument("point is not in the torus: a homogeneous coordinate vanishes");
  TorusPoint u;
  for (std::size_t i = 1; i < homogeneous.size(); ++i) u.push_back(homogeneous[i] / homogeneous[0]);
  return u;
}

std::vector<RatFun> chart_coordinates(const Fan& fan, std::size_t cone, const TorusPoint& u) {
  require_point(fan, u);
  std::vector<RatFun> out;
  for (const auto& m : detail::dual_basis(fan, cone)) out.push_back(monomial(u, m));
  return out;
}

long boundary_weil(const Fan& fan, std::size_t ray, const TorusPoint& u, const Place& p) {
  if (ray >= fan.rays.size()) throw std::invalid_argument("ray " + std::to_string(ray) + " is not in the fan");
  require_point(fan, u);
  const detail::Atlas atlas(fan);
  return ray_coefficient(fan, atlas, ray, valuations(u, p));
}

HypersurfaceDivisor HypersurfaceDivisor::homogeneous(MPoly F) {
  if (F.nvars() < 2) throw std::invalid_argument("homogeneous form needs at least two variables");
  if (F.is_zero() || F.total_degree() < 1 || !F.is_homogeneous())
    throw std::invalid_argument("divisor form must be a nonconstant homogeneous polynomial");
  HypersurfaceDivisor D;
  D.form_ = std::move(F);
  return D;
}

HypersurfaceDivisor HypersurfaceDivisor::per_chart(std::map<std::size_t, MPoly> charts) {
  HypersurfaceDivisor D;
  for (auto& [cone, f] : charts) {
    if (f.is_zero()) throw std::invalid_argument("chart polynomial must be nonzero");
    const RatFun c = f.constant_term();
    D.charts_.emplace(cone, c.is_zero() ? std::move(f) : f * c.inverse());
  }
  return D;
}

MPoly HypersurfaceDivisor::chart_polynomial(const Fan& fan, std::size_t cone) const {
  if (cone >= fan.cones.size()) throw std::invalid_argument("cone " + std::to_string(cone) + " is not a maximal cone");
  const auto n = static_cast<std::size_t>(fan.dim);
  if (!form_) {
    const auto it = charts_.find(cone);
    if (it == charts_.end()) throw std::invalid_argument("no chart polynomial for cone " + std::to_string(cone));
    if (it->second.nvars() != n) throw std::invalid_argument("chart polynomial has the wrong number of variables");
    return it->second;
  }
  if (form_->nvars() != n + 1 || fan.rays != projective_space(fan.dim).rays)
    throw std::invalid_argument("a homogeneous divisor needs the built-in P^n fan");
  // Ray r < n is the divisor x_{r+1} = 0 and ray n is x_0 = 0.
  auto variable_of = [n](std::size_t ray) { return ray < n ? ray + 1 : 0; };
  const auto& gens = fan.cones[cone];
  MPoly f(n);
  for (const auto& [e, c] : form_->terms()) {
    ExponentVector y(n);
    for (std::size_t l = 0; l < n; ++l) y[l] = e[variable_of(gens[l])];
    f.add_term(y, c);
  }
  return f;
}

WeilValue hypersurface_weil(const Fan& fan, const HypersurfaceDivisor& D, const TorusPoint& u, const Place& p) {
  require_point(fan, u);
  const detail::Atlas atlas(fan);
  WeilValue out;
  out.cone = atlas.integral_chart(valuations(u, p));
  const MPoly f = D.chart_polynomial(fan, out.cone);
  const std::vector<RatFun> coords = chart_coordinates(fan, out.cone, u);
  const RatFun value = evaluate(f, coords);
  if (value.is_zero()) on_support();
  out.value = std::max(0, order_at(value, p));
  out.ambiguity = std::max(0, -gauss_order(f, p));
  return out;
}

WeilProfile weil_profile(const Fan& fan, std::span<const ToricComponent> components, const TorusPoint& u,
                         const PlaceSet& S) {
  require_point(fan, u);
  const detail::Atlas atlas(fan);
  const std::size_t n = u.size();
  for (const auto& comp : components)
    if (const auto* ray = std::get_if<std::size_t>(&comp); ray && *ray >= fan.rays.size())
      throw std::invalid_argument("ray " + std::to_string(*ray) + " is not in the fan");

  // Local data: the coordinates, then every chart value of every hypersurface.
  std::vector<RatFun> fs(u.begin(), u.end());
  std::vector<std::size_t> base(components.size(), 0);
  std::vector<std::vector<RatFun>> coords;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) coords.push_back(chart_coordinates(fan, c, u));
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto* D = std::get_if<HypersurfaceDivisor>(&components[k]);
    if (!D) continue;
    base[k] = fs.size();
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
      RatFun value = evaluate(D->chart_polynomial(fan, c), coords[c]);
      if (value.is_zero()) on_support();
      fs.push_back(std::move(value));
    }
  }

  const LocalTable table = local_table(fs, S);
  WeilProfile out;
  out.loci = table.loci;
  for (const auto& row : table.orders) {
    std::vector<long> w;
    for (std::size_t j = 0; j < n; ++j) w.push_back(*row[j]);
    const std::size_t chart = atlas.integral_chart(w);
    std::vector<long> values;
    for (std::size_t k = 0; k < components.size(); ++k) {
      if (const auto* ray = std::get_if<std::size_t>(&components[k]))
        values.push_back(ray_coefficient(fan, atlas, *ray, w));
      else
        values.push_back(std::max(0, *row[base[k] + chart]));
    }
    out.values.push_back(std::move(values));
  }
  return out;
}

DivisorCounting divisor_counting(const Fan& fan, const ToricComponent& D, const TorusPoint& u, const PlaceSet& S,
                                 Truncation m) {
  check_truncation(m);
  const WeilProfile profile = weil_profile(fan, std::span<const ToricComponent>(&D, 1), u, S);
  DivisorCounting out;
  for (std::size_t i = 0; i < profile.loci.size(); ++i) {
    const long lambda = profile.values[i][0];
    if (lambda == 0) continue;
    const Locus& locus = profile.loci[i];
    if (locus.in_s) {
      out.m_S += lambda * locus.weight;
    } else {
      out.N_S += lambda * locus.weight;
      out.N_S_truncated += (m ? std::min(lambda, *m) : lambda) * locus.weight;
    }
    out.contributions.emplace_back(locus, lambda);
  }
  out.h = out.m_S + out.N_S;
  return out;
}

std::optional<long> campana_multiplicity(const Rational& epsilon) {
  if (epsilon == 1) return std::nullopt;
  const Rational gap = 1 - epsilon;
  if (gap <= 0 || gap.get_num() != 1 || gap.get_den() < 2)
    throw std::invalid_argument("orbifold weight " + format_rational(epsilon) + " is not 1 or 1 - 1/m with m >= 2");
  return gap.get_den().get_si();
}

CampanaVerdict is_campana_integral(const Fan& fan, std::span<const OrbifoldComponent> delta, const TorusPoint& u,
                                   const PlaceSet& S) {
  std::vector<std::optional<long>> mult;
  std::vector<ToricComponent> comps;
  for (const auto& c : delta) {
    mult.push_back(campana_multiplicity(c.epsilon));
    comps.push_back(c.divisor);
  }
  const WeilProfile profile = weil_profile(fan, comps, u, S);
  CampanaVerdict out;
  for (std::size_t i = 0; i < profile.loci.size(); ++i) {
    if (profile.loci[i].in_s) continue;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const long lambda = profile.values[i][k];
      const bool bad = mult[k] ? (lambda > 0 && lambda < *mult[k]) : lambda > 0;
      if (!bad) continue;
      for (const auto& place : profile.loci[i].places()) out.violations.push_back({k, place, lambda});
    }
  }
  std::sort(out.violations.begin(), out.violations.end(), [](const auto& a, const auto& b) {
    return a.component != b.component ? a.component < b.component : a.place < b.place;
  });
  out.integral = out.violations.empty();
  return out;
}

bool general_position_check(const HypersurfaceDivisor& D, const Fan& fan) {
  for (std::size_t c = 0; c < fan.cones.size(); ++c)
    if (D.chart_polynomial(fan, c).constant_term().is_zero()) return false;
  return true;
}

}  // namespace ffd
