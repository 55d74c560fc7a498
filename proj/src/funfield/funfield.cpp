#include "ffd/funfield.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffd/factor.hpp"

namespace ffd {

namespace {

void require_nonzero(const RatFun& f) {
  if (f.is_zero()) throw std::domain_error("valuation of zero undefined");
}

// Removes every finite place of S from p. A conjugacy class of S that shares
// a proper factor with p cannot be handled with rational coefficients.
UniPoly strip_places(UniPoly p, const PlaceSet& S) {
  for (const auto& place : S) {
    if (place.is_infinity() || p.is_constant()) continue;
    const UniPoly& q = place.poly();
    multiplicity(q, p, &p);
    if (q.degree() >= 2 && !p.is_constant() && !gcd(q, p).is_constant())
      throw std::invalid_argument("place set incompatible with coefficient field");
  }
  return p;
}

int infinity_order(const RatFun& f) { return f.den().degree() - f.num().degree(); }

struct CountParts {
  std::vector<std::pair<UniPoly, int>> parts;
  int infinity = 0;  // multiplicity at infinity when counted, else 0
};

CountParts count_parts(const RatFun& f, const PlaceSet& S, CountMode mode) {
  require_nonzero(f);
  const UniPoly& poly = mode == CountMode::Zeros ? f.num() : f.den();
  CountParts out;
  const UniPoly rest = strip_places(poly, S);
  if (!rest.is_constant()) out.parts = squarefree_decomposition(rest);
  if (!S.contains_infinity()) {
    const int v = infinity_order(f);
    out.infinity = mode == CountMode::Zeros ? std::max(0, v) : std::max(0, -v);
  }
  return out;
}

long truncated_sum(const CountParts& cp, Truncation m) {
  long total = 0;
  for (const auto& [part, e] : cp.parts) total += (m ? std::min<long>(*m, e) : e) * part.degree();
  total += m ? std::min<long>(*m, cp.infinity) : cp.infinity;
  return total;
}

void check_truncation(Truncation m) {
  if (m && *m < 1) throw std::invalid_argument("truncation level must be a positive integer");
}

}  // namespace

int order_at(const RatFun& f, const Place& p) {
  require_nonzero(f);
  if (p.is_infinity()) return infinity_order(f);
  return multiplicity(p.poly(), f.num()) - multiplicity(p.poly(), f.den());
}

long height(const RatFun& f) {
  require_nonzero(f);
  return std::max(f.num().degree(), f.den().degree());
}

CountingReport counting(const RatFun& f, const PlaceSet& S, CountMode mode, Truncation m) {
  check_truncation(m);
  const CountParts cp = count_parts(f, S, mode);
  CountingReport report;
  report.total = truncated_sum(cp, std::nullopt);
  report.truncated[1] = truncated_sum(cp, 1);
  if (m) report.truncated[*m] = truncated_sum(cp, m);
  for (const auto& [part, e] : cp.parts)
    for (const auto& [irr, mult] : factor(part).factors) report.per_place.emplace_back(Place::from_irreducible(irr), e);
  if (cp.infinity > 0) report.per_place.emplace_back(Place::infinity(), cp.infinity);
  std::sort(report.per_place.begin(), report.per_place.end());
  return report;
}

long count(const RatFun& f, const PlaceSet& S, CountMode mode, Truncation m) {
  check_truncation(m);
  return truncated_sum(count_parts(f, S, mode), m);
}

long projective_height(std::span<const RatFun> fs) {
  std::vector<RatFun> nonzero;
  for (const auto& f : fs)
    if (!f.is_zero()) nonzero.push_back(f);
  if (nonzero.empty()) throw std::domain_error("projective height of the zero tuple");
  const LocalTable table = local_table(nonzero, PlaceSet());
  long total = 0;
  for (std::size_t i = 0; i < table.loci.size(); ++i) {
    int lowest = **std::min_element(table.orders[i].begin(), table.orders[i].end());
    total -= static_cast<long>(lowest) * table.loci[i].weight;
  }
  return total;
}

long chi_plus(const PlaceSet& S) { return std::max<long>(0, 2 * PlaceSet::genus() - 2 + S.geometric_size()); }

bool is_s_unit(const RatFun& f, const PlaceSet& S) {
  require_nonzero(f);
  if (!strip_places(f.num(), S).is_constant() || !strip_places(f.den(), S).is_constant()) return false;
  return S.contains_infinity() || infinity_order(f) == 0;
}

bool is_s_integer(const RatFun& f, const PlaceSet& S) {
  require_nonzero(f);
  strip_places(f.num(), S);
  if (!strip_places(f.den(), S).is_constant()) return false;
  return S.contains_infinity() || infinity_order(f) >= 0;
}

PlaceSet enlarge_places(std::span<const RatFun> gs, const PlaceSet& S) {
  PlaceSet out = S;
  for (const auto& g : gs) {
    require_nonzero(g);
    for (const UniPoly* poly : {&g.num(), &g.den()}) {
      if (poly->is_constant()) continue;
      for (const auto& [irr, e] : factor(*poly).factors) out.insert(Place::from_irreducible(irr));
    }
    if (infinity_order(g) != 0) out.insert(Place::infinity());
  }
  return out;
}

std::vector<std::pair<Place, int>> divisor(const RatFun& f) {
  require_nonzero(f);
  std::vector<std::pair<Place, int>> out;
  if (!f.num().is_constant())
    for (const auto& [irr, e] : factor(f.num()).factors) out.emplace_back(Place::from_irreducible(irr), e);
  if (!f.den().is_constant())
    for (const auto& [irr, e] : factor(f.den()).factors) out.emplace_back(Place::from_irreducible(irr), -e);
  if (const int v = infinity_order(f); v != 0) out.emplace_back(Place::infinity(), v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UniPoly> coprime_basis(std::span<const UniPoly> inputs) {
  // Refining by squarefree-decomposition parts keeps the multiplicity of
  // every input constant across the roots of each basis element.
  std::vector<UniPoly> parts;
  for (const auto& input : inputs) {
    if (input.is_zero() || input.is_constant()) continue;
    for (auto& [part, e] : squarefree_decomposition(input)) parts.push_back(std::move(part));
  }
  std::vector<UniPoly> basis;
  for (UniPoly a : parts) {
    for (std::size_t i = 0; i < basis.size() && !a.is_constant();) {
      const UniPoly g = gcd(a, basis[i]);
      if (g.is_constant()) {
        ++i;
        continue;
      }
      const UniPoly rest = exact_div(basis[i], g);
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      if (!rest.is_constant()) basis.push_back(rest.monic());
      basis.push_back(g);
      a = exact_div(a, g);
    }
    if (!a.is_constant()) basis.push_back(a.monic());
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<Place> Locus::places() const {
  if (place) return {*place};
  std::vector<Place> out;
  for (const auto& [irr, e] : factor(poly).factors) out.push_back(Place::from_irreducible(irr));
  return out;
}

LocalTable local_table(std::span<const RatFun> fs, const PlaceSet& S, std::span<const UniPoly> extra) {
  struct Stripped {
    UniPoly num, den;
  };
  std::vector<Stripped> stripped(fs.size());
  std::vector<UniPoly> inputs;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (fs[j].is_zero()) continue;
    stripped[j] = {strip_places(fs[j].num(), S), strip_places(fs[j].den(), S)};
    inputs.push_back(stripped[j].num);
    inputs.push_back(stripped[j].den);
  }
  for (const auto& e : extra)
    if (!e.is_zero()) inputs.push_back(strip_places(e, S));

  LocalTable table;
  auto add_row = [&](Locus locus, auto&& order_of) {
    std::vector<std::optional<int>> row(fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (!fs[j].is_zero()) row[j] = order_of(j);
    table.loci.push_back(std::move(locus));
    table.orders.push_back(std::move(row));
  };

  for (const auto& place : S) {
    if (place.is_infinity()) continue;
    add_row(Locus{place, place.poly(), place.degree(), true},
            [&](std::size_t j) { return order_at(fs[j], place); });
  }
  for (const auto& b : coprime_basis(inputs)) {
    std::optional<Place> place;
    if (b.degree() == 1) place = Place::from_irreducible(b);
    add_row(Locus{place, b, b.degree(), false}, [&](std::size_t j) {
      return multiplicity(b, stripped[j].num) - multiplicity(b, stripped[j].den);
    });
  }
  add_row(Locus{Place::infinity(), UniPoly(), 1, S.contains_infinity()},
          [&](std::size_t j) { return infinity_order(fs[j]); });
  return table;
}

}  // namespace ffd
