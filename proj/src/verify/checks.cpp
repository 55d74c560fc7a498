#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ffd/verify.hpp"

namespace ffd {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Fails:
      return "fails";
    case Status::Degenerate:
      return "degenerate";
    case Status::PreconditionFailed:
      return "precondition_failed";
    case Status::Unchecked:
      return "unchecked";
  }
  return "unchecked";
}

void InequalityReport::set_sides(const Rational& l, const Rational& r) {
  lhs = l;
  rhs = r;
  slack = r - l;
  holds = l <= r;
}

bool InequalityReport::preconditions_ok() const {
  return std::all_of(preconditions.begin(), preconditions.end(), [](const Precondition& p) { return p.satisfied; });
}

namespace {

Status verdict(bool holds) { return holds ? Status::Holds : Status::Fails; }

std::string join_terms(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::vector<std::string> monomial_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string render_monomial(const ExponentVector& e) {
  MPoly m(e.size());
  m.add_term(e, RatFun(Rational(1)));
  return m.to_string(monomial_names(e.size()));
}

}  // namespace

InequalityReport brownawell_masser(std::span<const RatFun> fs, const PlaceSet& S) {
  if (fs.size() < 2) throw std::invalid_argument("need at least two functions");
  RatFun sum;
  for (const auto& f : fs) {
    if (f.is_zero()) throw std::invalid_argument("entries must be nonzero");
    sum += f;
  }
  if (sum != RatFun(Rational(1))) throw std::invalid_argument("entries do not sum to 1 (sum is " + sum.to_string() + ")");
  const long n = static_cast<long>(fs.size()) - 1;

  InequalityReport r;
  r.name = "brownawell_masser";
  Precondition pre{"no vanishing proper subsum", true, ""};
  MPoly linear(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) linear += MPoly::variable(fs.size(), i);
  bool checked = true;
  try {
    const SubsumReport subs = vanishing_subsums(linear, fs);
    std::vector<std::string> witnesses;
    for (const auto& w : subs.witnesses) {
      std::vector<std::string> names;
      for (const auto& e : w)
        names.push_back("f" + std::to_string(std::find(e.begin(), e.end(), 1u) - e.begin()));
      std::reverse(names.begin(), names.end());
      witnesses.push_back(join_terms(names, " + ") + " = 0");
    }
    pre.satisfied = witnesses.empty();
    pre.witness = join_terms(witnesses, "; ");
  } catch (const SubsumInfeasible& e) {
    checked = false;
    r.notes.emplace_back(e.what());
  }
  r.preconditions.push_back(pre);

  long lhs = 0, rhs = 0;
  for (const auto& f : fs) {
    lhs = std::max(lhs, height(f));
    rhs += count(f, S, CountMode::Zeros, n) + count(f, S, CountMode::Poles, n);
  }
  rhs += n * (n + 1) / 2 * chi_plus(S);
  r.set_sides(lhs, rhs);
  if (!checked) r.status = Status::Unchecked;
  else if (!pre.satisfied) r.status = Status::Degenerate;
  else r.status = verdict(r.holds);
  if (r.status == Status::Degenerate) r.notes.emplace_back("a proper subsum vanishes; the inequality is not asserted");
  return r;
}

BmConstants bm_constants(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("bm_constants needs n >= 1 and d >= 1");
  BmConstants c;
  mpz_bin_uiui(c.B.get_mpz_t(), static_cast<unsigned long>(n + d), static_cast<unsigned long>(n));
  c.c1_tilde = c.B * (c.B + 1) / 2;
  c.c2_tilde = 2 * (c.B - 1) * c.c1_tilde;
  return c;
}

InequalityReport proximity_bound(const MPoly& F, std::span<const RatFun> g, const PlaceSet& S) {
  if (F.is_zero()) throw std::invalid_argument("F must be nonzero");
  if (F.nvars() == 0) throw std::invalid_argument("F needs at least one variable");
  if (g.size() != F.nvars()) throw std::invalid_argument("arity mismatch: F has " + std::to_string(F.nvars()) +
                                                        " variables, got " + std::to_string(g.size()) + " values");
  InequalityReport r;
  r.name = "proximity_bound";
  const int d = F.total_degree();
  const auto n = static_cast<int>(F.nvars());
  r.preconditions.push_back({"F non-constant", d >= 1, "deg F = " + std::to_string(d)});
  const bool origin = !F.constant_term().is_zero();
  r.preconditions.push_back({"F(0) != 0", origin, origin ? "" : "F vanishes at the origin"});
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool unit = !g[i].is_zero() && is_s_unit(g[i], S);
    r.preconditions.push_back({"g" + std::to_string(i + 1) + " is an S-unit", unit, unit ? "" : g[i].to_string()});
  }
  const MPoly normalized = origin ? normalize_at_origin(F) : F;

  bool checked = true;
  Precondition offW{"g off W (no vanishing subsum)", true, ""};
  try {
    const SubsumReport subs = vanishing_subsums(normalized, g);
    if (subs.degenerate) {
      offW.satisfied = false;
      std::vector<std::string> terms;
      for (const auto& e : subs.witnesses.front()) terms.push_back(render_monomial(e));
      offW.witness = std::to_string(subs.witnesses.size()) + " vanishing subsum(s), first over {" +
                     join_terms(terms, ", ") + "}";
    }
  } catch (const SubsumInfeasible& e) {
    checked = false;
    r.notes.emplace_back(e.what());
  }

  const RatFun value = evaluate(normalized, g);
  long lhs = 0;
  if (!value.is_zero())
    for (const auto& p : S) lhs += std::max(0, order_at(value, p)) * static_cast<long>(p.degree());
  const BmConstants c = bm_constants(n, std::max(d, 1));
  const Integer rhs = c.c1_tilde * chi_plus(S) + c.c2_tilde * poly_heights(F).h;
  r.set_sides(lhs, Rational(rhs));
  r.notes.push_back("B = " + c.B.get_str() + ", c1~ = " + c.c1_tilde.get_str() + ", c2~ = " + c.c2_tilde.get_str());

  const bool pre_ok = r.preconditions_ok();
  r.preconditions.push_back(offW);
  if (!pre_ok) r.status = Status::PreconditionFailed;
  else if (!checked) r.status = Status::Unchecked;
  else if (!offW.satisfied) {
    r.status = Status::Degenerate;
    r.notes.emplace_back("g lies in W; the inequality is not asserted");
  } else {
    r.status = verdict(r.holds);
  }
  return r;
}

TrichotomyReport abc_trichotomy(const MPoly& G, std::span<const RatFun> g, const PlaceSet& S,
                                const AbcParameters& params) {
  if (params.epsilon <= 0 || params.epsilon > 1) throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (params.ell < 1 || params.c0 < 1) throw std::invalid_argument("l and c0 must be positive integers");
  if (G.is_zero()) throw std::invalid_argument("G must be nonzero");
  if (g.size() != G.nvars()) throw std::invalid_argument("arity mismatch");
  for (const auto& x : g)
    if (x.is_zero()) throw std::invalid_argument("all g_i must be nonzero");
  const DegreeProfile profile = degree_profile(G);
  std::vector<std::string> failed;
  if (profile.total_degree < 1) failed.emplace_back("G is constant");
  if (profile.has_monomial_factor) failed.emplace_back("G has a monomial factor");
  if (!profile.is_squarefree) failed.emplace_back("G has a repeated factor");
  if (!profile.nonzero_at_origin) failed.emplace_back("G vanishes at the origin");
  if (!failed.empty()) throw std::invalid_argument("hypotheses on G fail: " + join_terms(failed, "; "));

  TrichotomyReport out;
  out.hypothesis_ok = true;
  for (const auto& x : g) {
    const long distinct = count(x, S, CountMode::Zeros, 1) + count(x, S, CountMode::Poles, 1);
    const long h = height(x);
    out.hypothesis_terms.emplace_back(params.ell * distinct, h);
    out.hypothesis_ok = out.hypothesis_ok && params.ell * distinct <= h;
    out.max_height = std::max(out.max_height, h);
  }
  const long s_term = std::max<long>(1, S.geometric_size() - 2);
  out.height_bound = Rational(params.c0 * (poly_heights(G).h_tilde + s_term));
  out.height_bounded = out.max_height <= out.height_bound;

  const RatFun value = evaluate(G, g);
  InequalityReport& a = out.clause_a;
  a.name = "abc_clause_a";
  a.asserted = false;
  if (value.is_zero()) {
    a.status = Status::Degenerate;
    a.notes.emplace_back("G(g) = 0");
    out.notes.emplace_back("g lies on the hypersurface G = 0; clauses are undefined");
    return out;
  }
  const long n0 = count(value, PlaceSet(), CountMode::Zeros, std::nullopt);
  const long n0_1 = count(value, PlaceSet(), CountMode::Zeros, 1);
  a.set_sides(n0 - n0_1, params.epsilon * out.max_height);
  a.status = verdict(a.holds);

  const bool equal_degrees = std::all_of(profile.per_variable.begin(), profile.per_variable.end(),
                                         [&](int d) { return d == profile.total_degree; });
  if (equal_degrees) {
    std::vector<RatFun> tuple{RatFun(Rational(1))};
    tuple.insert(tuple.end(), g.begin(), g.end());
    InequalityReport b;
    b.name = "abc_clause_b";
    b.asserted = false;
    b.set_sides(profile.total_degree * (1 - params.epsilon) * projective_height(tuple),
                count(value, S, CountMode::Zeros, 1));
    b.status = verdict(b.holds);
    b.notes.emplace_back("lhs = deg G (1 - eps) h(1, g), rhs = N^(1)_{0,S}(G(g))");
    out.clause_b = std::move(b);
  } else {
    out.notes.emplace_back("clause (b) not applicable: some deg_{x_i} G differs from deg G");
  }
  if (!out.hypothesis_ok) out.notes.emplace_back("hypothesis fails for some g_i; clauses are informational");
  if (out.height_bounded)
    out.notes.emplace_back("bounded-height alternative holds; the clauses are not forced and g may lie on Z");
  out.notes.emplace_back("the exceptional set Z is not computed");
  return out;
}

TruncationGapReport campana_truncation_gap(const Fan& fan, const HypersurfaceDivisor& A,
                                           std::span<const OrbifoldComponent> delta, const TorusPoint& u,
                                           const PlaceSet& S, const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > 1) throw std::invalid_argument("epsilon must lie in (0, 1]");
  TruncationGapReport out;
  out.integrality = is_campana_integral(fan, delta, u, S);
  std::vector<std::string> bad;
  for (const auto& v : out.integrality.violations)
    bad.push_back("component " + std::to_string(v.component) + " at " + v.place.encode() + " (lambda " +
                  std::to_string(v.lambda) + ")");
  const Precondition integral{"Campana integral", out.integrality.integral, join_terms(bad, "; ")};

  const ToricComponent comp = A;
  const WeilProfile profile = weil_profile(fan, std::span<const ToricComponent>(&comp, 1), u, S);
  std::vector<std::string> simple;
  for (std::size_t i = 0; i < profile.loci.size(); ++i) {
    if (profile.loci[i].in_s || profile.values[i][0] != 1) continue;
    for (const auto& p : profile.loci[i].places()) simple.push_back(p.encode());
  }
  const Precondition mult{"multiplicity >= 2 along A off S", simple.empty(),
                          simple.empty() ? "" : "lambda = 1 at " + join_terms(simple, ", ")};

  const DivisorCounting dc = divisor_counting(fan, comp, u, S, 1);
  out.N1 = dc.N_S_truncated;
  out.N = dc.N_S;
  out.h = dc.h;

  InequalityReport& half = out.half_truncation;
  half.name = "half_truncation";
  half.preconditions = {integral, mult};
  half.set_sides(out.N1, Rational(out.N, 2));
  half.status = half.preconditions_ok() ? verdict(half.holds) : Status::PreconditionFailed;

  InequalityReport& low = out.lower_bound;
  low.name = "truncated_lower_bound";
  low.asserted = false;
  low.preconditions = {integral, mult};
  low.set_sides((1 - epsilon) * out.h, out.N1);
  low.status = low.preconditions_ok() ? verdict(low.holds) : Status::PreconditionFailed;
  low.notes.emplace_back("reported only; the bound holds up to O(1) outside an exceptional set");
  return out;
}

PerfectPower perfect_power(const RatFun& f) {
  if (f.is_zero()) throw std::invalid_argument("perfect_power of zero");
  if (!f.is_polynomial()) throw std::invalid_argument("perfect_power needs a polynomial (constant denominator)");
  PerfectPower out;
  const UniPoly& p = f.num();  // the denominator is monic, hence 1
  out.unit = p.leading();
  if (p.is_constant()) {
    out.is_power = true;
    out.base = UniPoly::constant(Rational(1));
    return out;
  }
  const auto parts = squarefree_decomposition(p);
  long g = 0;
  for (const auto& [part, e] : parts) g = std::gcd(g, static_cast<long>(e));
  out.exponent = g;
  out.is_power = g >= 2;
  out.base = UniPoly::constant(Rational(1));
  for (const auto& [part, e] : parts) out.base = out.base * pow(part.monic(), static_cast<unsigned>(e / g));
  return out;
}

}  // namespace ffd
