// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "ffd/cli.hpp"
#include "ffd/factor.hpp"
#include "ffd/report.hpp"
#include "support.hpp"

using namespace ffd;
using namespace ffd::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }
MPoly one(std::size_t n) { return MPoly::constant(n, K(1)); }

long tally(const Json& batch, const char* key) { return batch["tallies"][key].get<long>(); }

Verdict brownawell_masser_suite() {
  const auto start = std::chrono::steady_clock::now();
  BatchOptions o{BatchKind::BrownawellMasser, 20240601, 1200, 0, 30};
  const Json r = run_batch(o);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const long holds = tally(r, "holds");
  const long nondegenerate = holds + tally(r, "fails");
  std::size_t max_s = 0;
  for (const auto& inst : r["instances"])
    max_s = std::max(max_s, cli::parse_places(inst["input"]["S"].get<std::string>()).places().size());
  Verdict v;
  v.pass = nondegenerate >= 1000 && holds == nondegenerate && tally(r, "errors") == 0 && seconds < 60 && max_s <= 6;
  v.detail = std::to_string(holds) + "/" + std::to_string(nondegenerate) + " hold, " +
             std::to_string(tally(r, "degenerate")) + " degenerate, " + std::to_string(seconds).substr(0, 5) + " s";
  return v;
}

Verdict proximity_suite() {
  BatchOptions o{BatchKind::Proximity, 20240602, 600, 0, 30};
  const Json r = run_batch(o);
  const long holds = tally(r, "holds");
  const long off_w = holds + tally(r, "fails");
  const BmConstants c = bm_constants(2, 2);
  const bool constants = c.B == 6 && c.c1_tilde == 21 && c.c2_tilde == 210;
  Verdict v;
  v.pass = off_w >= 500 && holds == off_w && tally(r, "precondition_failed") == 0 && tally(r, "errors") == 0 &&
           constants;
  v.detail = std::to_string(holds) + "/" + std::to_string(off_w) + " off W hold, bm_constants(2,2) = (" +
             c.B.get_str() + ", " + c.c1_tilde.get_str() + ", " + c.c2_tilde.get_str() + ")";
  return v;
}

Verdict degree_zero_suite() {
  std::mt19937_64 rng(3);
  long bad_degree = 0, bad_height = 0;
  for (int i = 0; i < 10000; ++i) {
    const RatFun f = random_ratfun(rng, 8, 20);
    long total = 0, poles = 0;
    for (const auto& [p, e] : divisor(f)) {
      total += static_cast<long>(e) * p.degree();
      if (e < 0) poles -= static_cast<long>(e) * p.degree();
    }
    bad_degree += total != 0;
    bad_height += poles != height(f);
  }
  return {bad_degree == 0 && bad_height == 0,
          "10000 functions, " + std::to_string(bad_degree) + " degree and " + std::to_string(bad_height) +
              " height mismatches"};
}

Verdict chart_suite() {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> root(-3, 3), expo(-3, 3), dim_pick(2, 3);
  const std::vector<Place> places = {Place::rational(0), Place::rational(1), Place::rational(-1),
                                     Place::rational(2), Place::infinity(),   Place::conjugacy_class(poly({1, 0, 1}))};
  long boundary_mismatch = 0, chart_mismatch = 0, charts_compared = 0;
  for (int pair = 0; pair < 500; ++pair) {
    const int n = dim_pick(rng);
    const Fan fan = projective_space(n);
    std::vector<RatFun> f;
    for (int i = 0; i <= n; ++i) {
      RatFun x = K(1 + root(rng) * root(rng));
      if (x.is_zero()) x = K(1);
      for (int k = 0; k < 2; ++k) x *= pow(T() - K(root(rng)), expo(rng));
      x *= pow(T() * T() + K(1), expo(rng) / 2);
      f.push_back(x);
    }
    const Place& p = places[static_cast<std::size_t>(pair) % places.size()];
    long e = order_at(f[0], p);
    for (const auto& x : f) e = std::min<long>(e, order_at(x, p));
    const TorusPoint u = torus_point(f);
    for (int ray = 0; ray <= n; ++ray) {
      const std::size_t coord = ray < n ? static_cast<std::size_t>(ray) + 1 : 0;
      boundary_mismatch += boundary_weil(fan, static_cast<std::size_t>(ray), u, p) != order_at(f[coord], p) - e;
    }

    // F = sum (i + 1) x_i^d, a constant-coefficient form of degree d in {1, 2}.
    MPoly F(static_cast<std::size_t>(n) + 1);
    const unsigned d = 1 + static_cast<unsigned>(pair % 2);
    const auto vars = static_cast<std::size_t>(n) + 1;
    for (std::size_t i = 0; i < vars; ++i) F += pow(var(vars, i), d) * K(1 + static_cast<long>(i));
    const auto D = HypersurfaceDivisor::homogeneous(F);
    const RatFun value = evaluate(F, f);
    if (value.is_zero()) continue;
    const long expected = order_at(value, p) - static_cast<long>(d) * e;
    for (std::size_t cone = 0; cone < fan.cones.size(); ++cone) {
      const std::vector<RatFun> chart = chart_coordinates(fan, cone, u);
      if (std::any_of(chart.begin(), chart.end(), [&](const RatFun& c) { return order_at(c, p) < 0; })) continue;
      const RatFun local = evaluate(D.chart_polynomial(fan, cone), chart);
      ++charts_compared;
      chart_mismatch += (local.is_zero() ? -1 : std::max(0, order_at(local, p))) != expected;
    }
    chart_mismatch += hypersurface_weil(fan, D, u, p).value != expected;
  }
  return {boundary_mismatch == 0 && chart_mismatch == 0 && charts_compared > 0,
          "500 pairs on P2/P3, " + std::to_string(boundary_mismatch) + " boundary and " +
              std::to_string(chart_mismatch) + " chart mismatches over " + std::to_string(charts_compared) +
              " admissible charts"};
}

Verdict campana_example() {
  const Fan p2 = projective_space(2);
  const std::vector<std::string> names = {"x0", "x1", "x2"};
  const std::vector<OrbifoldComponent> delta = {
      {HypersurfaceDivisor::homogeneous(cli::parse_mpoly("x0", names)), Rational(1), "[x0]"},
      {HypersurfaceDivisor::homogeneous(cli::parse_mpoly("x1", names)), Rational(1, 2), "[x1]"},
      {HypersurfaceDivisor::homogeneous(cli::parse_mpoly("x0+x1+x2", names)), Rational(2, 3), "[x0+x1+x2]"}};
  const PlaceSet S({Place::infinity()});
  const std::vector<RatFun> witness = {K(1), T() * T(), pow(T(), 3) - T() * T() - K(1)};
  const std::vector<RatFun> perturbed = {K(1), T(), pow(T(), 3)};
  const CampanaVerdict good = is_campana_integral(p2, delta, torus_point(witness), S);
  const CampanaVerdict bad = is_campana_integral(p2, delta, torus_point(perturbed), S);
  bool reported = false;
  std::string triple;
  for (const auto& v : bad.violations) {
    if (v.component == 1 && v.place == Place::rational(0) && v.lambda == 1) reported = true;
    triple += (triple.empty() ? "" : ", ") + std::string("(") + delta[v.component].label + ", " + v.place.encode() +
              ", " + std::to_string(v.lambda) + ")";
  }
  return {good.integral && !bad.integral && reported,
          std::string("witness ") + (good.integral ? "accepted" : "rejected") + ", perturbation violations " + triple};
}

Verdict half_truncation_suite() {
  const Fan p2 = projective_space(2);
  const PlaceSet S({Place::infinity()});
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> coef(1, 7), sign(0, 1);
  long holds = 0, checked = 0, skipped = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::vector<Rational> a;
    for (int k = 0; k < 3; ++k) a.emplace_back(sign(rng) ? coef(rng) : -coef(rng));
    MPoly form(3);
    for (std::size_t k = 0; k < 3; ++k) form += var(3, k) * RatFun(a[k]);
    const auto A = HypersurfaceDivisor::homogeneous(form);
    const CampanaInstance inst = campana_point(instance_seed(606, i), 2 + static_cast<long>(i % 3), 3, a);
    const std::vector<OrbifoldComponent> delta = {{A, Rational(1, 2), "A"}};
    const TruncationGapReport r = campana_truncation_gap(p2, A, delta, inst.u, S, Rational(1, 3));
    if (!general_position_check(A, p2) || !r.half_truncation.preconditions_ok()) {
      ++skipped;
      continue;
    }
    ++checked;
    holds += r.half_truncation.status == Status::Holds && 2 * r.N1 <= r.N;
  }
  return {checked == 200 && holds == checked,
          std::to_string(holds) + "/" + std::to_string(checked) + " hold, " + std::to_string(skipped) +
              " not multiplicity >= 2"};
}

struct RootCount {
  long distinct = 0;
  long total = 0;
};
RootCount factored_roots(const UniPoly& p) {
  RootCount rc;
  if (p.is_constant()) return rc;
  for (const auto& [q, e] : factor(p).factors) {
    rc.distinct += q.degree();
    rc.total += static_cast<long>(e) * q.degree();
  }
  return rc;
}

Verdict abc_suite() {
  const PlaceSet zero_inf({Place::rational(0), Place::infinity()});
  const std::vector<RatFun> g = {pow(T(), 6), pow(T(), 3)};
  const AbcParameters params;
  std::ostringstream detail;
  bool pass = true;

  // Worked example: x + y + 1 gives gap 0 and clause (b) 6 >= 4.
  const TrichotomyReport linear = abc_trichotomy(var(2, 0) + var(2, 1) + one(2), g, zero_inf, params);
  pass = pass && linear.clause_a.lhs == 0 && linear.clause_a.holds && linear.clause_b && linear.clause_b->rhs == 6 &&
         linear.clause_b->lhs == 4 && linear.clause_b->holds;
  // The cubic at the same point: G(g) = t^18 + t^9 + 1 is squarefree, 18 >= 12.
  const MPoly cubic = pow(var(2, 0), 3) + pow(var(2, 1), 3) + one(2);
  const TrichotomyReport c = abc_trichotomy(cubic, g, zero_inf, params);
  const RootCount cr = factored_roots(pow(poly({0, 1}), 18) + pow(poly({0, 1}), 9) + poly({1}));
  pass = pass && c.clause_a.lhs == cr.total - cr.distinct && c.clause_a.lhs == 0 && c.clause_a.holds &&
         c.clause_b && c.clause_b->rhs == cr.distinct && c.clause_b->lhs == 12 && c.clause_b->holds;
  detail << "x+y+1: gap " << linear.clause_a.lhs << ", (b) " << (linear.clause_b ? linear.clause_b->rhs : -1)
         << " >= " << (linear.clause_b ? linear.clause_b->lhs : -1) << "; cubic: gap " << c.clause_a.lhs << ", (b) "
         << (c.clause_b ? c.clause_b->rhs : -1) << " >= " << (c.clause_b ? c.clause_b->lhs : -1);

  // Curated family: the factorization oracle fixes the expected values before the checker runs.
  const PlaceSet S({Place::infinity()});
  std::mt19937_64 rng(7);
  int included = 0, agree = 0, shape = 0, rejected = 0;
  while (included < 24) {
    const UniPoly f1 = random_poly(rng, 2, 4);
    const UniPoly f2 = random_poly(rng, 2, 4);
    if (f1.is_constant() || f2.is_constant() || !gcd(f1, f2).is_constant()) {
      ++shape;
      continue;
    }
    const long ell = 4 + included % 2;
    const auto e = static_cast<unsigned>(ell);
    const UniPoly value = pow(f1, 3 * e) + pow(f2, 3 * e) + poly({1});
    const RootCount roots = factored_roots(value);
    const long max_h = ell * std::max(f1.degree(), f2.degree());
    const Rational gap_bound = params.epsilon * max_h;
    const Rational b_lhs = 3 * (1 - params.epsilon) * max_h;
    const bool oracle_pass = roots.total - roots.distinct <= gap_bound && b_lhs <= roots.distinct;
    if (!oracle_pass) {
      ++rejected;
      continue;
    }
    ++included;
    AbcParameters p = params;
    p.ell = ell;
    const std::vector<RatFun> gi = {RatFun(pow(f1, e)), RatFun(pow(f2, e))};
    const TrichotomyReport r = abc_trichotomy(cubic, gi, S, p);
    agree += r.hypothesis_ok && r.clause_a.holds && r.clause_a.lhs == roots.total - roots.distinct &&
             r.clause_b && r.clause_b->holds && r.clause_b->rhs == roots.distinct && r.clause_b->lhs == b_lhs;
  }
  pass = pass && agree == included && included >= 20;
  detail << "; curated " << agree << "/" << included << " pass both clauses (" << shape
         << " draws not coprime and nonconstant, " << rejected << " rejected by the oracle)";
  return {pass, detail.str()};
}

Verdict polytope_suite() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"P2", "P1xP1", "F1"}) {
    const Fan fan = builtin_fan(name);
    const std::vector<Rational> plus(fan.rays.size(), Rational(1)), minus(fan.rays.size(), Rational(-1));
    const bool big = is_big(invariant_divisor_polytope(fan, plus));
    const bool neg_big = is_big(invariant_divisor_polytope(fan, minus));
    pass = pass && big && !neg_big;
    detail += std::string(detail.empty() ? "" : ", ") + name + ": D0 " + (big ? "big" : "not big") + ", -D0 " +
              (neg_big ? "big" : "not big");
  }
  return {pass, detail};
}

Verdict determinism_suite() {
  bool pass = true;
  for (BatchKind kind : {BatchKind::BrownawellMasser, BatchKind::Proximity, BatchKind::CampanaTruncation}) {
    BatchOptions o{kind, 424242, 60, 0, 30};
    const std::string first = run_batch(o).dump();
    const std::string second = run_batch(o).dump();
    pass = pass && first == second;
  }
  const std::vector<std::string> args = {"check-bm", "--batch", "40", "--seed", "9"};
  std::ostringstream a, b, err;
  cli::run(args, a, err);
  cli::run(args, b, err);
  pass = pass && a.str() == b.str() && !a.str().empty();
  return {pass, "three batch kinds and one CLI report compared byte for byte"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"Brownawell-Masser suite", brownawell_masser_suite},
      {"Proximity suite", proximity_suite},
      {"Degree-zero and height consistency", degree_zero_suite},
      {"Chart consistency", chart_suite},
      {"Campana example", campana_example},
      {"Half truncation", half_truncation_suite},
      {"abc curated family", abc_suite},
      {"Polytope bigness", polytope_suite},
      {"Determinism", determinism_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s [%zu] %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
