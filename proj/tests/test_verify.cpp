#include <doctest.h>

#include <random>

#include "ffd/factor.hpp"
#include "ffd/report.hpp"
#include "support.hpp"

using namespace ffd;
using namespace ffd::testing;

namespace {

MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }
MPoly one(std::size_t n) { return MPoly::constant(n, K(1)); }

PlaceSet zero_inf() { return PlaceSet({Place::rational(0), Place::infinity()}); }

// Distinct finite roots and total multiplicity of a polynomial from its
// irreducible factorization.
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

}  // namespace

TEST_CASE("brownawell_masser examples") {
  const std::vector<RatFun> a = {T(), K(1) - T()};
  const InequalityReport r = brownawell_masser(a, PlaceSet());
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 4);
  CHECK(r.status == Status::Holds);
  CHECK(r.slack == 3);

  const RatFun t5 = pow(T(), 5);
  const std::vector<RatFun> b = {t5, K(1) - t5};
  const InequalityReport r5 = brownawell_masser(b, PlaceSet());
  CHECK(r5.lhs == 5);
  CHECK(r5.rhs == 8);
  CHECK(r5.holds);

  const std::vector<RatFun> c = {T(), -T(), K(1)};
  const InequalityReport d = brownawell_masser(c, PlaceSet());
  CHECK(d.status == Status::Degenerate);
  REQUIRE(d.preconditions.size() == 1);
  CHECK_FALSE(d.preconditions[0].satisfied);
  CHECK(d.preconditions[0].witness == "f0 + f1 = 0");

  const std::vector<RatFun> bad = {T(), T()};
  CHECK_THROWS_AS(brownawell_masser(bad, PlaceSet()), std::invalid_argument);
  const std::vector<RatFun> single = {K(1)};
  CHECK_THROWS_AS(brownawell_masser(single, PlaceSet()), std::invalid_argument);
}

TEST_CASE("bm_constants") {
  const auto check = [](int n, int d, long B, long c1, long c2) {
    const BmConstants c = bm_constants(n, d);
    CHECK(c.B == B);
    CHECK(c.c1_tilde == c1);
    CHECK(c.c2_tilde == c2);
  };
  check(2, 2, 6, 21, 210);
  check(2, 1, 3, 6, 24);
  check(1, 1, 2, 3, 6);
  CHECK_THROWS_AS(bm_constants(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(bm_constants(1, 0), std::invalid_argument);
}

TEST_CASE("bm_constants are positive") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d) {
      const BmConstants c = bm_constants(n, d);
      CHECK(c.B > 0);
      CHECK(c.c1_tilde > 0);
      CHECK(c.c2_tilde > 0);
      CHECK(c.c1_tilde * 2 == c.B * (c.B + 1));
    }
}

TEST_CASE("proximity_bound examples") {
  const MPoly F = one(2) + var(2, 0) + var(2, 1);
  const std::vector<RatFun> g = {T(), T() * T()};
  const InequalityReport r = proximity_bound(F, g, zero_inf());
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);
  CHECK(r.status == Status::Holds);

  const MPoly F2 = one(1) + var(1, 0) * T();
  const std::vector<RatFun> g2 = {K(1) / T()};
  const InequalityReport r2 = proximity_bound(F2, g2, zero_inf());
  CHECK(r2.lhs == 0);
  CHECK(r2.rhs == 6);
  CHECK(r2.status == Status::Holds);

  const MPoly F3 = one(1) + var(1, 0);
  const std::vector<RatFun> g3 = {T() - K(1)};
  const InequalityReport r3 = proximity_bound(F3, g3, zero_inf());
  CHECK(r3.status == Status::PreconditionFailed);

  // 1 + x at x = -1 vanishes identically: a subsum witness.
  const std::vector<RatFun> g4 = {K(-1)};
  CHECK(proximity_bound(F3, g4, zero_inf()).status == Status::Degenerate);
}

TEST_CASE("proximity lhs counts zeros at S places") {
  // 1 - x at x = t^3 vanishes to order 1 at the conjugacy class t^2 + t + 1 and at t = 1.
  const PlaceSet S({Place::rational(0), Place::rational(1), Place::conjugacy_class(poly({1, 1, 1})),
                    Place::infinity()});
  const MPoly F = one(1) - var(1, 0);
  const std::vector<RatFun> g = {pow(T(), 3)};
  const InequalityReport r = proximity_bound(F, g, S);
  CHECK(r.lhs == 3);
  CHECK(r.rhs == 3 * 3);  // c1~ chi+ with chi+ = 1 + 1 + 2 + 1 - 2, h(F) = 0
  CHECK(r.status == Status::Holds);
}

TEST_CASE("abc_trichotomy examples") {
  const MPoly G = var(2, 0) + var(2, 1) + one(2);
  const std::vector<RatFun> g = {pow(T(), 6), pow(T(), 3)};
  const TrichotomyReport r = abc_trichotomy(G, g, zero_inf(), AbcParameters{});
  CHECK(r.hypothesis_ok);
  CHECK(r.clause_a.lhs == 0);
  CHECK(r.clause_a.rhs == 2);
  CHECK(r.clause_a.holds);
  CHECK_FALSE(r.clause_a.asserted);
  REQUIRE(r.clause_b);
  CHECK(r.clause_b->lhs == 4);
  CHECK(r.clause_b->rhs == 6);
  CHECK(r.clause_b->holds);

  const std::vector<RatFun> tt = {T(), T()};
  const TrichotomyReport near = abc_trichotomy(G, tt, PlaceSet(), AbcParameters{});
  CHECK(near.clause_a.lhs == 0);
  CHECK(near.clause_a.holds);
  CHECK(std::any_of(near.notes.begin(), near.notes.end(),
                    [](const std::string& s) { return s.find("may lie on Z") != std::string::npos; }));

  const std::vector<RatFun> h = {T() + K(1), T()};
  AbcParameters p;
  p.ell = 10;
  const TrichotomyReport fail = abc_trichotomy(G, h, zero_inf(), p);
  CHECK_FALSE(fail.hypothesis_ok);
  CHECK(fail.hypothesis_terms[0].first == 10);
  CHECK(fail.hypothesis_terms[0].second == 1);
}

TEST_CASE("abc_trichotomy rejects bad G") {
  const std::vector<RatFun> g = {T(), T() + K(1)};
  const MPoly monomial = var(2, 0) * (var(2, 1) + one(2));
  CHECK_THROWS_WITH_AS(abc_trichotomy(monomial, g, PlaceSet(), AbcParameters{}), doctest::Contains("monomial factor"),
                       std::invalid_argument);
  const MPoly square = pow(var(2, 0) + one(2), 2) + var(2, 1) * K(0);
  CHECK_THROWS_WITH_AS(abc_trichotomy(square, g, PlaceSet(), AbcParameters{}), doctest::Contains("repeated factor"),
                       std::invalid_argument);
  const MPoly origin = var(2, 0) + var(2, 1);
  CHECK_THROWS_WITH_AS(abc_trichotomy(origin, g, PlaceSet(), AbcParameters{}), doctest::Contains("origin"),
                       std::invalid_argument);
  // Clause (b) is skipped when some per-variable degree is short.
  const MPoly mixed = var(2, 0) * var(2, 0) + var(2, 1) + one(2);
  CHECK_FALSE(abc_trichotomy(mixed, g, PlaceSet(), AbcParameters{}).clause_b);
}

TEST_CASE("abc curated family against a factorization oracle") {
  // G = x^3 + y^3 + 1, g = (f1^l, f2^l) with coprime nonconstant polynomials.
  const MPoly G = pow(var(2, 0), 3) + pow(var(2, 1), 3) + one(2);
  const PlaceSet S({Place::infinity()});
  std::mt19937_64 rng(2024);
  int curated = 0;
  while (curated < 12) {
    const UniPoly f1 = random_poly(rng, 2, 3);
    const UniPoly f2 = random_poly(rng, 2, 3);
    if (f1.is_constant() || f2.is_constant() || !gcd(f1, f2).is_constant()) continue;
    const long ell = 4;
    const std::vector<RatFun> g = {RatFun(pow(f1, ell)), RatFun(pow(f2, ell))};
    AbcParameters params;
    params.ell = ell;
    const TrichotomyReport r = abc_trichotomy(G, g, S, params);

    const UniPoly value = pow(f1, 3 * ell) + pow(f2, 3 * ell) + UniPoly::constant(Rational(1));
    const RootCount roots = factored_roots(value);
    const long max_h = ell * std::max(f1.degree(), f2.degree());
    CHECK(r.hypothesis_ok);
    CHECK(r.clause_a.lhs == roots.total - roots.distinct);
    CHECK(r.clause_a.rhs == Rational(max_h, 3));
    CHECK(r.clause_a.holds);
    REQUIRE(r.clause_b);
    CHECK(r.clause_b->lhs == 2 * max_h);
    CHECK(r.clause_b->rhs == roots.distinct);
    CHECK(r.clause_b->holds);
    ++curated;
  }
}

TEST_CASE("campana_truncation_gap examples") {
  const Fan p2 = projective_space(2);
  MPoly form = var(3, 0) + var(3, 1) + var(3, 2);
  const auto A = HypersurfaceDivisor::homogeneous(form);
  const std::vector<OrbifoldComponent> delta = {{A, Rational(2, 3), "A"}};
  const PlaceSet S({Place::infinity()});
  const RatFun f2 = pow(T(), 3) - T() * T() - K(1);
  const TorusPoint u = {T() * T(), f2};
  const TruncationGapReport r = campana_truncation_gap(p2, A, delta, u, S, Rational(1, 3));
  CHECK(r.integrality.integral);
  CHECK(r.N1 == 1);
  CHECK(r.N == 3);
  CHECK(r.half_truncation.lhs == 1);
  CHECK(r.half_truncation.rhs == Rational(3, 2));
  CHECK(r.half_truncation.status == Status::Holds);
  CHECK_FALSE(r.lower_bound.asserted);

  // [1 : t : t^2 - 2t - 1] meets A in t(t - 1): simple zeros only.
  const TorusPoint simple = {T(), T() * T() - T() - K(1) - T()};
  const std::vector<OrbifoldComponent> none;
  const TruncationGapReport s = campana_truncation_gap(p2, A, none, simple, S, Rational(1, 3));
  CHECK(s.half_truncation.status == Status::PreconditionFailed);
  CHECK_FALSE(s.half_truncation.preconditions[1].satisfied);

  // Non-integral point for the given Delta.
  const std::vector<OrbifoldComponent> strict = {{A, Rational(3, 4), "A"}};
  const TruncationGapReport n = campana_truncation_gap(p2, A, strict, u, S, Rational(1, 3));
  CHECK_FALSE(n.integrality.integral);
  CHECK(n.half_truncation.status == Status::PreconditionFailed);
}

TEST_CASE("perfect_power examples") {
  const RatFun f = RatFun(poly({0, 0, 1}) * pow(poly({-1, 1}), 2));
  const PerfectPower p = perfect_power(f);
  CHECK(p.is_power);
  CHECK(p.exponent == 2);
  CHECK(p.base == poly({0, -1, 1}));

  CHECK_FALSE(perfect_power(RatFun(poly({0, 1}) * pow(poly({-1, 1}), 2))).is_power);
  const PerfectPower c = perfect_power(K(7));
  CHECK(c.is_power);
  CHECK_FALSE(c.exponent);
  CHECK_THROWS_AS(perfect_power(K(1) / T()), std::invalid_argument);
  CHECK_THROWS_AS(perfect_power(RatFun()), std::invalid_argument);
}

TEST_CASE("perfect_power reconstructs its input") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const UniPoly a = random_poly(rng, 3, 4);
    if (a.is_constant()) continue;
    const unsigned e = 2 + static_cast<unsigned>(i % 3);
    const UniPoly f = pow(a, e);
    const PerfectPower p = perfect_power(RatFun(f));
    REQUIRE(p.exponent);
    CHECK(p.is_power);
    CHECK(*p.exponent % e == 0);
    CHECK(UniPoly::constant(p.unit) * pow(p.base, static_cast<unsigned>(*p.exponent)) == f);
  }
}

TEST_CASE("perfect power scan") {
  const MPoly F = pow(var(3, 0), 2) + pow(var(3, 1), 2) + pow(var(3, 2), 2);
  const ScanReport r = perfect_power_scan(F, 2, 3, 2, 6, 11);
  CHECK(r.squarefree);
  CHECK(r.nonvanishing_at_coordinate_points);
  REQUIRE_FALSE(r.hits.empty());
  CHECK(r.hits.front().degenerate);
  CHECK(r.hits.front().value == UniPoly::constant(Rational(3)));
  const ScanReport again = perfect_power_scan(F, 2, 3, 2, 6, 11);
  CHECK(to_json(again) == to_json(r));
}

TEST_CASE("generators are reproducible") {
  const BmInstance a = bm_instance(1, 1, 5);
  const BmInstance b = bm_instance(1, 1, 5);
  CHECK(a.fs == b.fs);
  CHECK(a.S == b.S);
  REQUIRE(a.fs.size() == 2);
  CHECK(a.fs[0] + a.fs[1] == K(1));

  const std::vector<RatFun> u = s_unit_tuple(7, zero_inf(), 2);
  CHECK(u == s_unit_tuple(7, zero_inf(), 2));
  for (const auto& x : u) {
    for (const UniPoly* q : {&x.num(), &x.den()})
      CHECK(*q == UniPoly::constant(q->leading()) * pow(UniPoly::variable(), static_cast<unsigned>(q->degree())));
  }

  const CampanaInstance c = campana_point(3, 4, 3);
  REQUIRE(c.u.size() == 2);
  for (const auto& x : c.u)
    for (const auto& [place, e] : divisor(x)) CHECK(e % 4 == 0);
  CHECK(campana_point(3, 4, 3).u == c.u);

  const PowerTuple pt = power_tuple(9, 3, 3, 2);
  CHECK(pt.f == power_tuple(9, 3, 3, 2).f);
  for (long n : pt.n) CHECK(n >= 3);
}

TEST_CASE("brownawell_masser holds on generated instances") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const BmInstance inst = bm_instance(instance_seed(17, i), 1 + static_cast<int>(i % 3), 8);
    const InequalityReport r = brownawell_masser(inst.fs, inst.S);
    CAPTURE(i);
    CHECK(r.status != Status::Fails);
    CHECK(r.slack == r.rhs - r.lhs);
  }
}

TEST_CASE("proximity_bound holds on generated instances off W") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    static constexpr int shapes[3][2] = {{1, 1}, {2, 1}, {2, 2}};
    const auto [n, d] = shapes[i % 3];
    const ProximityInstance inst = proximity_instance(instance_seed(23, i), n, d);
    const InequalityReport r = proximity_bound(inst.F, inst.g, inst.S);
    CAPTURE(i);
    CHECK(r.status != Status::Fails);
    CHECK(r.status != Status::PreconditionFailed);
  }
}

TEST_CASE("half truncation holds from per-place data") {
  const Fan p2 = projective_space(2);
  const PlaceSet S({Place::infinity()});
  for (std::uint64_t i = 0; i < 30; ++i) {
    const std::vector<Rational> a = {Rational(1), Rational(-2), Rational(3)};
    const CampanaInstance inst = campana_point(instance_seed(31, i), 2 + static_cast<long>(i % 2), 3, a);
    MPoly form(3);
    for (std::size_t k = 0; k < 3; ++k) form += var(3, k) * RatFun(a[k]);
    const auto A = HypersurfaceDivisor::homogeneous(form);
    const std::vector<OrbifoldComponent> delta = {{A, Rational(1, 2), "A"}};
    const TruncationGapReport r = campana_truncation_gap(p2, A, delta, inst.u, S, Rational(1, 3));
    const DivisorCounting dc = divisor_counting(p2, ToricComponent(A), inst.u, S, 1);
    long n1 = 0, n = 0;
    for (const auto& [locus, lambda] : dc.contributions) {
      if (locus.in_s) continue;
      CHECK((lambda == 0 || lambda >= 2));
      n1 += std::min(1L, lambda) * locus.weight;
      n += lambda * locus.weight;
    }
    CAPTURE(i);
    CHECK(r.N1 == n1);
    CHECK(r.N == n);
    CHECK(r.half_truncation.status == Status::Holds);
  }
}

TEST_CASE("batch runs are deterministic") {
  for (BatchKind kind : {BatchKind::BrownawellMasser, BatchKind::Proximity, BatchKind::CampanaTruncation}) {
    BatchOptions o;
    o.kind = kind;
    o.seed = 99;
    o.count = 9;
    o.threads = 4;
    const Json a = run_batch(o);
    o.threads = 1;
    const Json b = run_batch(o);
    CHECK(a == b);
    CHECK(a["instances"].size() == 9);
    CHECK(a["tallies"]["fails"] == 0);
    CHECK(a["tallies"]["errors"] == 0);
  }
  CHECK(parse_batch_kind("prox") == BatchKind::Proximity);
  CHECK_FALSE(parse_batch_kind("nope"));
}

TEST_CASE("report json shape") {
  const std::vector<RatFun> a = {T(), K(1) - T()};
  const Json j = to_json(brownawell_masser(a, PlaceSet()));
  CHECK(j["lhs"] == "1/1");
  CHECK(j["rhs"] == "4/1");
  CHECK(j["status"] == "holds");
  CHECK(to_json(perfect_power(K(2)))["exponent"] == "inf");
}
