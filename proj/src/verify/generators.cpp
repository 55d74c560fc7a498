#include <algorithm>
#include <random>
#include <stdexcept>

#include "ffd/verify.hpp"

namespace ffd {

namespace {

constexpr int kRetryBudget = 64;

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational nonzero_rational(Rng& rng, long bound) {
  long num = 0;
  while (num == 0) num = uniform(rng, -bound, bound);
  return Rational(num, uniform(rng, 1, bound));
}

UniPoly random_poly(Rng& rng, int min_degree, int max_degree, long bound) {
  for (;;) {
    const auto d = static_cast<std::size_t>(uniform(rng, min_degree, max_degree));
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = uniform(rng, -bound, bound);
    if (c.back() == 0) c.back() = 1;
    UniPoly p(std::move(c));
    if (!p.is_zero() && p.degree() >= min_degree) return p;
  }
}

// c * prod (t - r_j)^{e_j}: few distinct roots with high multiplicity.
UniPoly sparse_root_poly(Rng& rng, int max_degree) {
  UniPoly p = UniPoly::constant(nonzero_rational(rng, 5));
  int budget = max_degree;
  const long factors = uniform(rng, 0, 3);
  for (long j = 0; j < factors && budget > 0; ++j) {
    const auto e = static_cast<unsigned>(uniform(rng, 1, budget));
    p = p * pow(UniPoly::linear_root(Rational(uniform(rng, -3, 3))), e);
    budget -= static_cast<int>(e);
  }
  return p;
}

const std::vector<Place>& place_pool() {
  static const std::vector<Place> pool = {
      Place::rational(0),
      Place::infinity(),
      Place::rational(1),
      Place::rational(-1),
      Place::rational(2),
      Place::rational(Rational(1, 2)),
      Place::rational(-2),
      Place::conjugacy_class(UniPoly({Rational(1), Rational(0), Rational(1)})),
  };
  return pool;
}

PlaceSet random_places(Rng& rng, long min_size, long max_size) {
  std::vector<Place> pool = place_pool();
  std::shuffle(pool.begin(), pool.end(), rng);
  const long target = uniform(rng, min_size, max_size);
  PlaceSet S;
  for (const auto& p : pool) {
    if (S.geometric_size() + static_cast<long>(p.degree()) > target) continue;
    S.insert(p);
  }
  return S;
}

bool has_vanishing_subsum(std::span<const RatFun> terms) {
  MPoly linear(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) linear += MPoly::variable(terms.size(), i);
  return vanishing_subsums(linear, terms).degenerate;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BmInstance bm_instance(std::uint64_t seed, int n, int max_degree, int max_s) {
  if (n < 1 || max_degree < 1) throw std::invalid_argument("bm_instance needs n >= 1 and max_degree >= 1");
  Rng rng(seed);
  BmInstance out;
  for (; out.resamples < kRetryBudget; ++out.resamples) {
    std::vector<UniPoly> A;
    UniPoly C;
    for (int i = 0; i <= n; ++i) {
      A.push_back(uniform(rng, 0, 2) == 0 ? random_poly(rng, 0, std::min(max_degree, 6), 4)
                                          : sparse_root_poly(rng, max_degree));
      C += A.back();
    }
    if (C.is_zero()) continue;
    std::vector<RatFun> fs;
    for (const auto& a : A) fs.emplace_back(a, C);
    if (has_vanishing_subsum(fs)) continue;
    out.fs = std::move(fs);
    out.S = random_places(rng, 0, max_s);
    return out;
  }
  throw std::runtime_error("bm_instance exhausted its retry budget");
}

std::vector<RatFun> s_unit_tuple(std::uint64_t seed, const PlaceSet& S, int n, int max_exponent) {
  Rng rng(seed);
  std::vector<const Place*> finite;
  const Place* anchor = nullptr;
  for (const auto& p : S) {
    if (p.is_infinity()) continue;
    finite.push_back(&p);
    if (!anchor && p.degree() == 1) anchor = &p;
  }
  std::vector<RatFun> out;
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(finite.size());
    long total = 0;
    for (std::size_t k = 0; k < finite.size(); ++k) {
      e[k] = uniform(rng, -max_exponent, max_exponent);
      total += e[k] * static_cast<long>(finite[k]->degree());
    }
    if (!S.contains_infinity() && total != 0) {
      // Without infinity in S the degree must balance.
      if (anchor) {
        const auto k = static_cast<std::size_t>(std::find(finite.begin(), finite.end(), anchor) - finite.begin());
        e[k] -= total;
      } else {
        std::fill(e.begin(), e.end(), 0);
      }
    }
    RatFun u(nonzero_rational(rng, 6));
    for (std::size_t k = 0; k < finite.size(); ++k)
      if (e[k] != 0) u *= pow(RatFun(finite[k]->poly()), e[k]);
    out.push_back(std::move(u));
  }
  return out;
}

ProximityInstance proximity_instance(std::uint64_t seed, int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("proximity_instance needs n >= 1 and d >= 1");
  Rng rng(seed);
  ProximityInstance out;
  const auto un = static_cast<std::size_t>(n);
  for (; out.resamples < kRetryBudget; ++out.resamples) {
    out.S = random_places(rng, 2, 6);
    out.g = s_unit_tuple(rng(), out.S, n);
    auto coefficient = [&]() -> RatFun {
      if (uniform(rng, 0, 2) > 0) return RatFun(nonzero_rational(rng, 6));
      RatFun c;
      while (c.is_zero()) c = RatFun(random_poly(rng, 0, 2, 3), random_poly(rng, 0, 2, 3));
      return c;
    };
    // All monomials of degree 1..d, each kept with probability 1/2; one of degree d is forced.
    std::vector<ExponentVector> monomials;
    ExponentVector e(un, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < un && ++e[i] > static_cast<unsigned>(d)) e[i++] = 0;
      if (i == un) break;
      unsigned deg = 0;
      for (auto x : e) deg += x;
      if (deg >= 1 && deg <= static_cast<unsigned>(d)) monomials.push_back(e);
    }
    MPoly F(un);
    ExponentVector top(un, 0);
    top[static_cast<std::size_t>(uniform(rng, 0, n - 1))] = static_cast<unsigned>(d);
    for (const auto& m : monomials)
      if (m == top || uniform(rng, 0, 1) == 1) F.add_term(m, coefficient());

    // Half the time pin the constant so that F(g) vanishes at a rational place of S.
    RatFun constant = coefficient();
    std::vector<const Place*> rational;
    for (const auto& p : out.S)
      if (!p.is_infinity() && p.degree() == 1) rational.push_back(&p);
    if (!rational.empty() && uniform(rng, 0, 1) == 1) {
      const Place& p = *rational[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rational.size()) - 1))];
      const RatFun v = evaluate(F, out.g);
      if (!v.is_zero() && order_at(v, p) == 0) {
        const Rational a = p.root();
        const Rational value = v.num().evaluate(a) / v.den().evaluate(a);
        constant = RatFun(Rational(-value));
      }
    }
    F.add_term(ExponentVector(un, 0), constant);
    if (F.total_degree() != d || F.constant_term().is_zero()) continue;
    if (vanishing_subsums(F, out.g).degenerate) continue;
    out.F = std::move(F);
    return out;
  }
  throw std::runtime_error("proximity_instance exhausted its retry budget");
}

CampanaInstance campana_point(std::uint64_t seed, long ell, int max_degree,
                              std::optional<std::vector<Rational>> hyperplane) {
  if (ell < 1 || max_degree < 1) throw std::invalid_argument("campana_point needs l >= 1 and max_degree >= 1");
  if (hyperplane && (hyperplane->size() != 3 || std::any_of(hyperplane->begin(), hyperplane->end(),
                                                            [](const Rational& a) { return a == 0; })))
    throw std::invalid_argument("hyperplane needs three nonzero coefficients");
  Rng rng(seed);
  CampanaInstance out;
  const auto e = static_cast<unsigned>(ell);
  for (; out.resamples < kRetryBudget; ++out.resamples) {
    const UniPoly f1 = pow(random_poly(rng, 1, max_degree, 3), e);
    UniPoly x2;
    if (!hyperplane) {
      x2 = pow(random_poly(rng, 1, max_degree, 3), e);
    } else {
      const auto& a = *hyperplane;
      const UniPoly w = pow(random_poly(rng, 1, max_degree, 3), e);
      x2 = (w - UniPoly::constant(a[0]) - f1 * a[1]) * Rational(1 / a[2]);
    }
    if (x2.is_zero()) continue;
    out.homogeneous = {RatFun(Rational(1)), RatFun(f1), RatFun(x2)};
    out.u = torus_point(out.homogeneous);
    return out;
  }
  throw std::runtime_error("campana_point exhausted its retry budget");
}

PowerTuple power_tuple(std::uint64_t seed, int max_degree, long m, long window) {
  if (m < 1 || window < 1) throw std::invalid_argument("power_tuple needs m >= 1 and window >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    PowerTuple out;
    for (int i = 0; i < 3; ++i) out.f.push_back(random_poly(rng, 0, max_degree, 3));
    const bool trivial = std::all_of(out.f.begin(), out.f.end(), [](const UniPoly& p) { return p.is_constant(); });
    if (trivial || !gcd(gcd(out.f[0], out.f[1]), out.f[2]).is_constant()) continue;
    for (int i = 0; i < 3; ++i) out.n.push_back(uniform(rng, m, m + window - 1));
    return out;
  }
  throw std::runtime_error("power_tuple exhausted its retry budget");
}

ScanReport perfect_power_scan(const MPoly& F, int max_degree, long m, long window, long samples, std::uint64_t seed) {
  if (F.nvars() != 3 || F.is_zero() || !F.is_homogeneous() || F.total_degree() < 1 || !F.has_constant_coefficients())
    throw std::invalid_argument("F must be a nonconstant homogeneous form in three variables over Q");
  ScanReport out;
  out.squarefree = degree_profile(F).is_squarefree;
  const auto d = static_cast<unsigned>(F.total_degree());
  out.nonvanishing_at_coordinate_points = !F.coefficient({d, 0, 0}).is_zero() &&
                                          !F.coefficient({0, d, 0}).is_zero() &&
                                          !F.coefficient({0, 0, d}).is_zero();
  if (!out.squarefree || !out.nonvanishing_at_coordinate_points)
    out.notes.emplace_back("F does not meet the plane-curve hypotheses");
  out.notes.emplace_back("smoothness of the plane curve is not verified");

  auto examine = [&](PowerTuple tuple, bool trivial) {
    ++out.examined;
    std::vector<RatFun> args;
    for (int i = 0; i < 3; ++i) args.push_back(RatFun(pow(tuple.f[static_cast<std::size_t>(i)],
                                                          static_cast<unsigned>(tuple.n[static_cast<std::size_t>(i)]))));
    const RatFun value = evaluate(F, args);
    ScanHit hit;
    hit.value = value.num();
    if (value.is_zero()) {
      hit.degenerate = true;
    } else {
      hit.power = perfect_power(value);
      if (!hit.power.is_power) return;
      hit.degenerate = trivial || !hit.power.exponent;
    }
    hit.f = std::move(tuple.f);
    hit.n = std::move(tuple.n);
    out.hits.push_back(std::move(hit));
  };

  const UniPoly one = UniPoly::constant(Rational(1));
  examine(PowerTuple{{one, one, one}, {m, m, m}}, true);
  for (long i = 0; i < samples; ++i) examine(power_tuple(instance_seed(seed, static_cast<std::uint64_t>(i)), max_degree, m, window), false);
  const bool nondegenerate = std::any_of(out.hits.begin(), out.hits.end(), [](const ScanHit& h) { return !h.degenerate; });
  if (!nondegenerate) out.notes.emplace_back("no nondegenerate hits");
  return out;
}

}  // namespace ffd
