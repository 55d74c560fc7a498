#include "ffd/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "modp.hpp"

namespace ffd {

namespace {

using ZPoly = std::vector<Integer>;

void trim_z(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim_z(out);
  return out;
}

// Coefficients reduced into the symmetric range (-m/2, m/2].
void symmetric_mod(ZPoly& a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim_z(a);
}

void positive_mod(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim_z(a);
}

void make_primitive(ZPoly& a) {
  trim_z(a);
  if (a.empty()) return;
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Exact division over Z; returns false if d does not divide f.
bool zdivides(const ZPoly& f, const ZPoly& d, ZPoly& quotient) {
  if (d.size() > f.size()) return false;
  ZPoly r = f;
  ZPoly q(f.size() - d.size() + 1, Integer(0));
  const Integer& lead = d.back();
  for (std::size_t k = r.size(); k >= d.size(); --k) {
    const std::size_t top = k - 1;
    if (r[top] == 0) continue;
    if (!mpz_divisible_p(r[top].get_mpz_t(), lead.get_mpz_t())) return false;
    Integer c = r[top] / lead;
    const std::size_t shift = top - (d.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  trim_z(q);
  quotient = std::move(q);
  return true;
}

ZPoly to_z(const modp::Poly& a) {
  ZPoly out;
  out.reserve(a.size());
  for (auto c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

struct Lifted {
  ZPoly g;
  ZPoly h;
};

// Lifts f = g0 * h0 (mod p), h0 monic and lc(g0) = lc(f) mod p, to p^k.
Lifted hensel_lift(const ZPoly& f, const modp::Poly& g0, const modp::Poly& h0, const modp::Field& field,
                   unsigned k) {
  modp::Poly s, t;
  field.xgcd(g0, h0, s, t);
  ZPoly g = to_z(g0);
  ZPoly h = to_z(h0);
  g.back() = f.back();
  const Integer p(static_cast<unsigned long>(field.prime()));
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly gh = zmul(g, h);
    ZPoly e = f;
    e.resize(std::max(e.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    trim_z(e);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    const modp::Poly ep = field.reduce(e);
    modp::Poly q, dh;
    field.divmod(field.mul(ep, s), h0, q, dh);
    const modp::Poly dg = field.add(field.mul(ep, t), field.mul(q, g0));
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pj * static_cast<unsigned long>(dg[i]);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += pj * static_cast<unsigned long>(dh[i]);
    pj *= p;
    const Integer lead = g.back();
    positive_mod(g, pj);
    g.back() = lead;
    positive_mod(h, pj);
  }
  return {std::move(g), std::move(h)};
}

// Monic factors of f modulo p^k, given monic factors of f mod p.
std::vector<ZPoly> multi_lift(const ZPoly& f, const std::vector<modp::Poly>& factors, const modp::Field& field,
                              unsigned k, const Integer& modulus) {
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly out = f;
    for (auto& c : out) c *= inv;
    positive_mod(out, modulus);
    return {out};
  }
  const std::size_t half = factors.size() / 2;
  std::vector<modp::Poly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<modp::Poly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  modp::Poly g0{field.reduce(f.back())};
  for (const auto& fac : left) g0 = field.mul(g0, fac);
  modp::Poly h0{1};
  for (const auto& fac : right) h0 = field.mul(h0, fac);
  Lifted lifted = hensel_lift(f, g0, h0, field, k);
  std::vector<ZPoly> out = multi_lift(lifted.g, left, field, k, modulus);
  std::vector<ZPoly> rest = multi_lift(lifted.h, right, field, k, modulus);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const Integer& modulus) {
  std::vector<ZPoly> result;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    do {
      const Integer lead = f.back();
      if (f.front() != 0) {
        Integer c = lead;
        for (auto i : idx) c = (c * lifted[i].front()) % modulus;
        ZPoly tmp{c};
        symmetric_mod(tmp, modulus);
        const Integer cc = tmp.empty() ? Integer(0) : tmp.front();
        if (cc == 0 || !mpz_divisible_p(Integer(lead * f.front()).get_mpz_t(), cc.get_mpz_t())) continue;
      }
      ZPoly cand{lead};
      for (auto i : idx) {
        cand = zmul(cand, lifted[i]);
        symmetric_mod(cand, modulus);
      }
      make_primitive(cand);
      ZPoly quotient;
      if (cand.size() >= 2 && zdivides(f, cand, quotient)) {
        result.push_back(cand);
        f = std::move(quotient);
        make_primitive(f);
        for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[j]));
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (f.size() >= 2) result.push_back(f);
  return result;
}

// f primitive, squarefree, positive leading coefficient.
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 1) return {f};

  ZPoly df(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<unsigned long>(i);

  constexpr int kCandidatePrimes = 6;
  std::uint64_t best_prime = 0;
  std::size_t best_count = 0;
  std::uint64_t p = 1U << 30;
  for (int found = 0; found < kCandidatePrimes;) {
    p = modp::next_prime(p + 1);
    modp::Field field(p);
    if (field.reduce(f.back()) == 0) continue;
    const modp::Poly fp = field.monic(field.reduce(f));
    if (modp::degree(field.gcd(fp, field.reduce(df))) != 0) continue;
    ++found;
    const std::size_t count = field.count_factors(fp);
    if (count == 1) return {f};
    if (best_prime == 0 || count < best_count) {
      best_prime = p;
      best_count = count;
    }
  }

  modp::Field field(best_prime);
  std::mt19937_64 rng(0x5eedf00dULL ^ static_cast<std::uint64_t>(deg));
  const std::vector<modp::Poly> factors = field.factor_squarefree(field.monic(field.reduce(f)), rng);

  Integer max_coef = 0;
  for (const auto& c : f) max_coef = std::max<Integer>(max_coef, abs(c));
  Integer bound = max_coef * static_cast<unsigned long>(deg + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(deg));
  bound *= 2 * abs(f.back());
  const Integer prime(static_cast<unsigned long>(best_prime));
  Integer modulus = prime;
  unsigned k = 1;
  while (modulus <= bound) {
    modulus *= prime;
    ++k;
  }
  std::vector<ZPoly> lifted = multi_lift(f, factors, field, k, modulus);
  return recombine(f, std::move(lifted), modulus);
}

}  // namespace

Factorization factor(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  Factorization out{f.leading(), {}};
  for (const auto& [part, e] : squarefree_decomposition(f)) {
    for (const auto& irr : factor_squarefree_primitive(integer_form(part).z))
      out.factors.emplace_back(from_integers(irr).monic(), e);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.is_constant()) return false;
  const Factorization fz = factor(f);
  return fz.factors.size() == 1 && fz.factors.front().second == 1;
}

}  // namespace ffd
