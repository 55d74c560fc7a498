#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffd::modp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::reduce(const Integer& z) const {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p_));
}

Poly Field::reduce(const std::vector<Integer>& z) const {
  Poly out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = reduce(z[i]);
  trim(out);
  return out;
}

Poly Field::add(const Poly& a, const Poly& b) const {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i]);
  trim(out);
  return out;
}

Poly Field::sub(const Poly& a, const Poly& b) const {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
  trim(out);
  return out;
}

Poly Field::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
  }
  trim(out);
  return out;
}

Poly Field::scale(const Poly& a, std::uint64_t c) const {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], c);
  trim(out);
  return out;
}

void Field::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) const {
  if (b.empty()) throw std::domain_error("polynomial division by zero mod p");
  r = a;
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv(b.back());
  for (std::size_t k = r.size(); k-- >= b.size();) {
    const std::uint64_t c = mul(r[k], lead_inv);
    q[k - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t idx = k - (b.size() - 1) + j;
      r[idx] = sub(r[idx], mul(c, b[j]));
    }
    if (k == 0) break;
  }
  trim(q);
  trim(r);
}

Poly Field::rem(const Poly& a, const Poly& b) const {
  Poly q, r;
  divmod(a, b, q, r);
  return r;
}

Poly Field::quo(const Poly& a, const Poly& b) const {
  Poly q, r;
  divmod(a, b, q, r);
  return q;
}

Poly Field::monic(const Poly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

Poly Field::gcd(Poly a, Poly b) const {
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly Field::xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) const {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{};
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  const std::uint64_t c = inv(r0.back());
  s = scale(s0, c);
  t = scale(t0, c);
  return scale(r0, c);
}

Poly Field::derivative(const Poly& a) const {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(a[i], i % p_);
  trim(out);
  return out;
}

Poly Field::powmod(const Poly& base, const Integer& e, const Poly& m) const {
  Poly result{1};
  result = rem(result, m);
  Poly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

std::vector<std::pair<Poly, int>> Field::distinct_degree(const Poly& f_in) const {
  std::vector<std::pair<Poly, int>> out;
  Poly f = f_in;
  const Poly x{0, 1};
  Poly h = rem(x, f);
  const Integer p(static_cast<unsigned long>(p_));
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, p, f);
    Poly g = gcd(sub(h, x), f);
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      f = quo(f, g);
      h = rem(h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

std::size_t Field::count_factors(const Poly& f) const {
  std::size_t count = 0;
  for (const auto& [g, d] : distinct_degree(f)) count += static_cast<std::size_t>(degree(g) / d);
  return count;
}

void Field::equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) const {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, p_ - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly b = sub(powmod(a, e, f), Poly{1});
    Poly g = gcd(b, f);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, rng, out);
      equal_degree(quo(f, g), d, rng, out);
      return;
    }
  }
}

std::vector<Poly> Field::factor_squarefree(const Poly& f, std::mt19937_64& rng) const {
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
  return out;
}

}  // namespace ffd::modp
