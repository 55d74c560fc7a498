#include "ffd/unipoly.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "modp.hpp"

namespace ffd {

namespace {

using ZPoly = std::vector<Integer>;

void trim_z(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& a) {
  trim_z(a);
  if (a.empty()) return;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b over Z; b nonzero.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim_z(a);
  }
  return a;
}

constexpr std::array<std::uint64_t, 3> kCheckPrimes = {2147483647ULL, 2147483629ULL, 2147483587ULL};

// True only if a and b are certainly coprime over Q.
bool certainly_coprime(const ZPoly& a, const ZPoly& b) {
  for (std::uint64_t p : kCheckPrimes) {
    modp::Field field(p);
    if (field.reduce(a.back()) == 0 || field.reduce(b.back()) == 0) continue;
    if (modp::degree(field.gcd(field.reduce(a), field.reduce(b))) == 0) return true;
  }
  return false;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& a) { return UniPoly(std::vector<Rational>{-a, Rational(1)}); }

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  const Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::strong_ordering compare(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    if (i >= 1) mono = var;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (mono.empty())
      out += format_rational(mag);
    else if (mag == 1)
      out += mono;
    else
      out += format_rational(mag) + "*" + mono;
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  if (r.size() < bc.size()) return {UniPoly(), a};
  std::vector<Rational> q(r.size() - bc.size() + 1, Rational(0));
  const Rational lead_inv = 1 / b.leading();
  for (std::size_t k = r.size(); k >= bc.size(); --k) {
    const std::size_t top = k - 1;
    if (r[top] == 0) continue;
    const Rational c = r[top] * lead_inv;
    const std::size_t shift = top - (bc.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= c * bc[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& a) { return divmod(a, d).second.is_zero(); }

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

IntegerForm integer_form(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("integer form of the zero polynomial");
  Integer lcm_den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) z.push_back(c.get_num() * (lcm_den / c.get_den()));
  Integer g = content(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  Rational scale(g, lcm_den);
  scale.canonicalize();
  return {std::move(z), scale};
}

UniPoly from_integers(const std::vector<Integer>& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& v : z) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UniPoly::constant(Rational(1));
  ZPoly x = integer_form(a).z;
  ZPoly y = integer_form(b).z;
  if (certainly_coprime(x, y)) return UniPoly::constant(Rational(1));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = pseudo_rem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_integers(x).monic();
}

int multiplicity(const UniPoly& d, const UniPoly& a, UniPoly* rest) {
  if (d.is_constant()) throw std::domain_error("multiplicity of a constant divisor");
  if (a.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  int count = 0;
  UniPoly cur = a;
  for (;;) {
    auto [q, r] = divmod(cur, d);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++count;
  }
  if (rest) *rest = std::move(cur);
  return count;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, int>> parts;
  if (f.is_constant()) return parts;
  const UniPoly g = f.monic();
  const UniPoly dg = g.derivative();
  const UniPoly a0 = gcd(g, dg);
  UniPoly b = exact_div(g, a0);
  UniPoly d = exact_div(dg, a0) - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    UniPoly a = gcd(b, d);
    b = exact_div(b, a);
    UniPoly c = exact_div(d, a);
    d = c - b.derivative();
    if (!a.is_constant()) parts.emplace_back(std::move(a), i);
  }
  return parts;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (f.is_constant()) return UniPoly::constant(Rational(1));
  return exact_div(f, gcd(f, f.derivative())).monic();
}

}  // namespace ffd
