#include "rpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffd/unipoly.hpp"

namespace ffd::detail {

RPoly RPoly::constant(int level, const Rational& q) {
  if (level == 0) {
    RPoly r(0);
    r.value_ = q;
    return r;
  }
  RPoly r(level);
  r.coeffs_.push_back(constant(level - 1, q));
  r.trim();
  return r;
}

RPoly RPoly::embed(RPoly c) {
  RPoly r(c.level_ + 1);
  r.coeffs_.push_back(std::move(c));
  r.trim();
  return r;
}

RPoly RPoly::from_terms(int level, const std::map<std::vector<unsigned>, Rational>& terms) {
  RPoly r(level);
  if (level == 0) {
    for (const auto& [e, q] : terms) r.value_ += q;
    return r;
  }
  std::vector<std::map<std::vector<unsigned>, Rational>> groups;
  for (const auto& [e, q] : terms) {
    const unsigned d = e[static_cast<std::size_t>(level) - 1];
    if (groups.size() <= d) groups.resize(d + 1);
    groups[d][std::vector<unsigned>(e.begin(), e.begin() + level - 1)] += q;
  }
  for (const auto& g : groups) r.coeffs_.push_back(from_terms(level - 1, g));
  r.trim();
  return r;
}

void RPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int RPoly::degree_in(int k) const {
  if (is_zero()) return -1;
  if (k == level_ - 1) return degree();
  int d = 0;
  for (const auto& c : coeffs_) d = std::max(d, c.degree_in(k));
  return d;
}

Rational RPoly::base_lc() const { return level_ == 0 ? value_ : lc().base_lc(); }

RPoly RPoly::derivative(int k) const {
  RPoly r(level_);
  if (level_ == 0) return r;
  if (k == level_ - 1) {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      RPoly c = coeffs_[i];
      c *= Rational(static_cast<long>(i));
      r.coeffs_.push_back(std::move(c));
    }
  } else {
    for (const auto& c : coeffs_) r.coeffs_.push_back(c.derivative(k));
  }
  r.trim();
  return r;
}

RPoly RPoly::operator-() const {
  RPoly r = *this;
  r *= Rational(-1);
  return r;
}

RPoly& RPoly::operator+=(const RPoly& b) {
  if (level_ == 0) {
    value_ += b.value_;
    return *this;
  }
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), RPoly(level_ - 1));
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  trim();
  return *this;
}

RPoly& RPoly::operator-=(const RPoly& b) { return *this += -b; }

RPoly& RPoly::operator*=(const Rational& q) {
  if (level_ == 0) {
    value_ *= q;
    return *this;
  }
  if (q == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= q;
  return *this;
}

RPoly operator*(const RPoly& a, const RPoly& b) {
  if (a.level_ == 0) return RPoly::constant(0, a.value_ * b.value_);
  RPoly r(a.level_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, RPoly(a.level_ - 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

RPoly exact_div(const RPoly& a, const RPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.level_ == 0) return RPoly::constant(0, a.value_ / b.value_);
  RPoly q(a.level_);
  RPoly rem = a;
  if (rem.degree() >= b.degree())
    q.coeffs_.assign(static_cast<std::size_t>(rem.degree() - b.degree()) + 1, RPoly(a.level_ - 1));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto s = static_cast<std::size_t>(rem.degree() - b.degree());
    RPoly c = exact_div(rem.lc(), b.lc());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem.coeffs_[i + s] -= c * b.coeffs_[i];
    rem.trim();
    q.coeffs_[s] = std::move(c);
  }
  if (!rem.is_zero()) throw std::logic_error("inexact multivariate division");
  q.trim();
  return q;
}

RPoly pseudo_remainder(const RPoly& a, const RPoly& b) {
  RPoly r = a;
  const RPoly& l = b.lc();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto s = static_cast<std::size_t>(r.degree() - b.degree());
    const RPoly c = r.lc();
    for (auto& ri : r.coeffs_) ri = l * ri;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i + s] -= c * b.coeffs_[i];
    r.trim();
  }
  return r;
}

namespace {

RPoly normalized(RPoly a) {
  if (!a.is_zero()) a *= Rational(1 / a.base_lc());
  return a;
}

UniPoly to_unipoly(const RPoly& a) {
  std::vector<Rational> c;
  for (const auto& x : a.coeffs()) c.push_back(x.value());
  return UniPoly(std::move(c));
}

RPoly from_unipoly(const UniPoly& u) {
  std::map<std::vector<unsigned>, Rational> terms;
  for (int i = 0; i <= u.degree(); ++i) terms[{static_cast<unsigned>(i)}] = u.coeff(i);
  return RPoly::from_terms(1, terms);
}

bool is_unit(const RPoly& c) {
  if (c.level() == 0) return !c.is_zero();
  return c.degree() == 0 && is_unit(c.lc());
}

// Gcd of the main-variable coefficients, with early exit on a unit.
RPoly content(const RPoly& a) {
  RPoly c(a.level() - 1);
  for (const auto& x : a.coeffs()) {
    c = gcd(c, x);
    if (is_unit(c)) return RPoly::constant(a.level() - 1, Rational(1));
  }
  return c;
}

RPoly primitive_part(const RPoly& a, const RPoly& c) {
  const RPoly scaled = exact_div(a, RPoly::embed(c));
  return normalized(scaled);
}

}  // namespace

RPoly gcd(const RPoly& a, const RPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.level() == 0) return RPoly::constant(0, Rational(1));
  if (a.level() == 1) return from_unipoly(gcd(to_unipoly(a), to_unipoly(b)));
  const RPoly ca = content(a);
  const RPoly cb = content(b);
  RPoly pa = primitive_part(a, ca);
  RPoly pb = primitive_part(b, cb);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    RPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = r.is_zero() ? std::move(r) : primitive_part(r, content(r));
  }
  return normalized(pa * RPoly::embed(gcd(ca, cb)));
}

}  // namespace ffd::detail
