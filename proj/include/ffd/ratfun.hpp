#pragma once

#include <string>

#include "ffd/unipoly.hpp"

namespace ffd {

/// An element of K = Q(t): a reduced fraction num/den with den monic.
/// Zero is stored as 0/1.
class RatFun {
 public:
  RatFun() : den_(UniPoly::constant(Rational(1))) {}
  RatFun(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed in K
  explicit RatFun(UniPoly num);
  /// Reduces num/den; throws std::domain_error when den is zero.
  RatFun(UniPoly num, UniPoly den);

  static RatFun t() { return RatFun(UniPoly::variable()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The constant value; throws if not constant.
  Rational constant_value() const;

  RatFun inverse() const;
  RatFun operator-() const;
  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  RatFun& operator*=(const RatFun& rhs);
  RatFun& operator/=(const RatFun& rhs);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Rendering re-parseable by the expression grammar.
  std::string to_string() const;

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

/// Integer powers, negative exponents allowed for nonzero bases.
RatFun pow(const RatFun& base, long exponent);

}  // namespace ffd
