#pragma once

#include <map>
#include <vector>

#include "ffd/rational.hpp"

namespace ffd::detail {

// Dense recursive polynomial over Q. A level-L polynomial is a polynomial in
// variable L-1 whose coefficients have level L-1; level 0 is a rational.
class RPoly {
 public:
  explicit RPoly(int level = 0) : level_(level) {}
  static RPoly constant(int level, const Rational& q);
  /// c viewed as a polynomial of main degree 0 one level up.
  static RPoly embed(RPoly c);
  /// Builds from sparse terms; every exponent vector has length `level`,
  /// entry k being the exponent of variable k.
  static RPoly from_terms(int level, const std::map<std::vector<unsigned>, Rational>& terms);

  int level() const { return level_; }
  bool is_zero() const { return level_ == 0 ? value_ == 0 : coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RPoly& lc() const { return coeffs_.back(); }
  const Rational& value() const { return value_; }
  const std::vector<RPoly>& coeffs() const { return coeffs_; }

  /// Degree in variable k (k < level); -1 for zero.
  int degree_in(int k) const;
  /// The innermost leading rational coefficient.
  Rational base_lc() const;
  RPoly derivative(int k) const;

  RPoly operator-() const;
  RPoly& operator+=(const RPoly& b);
  RPoly& operator-=(const RPoly& b);
  RPoly& operator*=(const Rational& q);
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator*(const RPoly& a, const RPoly& b);
  friend bool operator==(const RPoly& a, const RPoly& b) = default;
  friend RPoly exact_div(const RPoly& a, const RPoly& b);
  friend RPoly pseudo_remainder(const RPoly& a, const RPoly& b);

 private:
  void trim();
  int level_;
  Rational value_;
  std::vector<RPoly> coeffs_;
};

/// Remainder of lc(b)^k a by b in the main variable, for some k >= 0.
RPoly pseudo_remainder(const RPoly& a, const RPoly& b);
/// a / b, which must be exact (std::logic_error otherwise).
RPoly exact_div(const RPoly& a, const RPoly& b);
/// Greatest common divisor normalized to base leading coefficient 1.
RPoly gcd(const RPoly& a, const RPoly& b);

}  // namespace ffd::detail
