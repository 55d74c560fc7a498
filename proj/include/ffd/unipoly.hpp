#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ffd/rational.hpp"

namespace ffd {

/// Dense univariate polynomial in t over the rationals.
///
/// Coefficients are indexed by degree and trimmed so the leading coefficient
/// is nonzero. The zero polynomial has no coefficients and reports
/// kZeroDegree; callers must test is_zero() before doing degree arithmetic.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// The polynomial t - a.
  static UniPoly linear_root(const Rational& a);
  static UniPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i, zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational evaluate(const Rational& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical ordering: degree first, then coefficients from t^0 upwards.
  friend std::strong_ordering compare(const UniPoly& a, const UniPoly& b);
  friend bool operator<(const UniPoly& a, const UniPoly& b) { return compare(a, b) < 0; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Division that must be exact; throws std::domain_error otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);
UniPoly pow(const UniPoly& base, unsigned exponent);

/// Monic gcd (gcd(0, 0) = 0). Coprime inputs are detected modulo word-size
/// primes before falling back to a primitive remainder sequence over Z.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Number of times d divides a (d nonconstant, a nonzero); a is replaced by
/// the cofactor when rest is non-null.
int multiplicity(const UniPoly& d, const UniPoly& a, UniPoly* rest = nullptr);

/// Yun's squarefree decomposition: f = c * prod part_i^i with monic, squarefree,
/// pairwise coprime parts, returned in increasing exponent order.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

/// Product of the distinct monic irreducible factors of f.
UniPoly squarefree_part(const UniPoly& f);

/// Integer-coefficient view used by the modular and Hensel code: f equals
/// scale * sum z[i] t^i with z primitive and leading coefficient positive.
struct IntegerForm {
  std::vector<Integer> z;
  Rational scale;
};
IntegerForm integer_form(const UniPoly& f);
UniPoly from_integers(const std::vector<Integer>& z);

}  // namespace ffd
