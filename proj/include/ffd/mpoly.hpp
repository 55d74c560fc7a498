#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffd/funfield.hpp"

namespace ffd {

/// Exponents (i_1, ..., i_n) of a monomial x^i; length equals the ambient
/// variable count.
using ExponentVector = std::vector<unsigned>;

/// Sparse polynomial in n variables over K = Q(t). The term map is the
/// support I_F; zero coefficients are never stored.
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 0) : n_(nvars) {}

  static MPoly constant(std::size_t nvars, const RatFun& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return n_; }
  const std::map<ExponentVector, RatFun>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Adds c x^e (the exponent length must match nvars()).
  void add_term(const ExponentVector& e, const RatFun& c);
  RatFun coefficient(const ExponentVector& e) const;
  RatFun constant_term() const { return coefficient(ExponentVector(n_, 0)); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// True iff every term has the same total degree.
  bool is_homogeneous() const;
  /// True iff all coefficients lie in Q.
  bool has_constant_coefficients() const;

  MPoly derivative(std::size_t var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const RatFun& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(MPoly a, const RatFun& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Rendering in the CLI grammar; names.size() must equal nvars().
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_arity(const ExponentVector& e) const;
  std::size_t n_;
  std::map<ExponentVector, RatFun> terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

/// v_p(F) = min over the support of v_p(a_i). Throws for F = 0.
int gauss_order(const MPoly& F, const Place& p);

struct PolyHeights {
  long h = 0;        ///< sum_p -v_p(F) deg p
  long h_tilde = 0;  ///< sum_p -min{0, v_p(F)} deg p
};
PolyHeights poly_heights(const MPoly& F);

/// F(g_1, ..., g_n) as a reduced rational function (possibly zero).
/// Throws std::invalid_argument on arity mismatch.
RatFun evaluate(const MPoly& F, std::span<const RatFun> g);

/// Thrown when the support exceeds the subsum enumeration cap.
class SubsumInfeasible : public std::length_error {
 public:
  SubsumInfeasible() : std::length_error("subsum enumeration infeasible") {}
};

struct SubsumReport {
  static constexpr std::size_t kMaxSupport = 20;
  bool degenerate = false;
  /// Every nonempty subset of the support whose evaluated subsum vanishes.
  std::vector<std::vector<ExponentVector>> witnesses;
};

/// Enumerates all nonempty subsums of F at g (|I_F| <= 20, else SubsumInfeasible).
SubsumReport vanishing_subsums(const MPoly& F, std::span<const RatFun> g);

struct DegreeProfile {
  int total_degree = 0;
  std::vector<int> per_variable;
  bool has_monomial_factor = false;
  bool is_squarefree = true;
  bool nonzero_at_origin = false;
};
DegreeProfile degree_profile(const MPoly& F);

/// F / F(0, ..., 0); throws std::domain_error when F vanishes at the origin.
MPoly normalize_at_origin(const MPoly& F);

}  // namespace ffd
