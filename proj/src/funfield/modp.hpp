#pragma once

// Polynomial arithmetic over Z/p for word-size primes p < 2^31.
// Coefficients are stored low degree first and kept trimmed.

#include <cstdint>
#include <random>
#include <vector>

#include "ffd/rational.hpp"

namespace ffd::modp {

using Poly = std::vector<std::uint64_t>;

class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t prime() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
  std::uint64_t reduce(const Integer& z) const;

  Poly reduce(const std::vector<Integer>& z) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, std::uint64_t c) const;
  void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) const;
  Poly rem(const Poly& a, const Poly& b) const;
  Poly quo(const Poly& a, const Poly& b) const;
  Poly monic(const Poly& a) const;
  Poly gcd(Poly a, Poly b) const;
  /// s, t with s*a + t*b = gcd(a, b) (monic).
  Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) const;
  Poly derivative(const Poly& a) const;
  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }
  Poly powmod(const Poly& base, const Integer& e, const Poly& m) const;

  /// Monic irreducible factors of a monic squarefree f.
  std::vector<Poly> factor_squarefree(const Poly& f, std::mt19937_64& rng) const;
  /// Number of irreducible factors of a monic squarefree f (distinct-degree pass only).
  std::size_t count_factors(const Poly& f) const;

 private:
  std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) const;
  void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) const;

  std::uint64_t p_;
};

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }
void trim(Poly& a);

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);

}  // namespace ffd::modp
