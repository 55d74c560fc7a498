#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ffd/unipoly.hpp"

namespace ffd {

/// A closed point of P^1 over Q: t = a, the point at infinity, or the Galois
/// orbit of the roots of a monic irreducible q of degree >= 2. The degree is
/// the number of geometric points the place stands for.
class Place {
 public:
  /// Declaration order is the canonical order: rational places, then
  /// conjugacy classes, then infinity.
  enum class Kind { Rational, ConjugacyClass, Infinity };

  static Place rational(const Rational& a);
  static Place infinity();
  /// Validates that q is irreducible over Q of degree >= 2 (made monic).
  static Place conjugacy_class(const UniPoly& q);
  /// Place of an irreducible factor already known to be irreducible.
  static Place from_irreducible(const UniPoly& q);

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  int degree() const { return kind_ == Kind::ConjugacyClass ? poly_.degree() : 1; }
  /// Root a of a Rational place.
  Rational root() const;
  /// Monic local polynomial (t - a or q); throws for infinity.
  const UniPoly& poly() const;

  /// Text encoding: "inf", "a" (decimal or fraction), or "irr:<q>".
  std::string encode() const;

  friend std::strong_ordering operator<=>(const Place& a, const Place& b);
  friend bool operator==(const Place& a, const Place& b) { return (a <=> b) == 0; }

 private:
  Place(Kind kind, UniPoly poly) : kind_(kind), poly_(std::move(poly)) {}
  Kind kind_;
  UniPoly poly_;  // t - a for rational places, q for conjugacy classes, empty for infinity
};

/// Finite set of places on P^1 (genus fixed at 0), kept sorted and unique.
class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(std::vector<Place> places);

  void insert(const Place& p);
  bool contains(const Place& p) const;
  bool contains_infinity() const;
  bool empty() const { return places_.empty(); }
  std::size_t count() const { return places_.size(); }
  /// Degree-weighted cardinality |S| over the algebraic closure.
  long geometric_size() const;
  static constexpr int genus() { return 0; }

  const std::vector<Place>& places() const { return places_; }
  auto begin() const { return places_.begin(); }
  auto end() const { return places_.end(); }

  /// Comma-separated encodings, "" for the empty set.
  std::string encode() const;

  friend bool operator==(const PlaceSet& a, const PlaceSet& b) { return a.places_ == b.places_; }

 private:
  std::vector<Place> places_;
};

}  // namespace ffd
