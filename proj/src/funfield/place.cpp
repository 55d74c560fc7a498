#include "ffd/place.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffd/factor.hpp"

namespace ffd {

Place Place::rational(const Rational& a) { return Place(Kind::Rational, UniPoly::linear_root(a)); }

Place Place::infinity() { return Place(Kind::Infinity, UniPoly()); }

Place Place::conjugacy_class(const UniPoly& q) {
  if (q.is_zero() || q.degree() < 2)
    throw std::invalid_argument("conjugacy-class place needs a polynomial of degree >= 2");
  if (!is_irreducible(q))
    throw std::invalid_argument("conjugacy-class polynomial " + q.to_string() + " is reducible over Q");
  return Place(Kind::ConjugacyClass, q.monic());
}

Place Place::from_irreducible(const UniPoly& q) {
  const UniPoly m = q.monic();
  if (m.degree() == 1) return Place(Kind::Rational, m);
  if (m.degree() < 1) throw std::invalid_argument("place of a constant polynomial");
  return Place(Kind::ConjugacyClass, m);
}

Rational Place::root() const {
  if (kind_ != Kind::Rational) throw std::logic_error("root() of a non-rational place");
  return -poly_.coeff(0);
}

const UniPoly& Place::poly() const {
  if (kind_ == Kind::Infinity) throw std::logic_error("the place at infinity has no local polynomial");
  return poly_;
}

std::string Place::encode() const {
  switch (kind_) {
    case Kind::Infinity:
      return "inf";
    case Kind::Rational:
      return format_rational(Rational(-poly_.coeff(0)));
    case Kind::ConjugacyClass:
      return "irr:" + poly_.to_string();
  }
  return {};
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  switch (a.kind_) {
    case Place::Kind::Infinity:
      return std::strong_ordering::equal;
    case Place::Kind::Rational: {
      // t - a: larger root means smaller constant coefficient.
      const int c = cmp(b.poly_.coeff(0), a.poly_.coeff(0));
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case Place::Kind::ConjugacyClass:
      return compare(a.poly_, b.poly_);
  }
  return std::strong_ordering::equal;
}

PlaceSet::PlaceSet(std::vector<Place> places) : places_(std::move(places)) {
  std::sort(places_.begin(), places_.end());
  places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
}

void PlaceSet::insert(const Place& p) {
  auto it = std::lower_bound(places_.begin(), places_.end(), p);
  if (it == places_.end() || *it != p) places_.insert(it, p);
}

bool PlaceSet::contains(const Place& p) const { return std::binary_search(places_.begin(), places_.end(), p); }

bool PlaceSet::contains_infinity() const { return !places_.empty() && places_.back().is_infinity(); }

long PlaceSet::geometric_size() const {
  long total = 0;
  for (const auto& p : places_) total += p.degree();
  return total;
}

std::string PlaceSet::encode() const {
  std::string out;
  for (const auto& p : places_) {
    if (!out.empty()) out += ",";
    out += p.encode();
  }
  return out;
}

}  // namespace ffd
