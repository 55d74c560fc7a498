#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ffd {

/// Exact elements of the constant field. Always canonical (coprime, positive
/// denominator) after construction through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" always, including integers ("3/1"). Used in machine reports.
std::string render_rational(const Rational& q);

/// "p" for integers, "p/q" otherwise. Used inside rendered expressions.
std::string format_rational(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ffd
