#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ffd/mpoly.hpp"

namespace ffd::cli {

/// Malformed input; `position` is a 0-based offset into the parsed text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: integers, t, the declared variables, + - * / ^ and parentheses.
/// Exponents are nonnegative integers; divisors must not involve the variables.
MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& variables);
RatFun parse_ratfun(std::string_view text);

/// Variables named in `text`: x0..xn if x0 occurs, x1..xn for indexed names,
/// otherwise the prefix of (x, y, z) up to the last alias used.
std::vector<std::string> infer_variables(std::string_view text);

/// "inf", a rational "a" (t = a) or "irr:<q>" with q irreducible of degree >= 2.
Place parse_place(std::string_view text);
/// Comma-separated places; "" is the empty set.
PlaceSet parse_places(std::string_view text);
/// Comma-separated expressions in t.
std::vector<RatFun> parse_ratfun_list(std::string_view text);

/// Exit codes of `run`.
enum ExitCode : int { kHolds = 0, kFails = 1, kDegenerate = 2, kUsage = 3 };

/// Runs one command line (argv without the program name), writing the JSON
/// report to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffd::cli
