#include <algorithm>
#include <cctype>
#include <set>

#include "ffd/cli.hpp"
#include "ffd/factor.hpp"

namespace ffd::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables) : text_(text), vars_(variables) {}

  MPoly parse() {
    MPoly value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expression() {
    MPoly value = term();
    for (;;) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  MPoly term() {
    MPoly value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const MPoly divisor = unary();
        if (!divisor.is_constant()) throw ParseError("division by an expression in the variables", at);
        const RatFun c = divisor.constant_term();
        if (c.is_zero()) throw ParseError("division by zero", at);
        value *= c.inverse();
      } else {
        return value;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    return pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
  }

  MPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly::constant(vars_.size(), RatFun(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "t") return MPoly::constant(vars_.size(), RatFun::t());
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
      return MPoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v == "t") throw std::invalid_argument("'t' is reserved for the function field variable");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  return Parser(text, variables).parse();
}

RatFun parse_ratfun(std::string_view text) { return parse_mpoly(text, {}).constant_term(); }

std::vector<std::string> infer_variables(std::string_view text) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    std::string name(text.substr(start, i - start));
    if (name != "t") names.insert(std::move(name));
  }
  if (names.empty()) return {};
  long top = -1;
  bool indexed = true, zero = false;
  for (const auto& n : names) {
    if (n.size() < 2 || n[0] != 'x' || !std::all_of(n.begin() + 1, n.end(), [](unsigned char c) { return std::isdigit(c) != 0; }) || n.size() > 4) {
      indexed = false;
      break;
    }
    const long k = std::stol(n.substr(1));
    top = std::max(top, k);
    zero = zero || k == 0;
  }
  std::vector<std::string> out;
  if (indexed) {
    for (long k = zero ? 0 : 1; k <= top; ++k) out.push_back("x" + std::to_string(k));
    return out;
  }
  const std::vector<std::string> aliases = {"x", "y", "z"};
  std::size_t last = 0;
  for (const auto& n : names) {
    const auto it = std::find(aliases.begin(), aliases.end(), n);
    if (it == aliases.end()) return std::vector<std::string>(names.begin(), names.end());
    last = std::max(last, static_cast<std::size_t>(it - aliases.begin()) + 1);
  }
  return {aliases.begin(), aliases.begin() + static_cast<std::ptrdiff_t>(last)};
}

Place parse_place(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "inf") return Place::infinity();
  if (s.starts_with("irr:")) {
    const RatFun q = parse_ratfun(s.substr(4));
    if (!q.is_polynomial()) throw std::invalid_argument("place polynomial must be a polynomial");
    if (q.num().degree() == 1) return Place::rational(-q.num().coefficients()[0] / q.num().coefficients()[1]);
    return Place::conjugacy_class(q.num());
  }
  try {
    return Place::rational(parse_rational(s));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed place '" + std::string(s) + "' (expected inf, a rational or irr:<q>)");
  }
}

PlaceSet parse_places(std::string_view text) {
  PlaceSet S;
  if (trim(text).empty()) return S;
  // Commas inside "irr:" polynomials cannot occur, so a plain split suffices.
  for (const auto part : split(text, ',')) S.insert(parse_place(part));
  return S;
}

std::vector<RatFun> parse_ratfun_list(std::string_view text) {
  std::vector<RatFun> out;
  for (const auto part : split(text, ',')) out.push_back(parse_ratfun(part));
  return out;
}

}  // namespace ffd::cli
