#include "ffd/mpoly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "rpoly.hpp"

namespace ffd {

MPoly MPoly::constant(std::size_t nvars, const RatFun& c) {
  MPoly F(nvars);
  F.add_term(ExponentVector(nvars, 0), c);
  return F;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  ExponentVector e(nvars, 0);
  e[index] = 1;
  MPoly F(nvars);
  F.add_term(e, RatFun(Rational(1)));
  return F;
}

void MPoly::check_arity(const ExponentVector& e) const {
  if (e.size() != n_) throw std::invalid_argument("exponent vector length does not match variable count");
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExponentVector(n_, 0));
}

void MPoly::add_term(const ExponentVector& e, const RatFun& c) {
  check_arity(e);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RatFun MPoly::coefficient(const ExponentVector& e) const {
  check_arity(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? RatFun() : it->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

int MPoly::degree_in(std::size_t var) const {
  if (var >= n_) throw std::out_of_range("variable index out of range");
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool MPoly::is_homogeneous() const {
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& term) {
    return static_cast<int>(std::accumulate(term.first.begin(), term.first.end(), 0u)) == d;
  });
}

bool MPoly::has_constant_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) { return term.second.is_constant(); });
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= n_) throw std::out_of_range("variable index out of range");
  MPoly out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExponentVector f = e;
    --f[var];
    out.add_term(f, c * RatFun(Rational(static_cast<long>(e[var]))));
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) { return *this += -rhs; }

MPoly& MPoly::operator*=(const MPoly& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("variable count mismatch");
  MPoly out(n_);
  for (const auto& [e, c] : terms_)
    for (const auto& [f, d] : rhs.terms_) {
      ExponentVector g(n_);
      for (std::size_t i = 0; i < n_; ++i) g[i] = e[i] + f[i];
      out.add_term(g, c * d);
    }
  return *this = std::move(out);
}

MPoly& MPoly::operator*=(const RatFun& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, a] : terms_) a *= c;
  return *this;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != n_) throw std::invalid_argument("variable name count mismatch");
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const ExponentVector, RatFun>*> order;
  for (const auto& term : terms_) order.push_back(&term);
  // Graded order, highest first.
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    const auto da = std::accumulate(a->first.begin(), a->first.end(), 0u);
    const auto db = std::accumulate(b->first.begin(), b->first.end(), 0u);
    return da != db ? da > db : a->first > b->first;
  });
  std::string out;
  for (const auto* term : order) {
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (term->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (term->first[i] > 1) mono += "^" + std::to_string(term->first[i]);
    }
    const RatFun& c = term->second;
    bool negative = false;
    std::string body;
    if (c.is_constant()) {
      Rational q = c.constant_value();
      negative = q < 0;
      q = abs(q);
      if (mono.empty()) body = format_rational(q);
      else body = q == 1 ? mono : format_rational(q) + "*" + mono;
    } else {
      body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(base.nvars(), RatFun(Rational(1)));
  MPoly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

namespace {

void require_nonzero(const MPoly& F) {
  if (F.is_zero()) throw std::domain_error("zero polynomial");
}

std::vector<RatFun> coefficients(const MPoly& F) {
  std::vector<RatFun> out;
  for (const auto& [e, c] : F.terms()) out.push_back(c);
  return out;
}

// Term values a_i g^i in support order.
std::vector<RatFun> term_values(const MPoly& F, std::span<const RatFun> g) {
  if (g.size() != F.nvars()) throw std::invalid_argument("arity mismatch: expected " + std::to_string(F.nvars()) +
                                                        " values, got " + std::to_string(g.size()));
  std::vector<std::vector<RatFun>> powers(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) powers[j].push_back(RatFun(Rational(1)));
  std::vector<RatFun> out;
  for (const auto& [e, c] : F.terms()) {
    RatFun v = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      auto& pw = powers[j];
      while (pw.size() <= e[j]) pw.push_back(pw.back() * g[j]);
      v *= pw[e[j]];
    }
    out.push_back(std::move(v));
  }
  return out;
}

constexpr std::array<std::uint64_t, 4> kPrimes = {2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL};
constexpr std::array<long, 3> kPoints = {7919, -104729, 1299709};

std::uint64_t reduce(const Rational& q, std::uint64_t p, bool& ok) {
  const Integer num = q.get_num();
  const Integer den = q.get_den();
  const std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) {
    ok = false;
    return 0;
  }
  // Fermat inverse.
  std::uint64_t inv = 1, base = d, e = p - 2;
  while (e) {
    if (e & 1) inv = static_cast<std::uint64_t>(static_cast<unsigned __int128>(inv) * base % p);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
    e >>= 1;
  }
  const std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(n) * inv % p);
}

}  // namespace

int gauss_order(const MPoly& F, const Place& p) {
  require_nonzero(F);
  int lowest = 0;
  bool first = true;
  for (const auto& [e, c] : F.terms()) {
    const int v = order_at(c, p);
    lowest = first ? v : std::min(lowest, v);
    first = false;
  }
  return lowest;
}

PolyHeights poly_heights(const MPoly& F) {
  require_nonzero(F);
  const std::vector<RatFun> coeffs = coefficients(F);
  const LocalTable table = local_table(coeffs, PlaceSet());
  PolyHeights out;
  for (std::size_t i = 0; i < table.loci.size(); ++i) {
    const int v = **std::min_element(table.orders[i].begin(), table.orders[i].end());
    const long w = table.loci[i].weight;
    out.h -= v * w;
    out.h_tilde += std::max(0, -v) * w;
  }
  return out;
}

RatFun evaluate(const MPoly& F, std::span<const RatFun> g) {
  RatFun sum;
  for (const auto& v : term_values(F, g)) sum += v;
  return sum;
}

SubsumReport vanishing_subsums(const MPoly& F, std::span<const RatFun> g) {
  const std::size_t m = F.support_size();
  if (m > SubsumReport::kMaxSupport) throw SubsumInfeasible();
  const std::vector<RatFun> values = term_values(F, g);

  // Over a common denominator every subsum is a polynomial; its images at a few
  // points modulo two primes screen the 2^m subsets, and survivors are
  // confirmed exactly.
  UniPoly common = UniPoly::constant(Rational(1));
  for (const auto& v : values) common = exact_div(common * v.den(), gcd(common, v.den()));
  std::vector<UniPoly> nums;
  for (const auto& v : values) nums.push_back(v.num() * exact_div(common, v.den()));

  std::vector<std::vector<std::uint64_t>> residues(m);
  std::vector<std::uint64_t> moduli;
  for (std::uint64_t p : kPrimes) {
    if (moduli.size() == 2) break;
    bool ok = true;
    std::vector<std::vector<std::uint64_t>> cand(m);
    for (std::size_t k = 0; k < m && ok; ++k)
      for (long x : kPoints) cand[k].push_back(reduce(nums[k].evaluate(Rational(x)), p, ok));
    if (!ok) continue;
    moduli.push_back(p);
    for (std::size_t k = 0; k < m; ++k) residues[k].insert(residues[k].end(), cand[k].begin(), cand[k].end());
  }
  const std::size_t width = moduli.size() * kPoints.size();
  auto modulus = [&](std::size_t slot) { return moduli[slot / kPoints.size()]; };

  SubsumReport report;
  std::vector<std::uint32_t> hits;
  std::vector<std::uint64_t> acc(width, 0);
  std::uint32_t mask = 0;
  const std::uint32_t limit = m == 0 ? 0 : (1u << m);
  for (std::uint32_t i = 1; i < limit; ++i) {
    const int bit = std::countr_zero(i);
    mask ^= 1u << bit;
    const bool adding = (mask >> bit) & 1u;
    bool all_zero = true;
    for (std::size_t s = 0; s < width; ++s) {
      const std::uint64_t p = modulus(s);
      const std::uint64_t r = residues[static_cast<std::size_t>(bit)][s];
      acc[s] = adding ? (acc[s] + r) % p : (acc[s] + p - r) % p;
      all_zero = all_zero && acc[s] == 0;
    }
    if (!all_zero) continue;
    UniPoly exact;
    for (std::size_t k = 0; k < m; ++k)
      if ((mask >> k) & 1u) exact += nums[k];
    if (exact.is_zero()) hits.push_back(mask);
  }
  std::sort(hits.begin(), hits.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // Lexicographic on index lists: the first differing index decides.
    return ((a >> std::countr_zero(a ^ b)) & 1u) != 0;
  });
  std::vector<const ExponentVector*> support;
  for (const auto& [e, c] : F.terms()) support.push_back(&e);
  for (std::uint32_t h : hits) {
    std::vector<ExponentVector> w;
    for (std::size_t k = 0; k < m; ++k)
      if ((h >> k) & 1u) w.push_back(*support[k]);
    report.witnesses.push_back(std::move(w));
  }
  report.degenerate = !report.witnesses.empty();
  return report;
}

DegreeProfile degree_profile(const MPoly& F) {
  require_nonzero(F);
  const std::size_t n = F.nvars();
  DegreeProfile out;
  out.total_degree = F.total_degree();
  for (std::size_t i = 0; i < n; ++i) {
    out.per_variable.push_back(F.degree_in(i));
    unsigned lowest = ~0u;
    for (const auto& [e, c] : F.terms()) lowest = std::min(lowest, e[i]);
    out.has_monomial_factor = out.has_monomial_factor || lowest > 0;
  }
  out.nonzero_at_origin = !F.constant_term().is_zero();

  // Clear denominators so every coefficient lies in Q[t].
  UniPoly common = UniPoly::constant(Rational(1));
  for (const auto& [e, c] : F.terms()) common = exact_div(common * c.den(), gcd(common, c.den()));
  std::vector<std::pair<const ExponentVector*, UniPoly>> cleared;
  int t_degree = 0;
  for (const auto& [e, c] : F.terms()) {
    cleared.emplace_back(&e, c.num() * exact_div(common, c.den()));
    t_degree = std::max(t_degree, cleared.back().second.degree());
  }
  const auto at = [&](const Rational& t0) {
    std::map<std::vector<unsigned>, Rational> terms;
    for (const auto& [e, p] : cleared) terms[*e] += p.evaluate(t0);
    return detail::RPoly::from_terms(static_cast<int>(n), terms);
  };

  // F has a repeated factor involving x_i iff R = Res_{x_i}(F, dF/dx_i) vanishes
  // in Q[t, other x]. Where t0 keeps deg_{x_i}, R(t0) is the resultant of the
  // specialization, and a nonzero R has at most deg_t R <= (2m - 1) deg_t F
  // roots t0. So one squarefree specialization proves squarefreeness and
  // deg_t R + 1 non-squarefree ones prove the opposite.
  for (std::size_t i = 0; i < n && out.is_squarefree; ++i) {
    const int m = out.per_variable[i];
    if (m <= 1) continue;
    const int var = static_cast<int>(i);
    const long needed = static_cast<long>(2 * m - 1) * t_degree + 1;
    long repeated = 0;
    for (long k = 0; repeated < needed; ++k) {
      const Rational t0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
      const detail::RPoly P = at(t0);
      if (P.degree_in(var) != m) continue;
      if (gcd(P, P.derivative(var)).degree_in(var) == 0) break;
      ++repeated;
    }
    out.is_squarefree = repeated < needed;
  }
  return out;
}

MPoly normalize_at_origin(const MPoly& F) {
  const RatFun c = F.constant_term();
  if (c.is_zero()) throw std::domain_error("polynomial vanishes at the origin");
  return F * c.inverse();
}

}  // namespace ffd
