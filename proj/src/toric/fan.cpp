#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "chart.hpp"
#include "ffd/toric.hpp"
#include "linalg.hpp"

namespace ffd {

namespace {

void require_cone(const Fan& fan, std::size_t cone) {
  if (cone >= fan.cones.size()) throw std::invalid_argument("cone " + std::to_string(cone) + " is not a maximal cone");
}

detail::QMatrix generator_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
  // Columns are the generators.
  const auto n = static_cast<std::size_t>(fan.dim);
  detail::QMatrix r(n, std::vector<Rational>(cone.size()));
  for (std::size_t l = 0; l < cone.size(); ++l)
    for (std::size_t j = 0; j < n; ++j) r[j][l] = fan.rays[cone[l]][j];
  return r;
}

std::vector<IntVector> probes(int dim) {
  const long span = dim <= 3 ? 2 : 1;
  std::vector<IntVector> out;
  IntVector v(static_cast<std::size_t>(dim), -span);
  for (;;) {
    if (std::any_of(v.begin(), v.end(), [](long x) { return x != 0; })) out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == span) v[i++] = -span;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<IntVector> dual_basis(const Fan& fan, std::size_t cone) {
  require_cone(fan, cone);
  const auto& gens = fan.cones[cone];
  if (gens.size() != static_cast<std::size_t>(fan.dim))
    throw std::domain_error("cone " + std::to_string(cone) + " is not full-dimensional");
  const QMatrix inv = inverse(generator_matrix(fan, gens));
  std::vector<IntVector> out;
  for (const auto& row : inv) {
    IntVector m;
    for (const auto& x : row) {
      if (x.get_den() != 1) throw std::domain_error("cone " + std::to_string(cone) + " is not unimodular");
      m.push_back(x.get_num().get_si());
    }
    out.push_back(std::move(m));
  }
  return out;
}

long pairing(const IntVector& m, std::span<const long> w) {
  long s = 0;
  for (std::size_t j = 0; j < m.size(); ++j) s += m[j] * w[j];
  return s;
}

Atlas::Atlas(const Fan& fan) {
  for (std::size_t c = 0; c < fan.cones.size(); ++c) duals.push_back(dual_basis(fan, c));
}

std::optional<std::size_t> Atlas::containing(std::span<const long> w) const {
  for (std::size_t c = 0; c < duals.size(); ++c)
    if (std::all_of(duals[c].begin(), duals[c].end(), [&](const IntVector& m) { return pairing(m, w) >= 0; }))
      return c;
  return std::nullopt;
}

std::size_t Atlas::integral_chart(std::span<const long> w) const {
  // A chart coordinate u^m has valuation <m, w>, so this is the cone containing w.
  if (auto c = containing(w)) return *c;
  throw std::domain_error("no maximal cone contains the valuation vector; is the fan complete?");
}

}  // namespace detail

Fan projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective space needs n >= 1");
  Fan fan;
  fan.name = "P" + std::to_string(n);
  fan.dim = n;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i) {
    IntVector e(un, 0);
    e[i] = 1;
    fan.rays.push_back(e);
  }
  fan.rays.push_back(IntVector(un, -1));
  for (std::size_t k = 0; k <= un; ++k) {
    const std::size_t omitted = k == 0 ? un : k - 1;
    std::vector<std::size_t> cone;
    for (std::size_t r = 0; r <= un; ++r)
      if (r != omitted) cone.push_back(r);
    fan.cones.push_back(cone);
  }
  return fan;
}

Fan hirzebruch(int a) {
  if (a < 0) throw std::invalid_argument("Hirzebruch index must be nonnegative");
  Fan fan;
  fan.name = "F" + std::to_string(a);
  fan.dim = 2;
  fan.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  fan.cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return fan;
}

Fan product(const Fan& a, const Fan& b) {
  Fan fan;
  fan.name = a.name + "x" + b.name;
  fan.dim = a.dim + b.dim;
  for (const auto& r : a.rays) {
    IntVector v = r;
    v.resize(static_cast<std::size_t>(fan.dim), 0);
    fan.rays.push_back(v);
  }
  for (const auto& r : b.rays) {
    IntVector v(static_cast<std::size_t>(a.dim), 0);
    v.insert(v.end(), r.begin(), r.end());
    fan.rays.push_back(v);
  }
  for (const auto& ca : a.cones)
    for (const auto& cb : b.cones) {
      std::vector<std::size_t> cone = ca;
      for (std::size_t r : cb) cone.push_back(r + a.rays.size());
      fan.cones.push_back(cone);
    }
  return fan;
}

Fan builtin_fan(std::string_view name) {
  auto single = [](std::string_view part) -> Fan {
    if (part.size() == 2 && (part[0] == 'P' || part[0] == 'F') && std::isdigit(static_cast<unsigned char>(part[1]))) {
      const int k = part[1] - '0';
      if (part[0] == 'P' && k >= 1 && k <= 4) return projective_space(k);
      if (part[0] == 'F' && k <= 3) return hirzebruch(k);
    }
    throw std::invalid_argument("unknown built-in fan '" + std::string(part) + "'");
  };
  std::optional<Fan> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = name.find('x', start);
    Fan f = single(name.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    out = out ? product(*out, f) : f;
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  out->name = std::string(name);
  return *out;
}

Fan fan_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("fan file is not valid JSON: ") + e.what());
  }
  try {
    Fan fan;
    fan.name = doc.value("name", std::string("custom"));
    fan.dim = doc.at("dim").get<int>();
    fan.rays = doc.at("rays").get<std::vector<IntVector>>();
    fan.cones = doc.at("cones").get<std::vector<std::vector<std::size_t>>>();
    return fan;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed fan file: ") + e.what());
  }
}

std::string fan_to_json(const Fan& fan) {
  nlohmann::ordered_json doc;
  doc["name"] = fan.name;
  doc["dim"] = fan.dim;
  doc["rays"] = fan.rays;
  doc["cones"] = fan.cones;
  return doc.dump();
}

FanVerdict validate_fan(const Fan& fan) {
  if (fan.dim < 1) throw std::invalid_argument("fan dimension must be positive");
  const auto n = static_cast<std::size_t>(fan.dim);
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& r = fan.rays[i];
    if (r.size() != n) throw std::invalid_argument("ray " + std::to_string(i) + " has the wrong length");
    if (std::all_of(r.begin(), r.end(), [](long x) { return x == 0; }))
      throw std::invalid_argument("malformed ray " + std::to_string(i) + ": zero vector");
  }
  for (std::size_t c = 0; c < fan.cones.size(); ++c)
    for (std::size_t r : fan.cones[c])
      if (r >= fan.rays.size()) throw std::invalid_argument("cone " + std::to_string(c) + " names a missing ray");

  FanVerdict v;
  v.smooth = true;
  bool well_formed = !fan.cones.empty();
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    long g = 0;
    for (long x : fan.rays[i]) g = std::gcd(g, x);
    if (g != 1) {
      v.smooth = false;
      v.issues.push_back("ray " + std::to_string(i) + " is not primitive");
    }
  }
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    auto sorted = fan.cones[c];
    std::sort(sorted.begin(), sorted.end());
    if (fan.cones[c].size() != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      v.smooth = false;
      well_formed = false;
      v.issues.push_back("cone " + std::to_string(c) + " does not have " + std::to_string(n) + " distinct rays");
      continue;
    }
    const Rational d = detail::determinant(generator_matrix(fan, fan.cones[c]));
    if (abs(d) != 1) {
      v.smooth = false;
      v.issues.push_back("cone " + std::to_string(c) + " has determinant " + format_rational(d));
      if (d == 0) well_formed = false;
    }
  }

  bool complete = well_formed;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const bool used = std::any_of(fan.cones.begin(), fan.cones.end(), [&](const auto& cone) {
      return std::find(cone.begin(), cone.end(), i) != cone.end();
    });
    if (!used) {
      complete = false;
      v.issues.push_back("ray " + std::to_string(i) + " lies in no maximal cone");
    }
  }
  if (well_formed) {
    // Every wall must separate exactly two maximal cones lying on opposite sides.
    std::map<std::vector<std::size_t>, std::vector<int>> walls;
    for (const auto& cone : fan.cones)
      for (std::size_t k = 0; k < cone.size(); ++k) {
        std::vector<std::size_t> wall;
        for (std::size_t l = 0; l < cone.size(); ++l)
          if (l != k) wall.push_back(cone[l]);
        std::sort(wall.begin(), wall.end());
        std::vector<std::size_t> ordered = wall;
        ordered.push_back(cone[k]);
        walls[wall].push_back(sgn(detail::determinant(generator_matrix(fan, ordered))));
      }
    for (const auto& [wall, sides] : walls) {
      if (sides.size() != 2 || sides[0] * sides[1] >= 0) {
        complete = false;
        v.issues.push_back("a wall is not shared by exactly two opposite cones");
        break;
      }
    }
    std::vector<detail::QMatrix> inverses;
    for (const auto& cone : fan.cones) inverses.push_back(detail::inverse(generator_matrix(fan, cone)));
    auto covered = [&](const IntVector& w) {
      return std::any_of(inverses.begin(), inverses.end(), [&](const detail::QMatrix& inv) {
        return std::all_of(inv.begin(), inv.end(), [&](const std::vector<Rational>& row) {
          Rational s = 0;
          for (std::size_t j = 0; j < n; ++j) s += row[j] * w[j];
          return s >= 0;
        });
      });
    };
    for (const auto& w : probes(fan.dim)) {
      if (!covered(w)) {
        complete = false;
        v.issues.push_back("probe vector outside the support of the fan");
        break;
      }
    }
  }
  v.complete = complete;
  v.admissible = v.smooth && v.complete;
  v.admissibility_assumed = v.admissible && fan.dim >= 3;
  return v;
}

}  // namespace ffd
