#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "ffd/report.hpp"

namespace ffd {

namespace {

std::vector<std::string> variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Json render_all(std::span<const RatFun> fs) {
  Json j = Json::array();
  for (const auto& f : fs) j.push_back(f.to_string());
  return j;
}

Json bm_case(std::uint64_t seed, std::size_t index, int max_degree) {
  const int n = 1 + static_cast<int>(index % 3);
  const BmInstance inst = bm_instance(seed, n, max_degree);
  Json j;
  j["resamples"] = inst.resamples;
  j["input"] = {{"n", n}, {"fs", render_all(inst.fs)}, {"S", inst.S.encode()}};
  j["report"] = to_json(brownawell_masser(inst.fs, inst.S));
  return j;
}

Json proximity_case(std::uint64_t seed, std::size_t index) {
  static constexpr int shapes[3][2] = {{1, 1}, {2, 1}, {2, 2}};
  const auto [n, d] = shapes[index % 3];
  const ProximityInstance inst = proximity_instance(seed, n, d);
  Json j;
  j["resamples"] = inst.resamples;
  j["input"] = {{"n", n},
                {"d", d},
                {"F", inst.F.to_string(variable_names(inst.F.nvars()))},
                {"g", render_all(inst.g)},
                {"S", inst.S.encode()}};
  j["report"] = to_json(proximity_bound(inst.F, inst.g, inst.S));
  return j;
}

Json campana_case(std::uint64_t seed, std::size_t index) {
  const long ell = 2 + static_cast<long>(index % 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(1, 5), sign(0, 1);
  std::vector<Rational> a;
  for (int i = 0; i < 3; ++i) a.emplace_back(sign(rng) ? coef(rng) : -coef(rng));
  const CampanaInstance inst = campana_point(rng(), ell, 3, a);

  MPoly form(3);
  for (std::size_t i = 0; i < 3; ++i) form += MPoly::variable(3, i) * RatFun(a[i]);
  const auto A = HypersurfaceDivisor::homogeneous(form);
  const std::vector<OrbifoldComponent> delta = {{A, Rational(1, 2), "A"}};
  const PlaceSet S({Place::infinity()});
  const Fan p2 = projective_space(2);
  Json j;
  j["resamples"] = inst.resamples;
  j["input"] = {{"l", ell},
                {"A", form.to_string({"x0", "x1", "x2"})},
                {"point", render_all(inst.homogeneous)},
                {"S", S.encode()}};
  const TruncationGapReport r = campana_truncation_gap(p2, A, delta, inst.u, S, Rational(1, 3));
  j["report"] = to_json(r.half_truncation);
  j["detail"] = to_json(r);
  return j;
}

}  // namespace

std::optional<BatchKind> parse_batch_kind(std::string_view name) {
  if (name == "bm") return BatchKind::BrownawellMasser;
  if (name == "prox") return BatchKind::Proximity;
  if (name == "campana") return BatchKind::CampanaTruncation;
  return std::nullopt;
}

std::string to_string(BatchKind kind) {
  switch (kind) {
    case BatchKind::BrownawellMasser:
      return "bm";
    case BatchKind::Proximity:
      return "prox";
    case BatchKind::CampanaTruncation:
      return "campana";
  }
  return "bm";
}

Json run_batch(const BatchOptions& options) {
  std::vector<Json> results(options.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= options.count) return;
      const std::uint64_t seed = instance_seed(options.seed, i);
      Json j;
      try {
        switch (options.kind) {
          case BatchKind::BrownawellMasser:
            j = bm_case(seed, i, options.max_degree);
            break;
          case BatchKind::Proximity:
            j = proximity_case(seed, i);
            break;
          case BatchKind::CampanaTruncation:
            j = campana_case(seed, i);
            break;
        }
      } catch (const std::exception& e) {
        j = Json();
        j["error"] = e.what();
      }
      Json entry;
      entry["index"] = i;
      entry["seed"] = seed;
      entry.update(j);
      results[i] = std::move(entry);
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(options.count, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::map<std::string, long> tallies = {{"holds", 0},      {"fails", 0},     {"degenerate", 0}, {"precondition_failed", 0},
                                         {"unchecked", 0}, {"errors", 0},    {"resamples", 0}};
  for (const auto& r : results) {
    if (r.contains("error")) {
      ++tallies["errors"];
      continue;
    }
    ++tallies[r["report"]["status"].get<std::string>()];
    tallies["resamples"] += r["resamples"].get<long>();
  }
  Json out;
  out["run"] = {{"kind", to_string(options.kind)},
                {"seed", options.seed},
                {"count", options.count},
                {"parameters", {{"max_degree", options.max_degree}}}};
  out["instances"] = std::move(results);
  Json t;
  for (const char* key : {"holds", "fails", "degenerate", "precondition_failed", "unchecked", "errors", "resamples"})
    t[key] = tallies[key];
  out["tallies"] = t;
  return out;
}

}  // namespace ffd
