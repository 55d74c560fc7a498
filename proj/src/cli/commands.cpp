#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ffd/cli.hpp"
#include "ffd/report.hpp"

namespace ffd::cli {

namespace {

// Bad user input discovered after argument parsing (unknown fan, wrong point arity, ...).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> warnings;
  int code = kHolds;
};

int status_code(Status s) {
  switch (s) {
    case Status::Holds:
      return kHolds;
    case Status::Fails:
      return kFails;
    default:
      return kDegenerate;
  }
}

Json render(std::span<const RatFun> fs) {
  Json j = Json::array();
  for (const auto& f : fs) j.push_back(f.to_string());
  return j;
}

std::vector<RatFun> parse_all(const std::vector<std::string>& texts) {
  std::vector<RatFun> out;
  for (const auto& s : texts) out.push_back(parse_ratfun(s));
  return out;
}

Fan load_fan(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return fan_from_json(buffer.str());
  }
  try {
    return builtin_fan(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError("unknown fan '" + spec + "': not a file or built-in name");
  }
}

TorusPoint load_point(const Fan& fan, const std::string& text) {
  const std::vector<RatFun> coords = parse_ratfun_list(text);
  const auto n = static_cast<std::size_t>(fan.dim);
  if (coords.size() == n + 1) return torus_point(coords);
  if (coords.size() != n)
    throw UsageError("point needs " + std::to_string(n) + " torus or " + std::to_string(n + 1) +
                     " homogeneous coordinates");
  return coords;
}

std::vector<std::string> homogeneous_names(int dim) {
  std::vector<std::string> names;
  for (int i = 0; i <= dim; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::size_t find_ray(const Fan& fan, const std::string& text) {
  IntVector v;
  for (const RatFun& x : parse_ratfun_list(text)) {
    if (!x.is_constant() || x.constant_value().get_den() != 1) throw UsageError("ray entries must be integers");
    v.push_back(x.constant_value().get_num().get_si());
  }
  const auto it = std::find(fan.rays.begin(), fan.rays.end(), v);
  if (it == fan.rays.end()) throw UsageError("ray (" + text + ") is not a ray of the fan");
  return static_cast<std::size_t>(it - fan.rays.begin());
}

// "<target>:<weight>" where target is "ray<k>" or a homogeneous form in x0..xn.
OrbifoldComponent parse_component(const Fan& fan, const std::string& spec) {
  const auto colon = spec.rfind(':');
  const std::string target = spec.substr(0, colon);
  const Rational eps = colon == std::string::npos ? Rational(1) : parse_rational(spec.substr(colon + 1));
  if (target.starts_with("ray")) {
    const std::size_t k = std::stoul(target.substr(3));
    if (k >= fan.rays.size()) throw UsageError("ray index out of range in '" + spec + "'");
    return {k, eps, target};
  }
  return {HypersurfaceDivisor::homogeneous(parse_mpoly(target, homogeneous_names(fan.dim))), eps, target};
}

std::vector<std::string> pick_variables(const std::string& given, const std::string& text) {
  if (given.empty()) return infer_variables(text);
  std::vector<std::string> names;
  std::stringstream in(given);
  for (std::string name; std::getline(in, name, ',');) names.push_back(name);
  return names;
}

Json batch(BatchKind kind, std::size_t count, std::uint64_t seed, unsigned threads, int max_degree, Outcome& o) {
  BatchOptions opts{kind, seed, count, threads, max_degree};
  o.inputs = {{"batch", count}, {"seed", seed}, {"max_degree", max_degree}};
  Json r = run_batch(opts);
  const auto& t = r["tallies"];
  o.code = t["fails"].get<long>() > 0 ? kFails : kHolds;
  if (t["errors"].get<long>() > 0) o.warnings.push_back("some instances raised errors");
  return r;
}

Json weil_json(const WeilValue& w) { return {{"value", w.value}, {"ambiguity", w.ambiguity}, {"cone", w.cone}}; }

Json polytope_json(const LatticePolytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (const auto& q : v) row.push_back(render_rational(q));
    verts.push_back(std::move(row));
  }
  return {{"dim", p.dim}, {"vertices", verts}, {"affine_dimension", p.affine_dimension()}, {"big", is_big(p)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Function-field Diophantine toolkit: heights, counting functions and inequality checkers over Q(t)"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::uint64_t seed = 0;
  if (const char* env = std::getenv("FFD_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "ignoring malformed FFD_SEED\n";
    }
  }

  // Shared option storage.
  std::string f_text, place_text, s_text, mode = "zeros", fan_spec, point_text, ray_text, divisor_text, vars;
  std::string a_text, kind_text = "bm", eps_text = "1/3";
  std::vector<std::string> exprs, components;
  long m = 0, ell = 6, c0 = 100, window = 2, samples = 32, n_param = 1, d_param = 1;
  int max_degree = 30, deg = 3;
  std::size_t batch_count = 0;
  unsigned threads = 0;

  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", seed, "base seed (default $FFD_SEED or 0)"); };
  auto add_batch = [&](CLI::App* sub) {
    sub->add_option("--batch", batch_count, "run N seeded instances instead of the given input");
    add_seed(sub);
    sub->add_option("--threads", threads, "worker threads (0 = hardware)");
    sub->add_option("--max-degree", max_degree, "degree bound for generated instances");
  };

  std::map<std::string, std::function<Json(Outcome&)>> handlers;

  auto* h = app.add_subcommand("height", "h(f) and the divisor of f");
  h->add_option("f", f_text, "rational function in t")->required();
  handlers["height"] = [&](Outcome& o) {
    const RatFun f = parse_ratfun(f_text);
    o.inputs = {{"f", f.to_string()}};
    Json div = Json::array();
    for (const auto& [p, e] : divisor(f)) div.push_back({{"place", p.encode()}, {"order", e}});
    return Json{{"h", height(f)}, {"divisor", div}};
  };

  auto* ord = app.add_subcommand("order", "v_p(f)");
  ord->add_option("f", f_text)->required();
  ord->add_option("--place", place_text, "inf, a rational or irr:<q>")->required();
  handlers["order"] = [&](Outcome& o) {
    const RatFun f = parse_ratfun(f_text);
    const Place p = parse_place(place_text);
    o.inputs = {{"f", f.to_string()}, {"place", p.encode()}};
    return Json{{"order", order_at(f, p)}};
  };

  auto* cnt = app.add_subcommand("count", "counting function N_{0,S} or N_{inf,S}");
  cnt->add_option("f", f_text)->required();
  cnt->add_option("--S", s_text, "comma-separated places");
  cnt->add_option("--mode", mode)->check(CLI::IsMember({"zeros", "poles"}));
  cnt->add_option("--m", m, "truncation level (omit for none)")->check(CLI::PositiveNumber);
  handlers["count"] = [&](Outcome& o) {
    const RatFun f = parse_ratfun(f_text);
    const PlaceSet S = parse_places(s_text);
    const Truncation t = m > 0 ? Truncation(m) : std::nullopt;
    o.inputs = {{"f", f.to_string()}, {"S", S.encode()}, {"mode", mode}, {"m", m > 0 ? Json(m) : Json("none")}};
    const CountingReport r = counting(f, S, mode == "zeros" ? CountMode::Zeros : CountMode::Poles, t);
    Json j = to_json(r);
    j["N"] = m > 0 ? r.truncated.at(m) : r.total;
    return j;
  };

  auto* ph = app.add_subcommand("projheight", "h(f_0 : ... : f_n)");
  ph->add_option("f", exprs, "coordinates")->required();
  handlers["projheight"] = [&](Outcome& o) {
    const std::vector<RatFun> fs = parse_all(exprs);
    o.inputs = {{"f", render(fs)}};
    return Json{{"h", projective_height(fs)}};
  };

  auto* bm = app.add_subcommand("check-bm", "Brownawell-Masser inequality for f_0 + ... + f_n = 1");
  bm->add_option("f", exprs, "summands");
  bm->add_option("--S", s_text);
  add_batch(bm);
  handlers["check-bm"] = [&](Outcome& o) -> Json {
    if (batch_count) return batch(BatchKind::BrownawellMasser, batch_count, seed, threads, max_degree, o);
    const std::vector<RatFun> fs = parse_all(exprs);
    const PlaceSet S = parse_places(s_text);
    o.inputs = {{"f", render(fs)}, {"S", S.encode()}};
    const InequalityReport r = brownawell_masser(fs, S);
    o.code = status_code(r.status);
    return to_json(r);
  };

  auto* prox = app.add_subcommand("check-prox", "proximity bound for F at S-units g");
  prox->add_option("F", f_text, "polynomial in x1..xn (or x, y, z)");
  prox->add_option("g", exprs, "S-units");
  prox->add_option("--S", s_text);
  prox->add_option("--vars", vars, "comma-separated variable names");
  add_batch(prox);
  handlers["check-prox"] = [&](Outcome& o) -> Json {
    if (batch_count) return batch(BatchKind::Proximity, batch_count, seed, threads, max_degree, o);
    const auto names = pick_variables(vars, f_text);
    const MPoly F = parse_mpoly(f_text, names);
    const std::vector<RatFun> g = parse_all(exprs);
    const PlaceSet S = parse_places(s_text);
    o.inputs = {{"F", F.to_string(names)}, {"variables", names}, {"g", render(g)}, {"S", S.encode()}};
    const InequalityReport r = proximity_bound(F, g, S);
    o.code = status_code(r.status);
    return to_json(r);
  };

  auto* abc = app.add_subcommand("check-abc", "abc trichotomy clauses for G at g");
  abc->add_option("G", f_text)->required();
  abc->add_option("g", exprs)->required();
  abc->add_option("--S", s_text);
  abc->add_option("--vars", vars);
  abc->add_option("--eps", eps_text, "epsilon in (0, 1]");
  abc->add_option("--ell", ell)->check(CLI::PositiveNumber);
  abc->add_option("--c0", c0)->check(CLI::PositiveNumber);
  handlers["check-abc"] = [&](Outcome& o) {
    const auto names = pick_variables(vars, f_text);
    const MPoly G = parse_mpoly(f_text, names);
    const std::vector<RatFun> g = parse_all(exprs);
    const PlaceSet S = parse_places(s_text);
    const AbcParameters params{parse_rational(eps_text), ell, c0};
    o.inputs = {{"G", G.to_string(names)}, {"variables", names}, {"g", render(g)}, {"S", S.encode()},
                {"eps", render_rational(params.epsilon)}, {"ell", ell}, {"c0", c0}};
    const TrichotomyReport r = abc_trichotomy(G, g, S, params);
    if (r.clause_a.status == Status::Degenerate) o.code = kDegenerate;
    return to_json(r);
  };

  auto* tw = app.add_subcommand("toric-weil", "local Weil value of a boundary divisor or hypersurface");
  tw->add_option("--fan", fan_spec, "built-in name or JSON file")->required();
  tw->add_option("--point", point_text, "torus or homogeneous coordinates, comma-separated")->required();
  tw->add_option("--place", place_text)->required();
  auto* ray_opt = tw->add_option("--ray", ray_text, "ray vector, e.g. \"-1,-1\"");
  tw->add_option("--divisor", divisor_text, "homogeneous form in x0..xn")->excludes(ray_opt);
  handlers["toric-weil"] = [&](Outcome& o) -> Json {
    const Fan fan = load_fan(fan_spec);
    const TorusPoint u = load_point(fan, point_text);
    const Place p = parse_place(place_text);
    o.inputs = {{"fan", fan.name}, {"point", render(u)}, {"place", p.encode()}};
    if (!divisor_text.empty()) {
      const auto names = homogeneous_names(fan.dim);
      const auto D = HypersurfaceDivisor::homogeneous(parse_mpoly(divisor_text, names));
      o.inputs["divisor"] = D.form().to_string(names);
      return weil_json(hypersurface_weil(fan, D, u, p));
    }
    if (ray_text.empty()) throw UsageError("give --ray or --divisor");
    const std::size_t ray = find_ray(fan, ray_text);
    o.inputs["ray"] = fan.rays[ray];
    return Json{{"ray_index", ray}, {"value", boundary_weil(fan, ray, u, p)}};
  };

  auto* cv = app.add_subcommand("campana-verify", "Campana (Delta, S)-integrality of a point");
  cv->add_option("--fan", fan_spec)->default_val("P2");
  cv->add_option("--point", point_text);
  cv->add_option("--S", s_text);
  cv->add_option("--component", components, "\"<form or rayK>:<weight>\", repeatable");
  add_batch(cv);
  handlers["campana-verify"] = [&](Outcome& o) -> Json {
    if (batch_count) return batch(BatchKind::CampanaTruncation, batch_count, seed, threads, max_degree, o);
    if (point_text.empty()) throw UsageError("--point is required without --batch");
    const Fan fan = load_fan(fan_spec);
    const TorusPoint u = load_point(fan, point_text);
    const PlaceSet S = parse_places(s_text);
    std::vector<OrbifoldComponent> delta;
    for (const auto& c : components) delta.push_back(parse_component(fan, c));
    Json comps = Json::array();
    for (const auto& c : delta) comps.push_back({{"label", c.label}, {"epsilon", render_rational(c.epsilon)}});
    o.inputs = {{"fan", fan.name}, {"point", render(u)}, {"S", S.encode()}, {"delta", comps}};
    const CampanaVerdict v = is_campana_integral(fan, delta, u, S);
    o.code = v.integral ? kHolds : kFails;
    return to_json(v);
  };

  auto* poly = app.add_subcommand("polytope", "polytope of a torus-invariant divisor sum a_rho D_rho");
  poly->add_option("--fan", fan_spec)->required();
  poly->add_option("--a", a_text, "coefficients per ray (default all 1, i.e. D_0)");
  handlers["polytope"] = [&](Outcome& o) {
    const Fan fan = load_fan(fan_spec);
    std::vector<Rational> a(fan.rays.size(), Rational(1));
    if (!a_text.empty()) {
      a.clear();
      for (const RatFun& x : parse_ratfun_list(a_text)) {
        if (!x.is_constant()) throw UsageError("coefficients must be rational numbers");
        a.push_back(x.constant_value());
      }
    }
    Json aj = Json::array();
    for (const auto& q : a) aj.push_back(render_rational(q));
    o.inputs = {{"fan", fan.name}, {"a", aj}};
    return polytope_json(invariant_divisor_polytope(fan, a));
  };

  auto* gen = app.add_subcommand("gen", "seeded instance generator");
  gen->add_option("--kind", kind_text)->check(CLI::IsMember({"bm", "prox", "campana", "sunit", "power"}));
  add_seed(gen);
  gen->add_option("--n", n_param, "number of unknowns")->check(CLI::PositiveNumber);
  gen->add_option("--d", d_param, "degree of F (prox)")->check(CLI::PositiveNumber);
  gen->add_option("--max-degree", max_degree);
  gen->add_option("--S", s_text, "support for sunit");
  gen->add_option("--ell", ell);
  gen->add_option("--m", m, "exponent floor (power)");
  gen->add_option("--window", window);
  handlers["gen"] = [&](Outcome& o) -> Json {
    o.inputs = {{"kind", kind_text}, {"seed", seed}};
    const int n = static_cast<int>(n_param);
    if (kind_text == "bm") {
      const BmInstance b = bm_instance(seed, n, max_degree);
      return Json{{"f", render(b.fs)}, {"S", b.S.encode()}, {"resamples", b.resamples}};
    }
    if (kind_text == "prox") {
      const ProximityInstance p = proximity_instance(seed, n, static_cast<int>(d_param));
      std::vector<std::string> names;
      for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
      return Json{{"F", p.F.to_string(names)}, {"g", render(p.g)}, {"S", p.S.encode()}, {"resamples", p.resamples}};
    }
    if (kind_text == "campana") {
      const CampanaInstance c = campana_point(seed, ell, std::min(max_degree, 6));
      return Json{{"point", render(c.homogeneous)}, {"u", render(c.u)}, {"resamples", c.resamples}};
    }
    if (kind_text == "sunit") return Json{{"units", render(s_unit_tuple(seed, parse_places(s_text), n))}};
    const PowerTuple t = power_tuple(seed, std::min(max_degree, 6), std::max(m, 1L), window);
    Json fs = Json::array();
    for (const auto& f : t.f) fs.push_back(f.to_string());
    return Json{{"f", fs}, {"n", t.n}};
  };

  auto* scan = app.add_subcommand("scan-power", "perfect-power scan of F(f0^n0, f1^n1, f2^n2)");
  scan->add_option("F", f_text, "homogeneous form in x, y, z with constant coefficients")->required();
  scan->add_option("--deg", deg, "degree bound for f_i");
  scan->add_option("--m", m, "exponent floor")->default_val(3);
  scan->add_option("--window", window);
  scan->add_option("--samples", samples);
  add_seed(scan);
  handlers["scan-power"] = [&](Outcome& o) {
    const auto names = pick_variables(vars, f_text);
    const MPoly F = parse_mpoly(f_text, names);
    o.inputs = {{"F", F.to_string(names)}, {"deg", deg}, {"m", m}, {"window", window}, {"samples", samples},
                {"seed", seed}};
    return to_json(perfect_power_scan(F, deg, m, window, samples, seed));
  };

  auto* fv = app.add_subcommand("fan-validate", "smoothness, completeness and admissibility of a fan");
  fv->add_option("--fan", fan_spec)->required();
  handlers["fan-validate"] = [&](Outcome& o) {
    const Fan fan = load_fan(fan_spec);
    o.inputs = {{"fan", fan.name}};
    const FanVerdict v = validate_fan(fan);
    o.code = v.smooth && v.complete ? kHolds : kFails;
    return Json{{"smooth", v.smooth},
                {"complete", v.complete},
                {"admissible", v.admissible},
                {"admissibility_assumed", v.admissibility_assumed},
                {"issues", v.issues},
                {"fan", Json::parse(fan_to_json(fan))}};
  };

  // No short options exist besides -h, so "-t" or "-1/2" is an expression; a
  // leading space keeps the option parser from claiming it.
  std::vector<std::string> shielded;
  for (const auto& a : args)
    shielded.push_back(a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h" ? " " + a : a);
  std::vector<const char*> argv{"ffd"};
  for (const auto& a : shielded) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Outcome o;
  Json report;
  report["command"] = verb;
  try {
    o.result = handlers.at(verb)(o);
  } catch (const ParseError& e) {
    err << "ffd " << verb << ": " << e.what() << "\n";
    o.code = kUsage;
    o.result = {{"error", e.what()}};
  } catch (const UsageError& e) {
    err << "ffd " << verb << ": " << e.what() << "\n";
    o.code = kUsage;
    o.result = {{"error", e.what()}};
  } catch (const std::exception& e) {
    // Rejected inputs of the checkers (sum != 1, bad G, ...) count as precondition failures.
    o.code = kDegenerate;
    o.result = {{"error", e.what()}};
  }
  report["inputs"] = o.inputs;
  report["result"] = o.result;
  report["warnings"] = o.warnings;
  report["exit_code"] = o.code;
  out << report.dump(2) << "\n";
  return o.code;
}

}  // namespace ffd::cli
