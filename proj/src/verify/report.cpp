#include "ffd/report.hpp"

namespace ffd {

Json to_json(const Precondition& p) {
  Json j;
  j["name"] = p.name;
  j["satisfied"] = p.satisfied;
  j["witness"] = p.witness;
  return j;
}

Json to_json(const InequalityReport& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["asserted"] = r.asserted;
  j["holds"] = r.holds;
  j["lhs"] = render_rational(r.lhs);
  j["rhs"] = render_rational(r.rhs);
  j["slack"] = render_rational(r.slack);
  j["preconditions"] = Json::array();
  for (const auto& p : r.preconditions) j["preconditions"].push_back(to_json(p));
  j["notes"] = r.notes;
  return j;
}

Json to_json(const TrichotomyReport& r) {
  Json j;
  j["hypothesis_ok"] = r.hypothesis_ok;
  j["hypothesis_terms"] = Json::array();
  for (const auto& [lhs, h] : r.hypothesis_terms) j["hypothesis_terms"].push_back({{"l_times_count", lhs}, {"height", h}});
  j["height_bounded"] = r.height_bounded;
  j["max_height"] = r.max_height;
  j["height_bound"] = render_rational(r.height_bound);
  j["clause_a"] = to_json(r.clause_a);
  j["clause_b"] = r.clause_b ? to_json(*r.clause_b) : Json("not_applicable");
  j["notes"] = r.notes;
  return j;
}

Json to_json(const CampanaVerdict& v) {
  Json j;
  j["integral"] = v.integral;
  j["violations"] = Json::array();
  for (const auto& x : v.violations)
    j["violations"].push_back({{"component", x.component}, {"place", x.place.encode()}, {"lambda", x.lambda}});
  return j;
}

Json to_json(const TruncationGapReport& r) {
  Json j;
  j["integrality"] = to_json(r.integrality);
  j["N1"] = r.N1;
  j["N"] = r.N;
  j["h"] = r.h;
  j["half_truncation"] = to_json(r.half_truncation);
  j["lower_bound"] = to_json(r.lower_bound);
  return j;
}

Json to_json(const PerfectPower& p) {
  Json j;
  j["is_power"] = p.is_power;
  j["exponent"] = p.exponent ? Json(*p.exponent) : Json("inf");
  j["base"] = p.base.to_string();
  j["unit"] = render_rational(p.unit);
  return j;
}

Json to_json(const ScanReport& r) {
  Json j;
  j["squarefree"] = r.squarefree;
  j["nonvanishing_at_coordinate_points"] = r.nonvanishing_at_coordinate_points;
  j["examined"] = r.examined;
  j["skipped_not_coprime"] = r.skipped_not_coprime;
  j["hits"] = Json::array();
  for (const auto& h : r.hits) {
    Json hit;
    hit["f"] = Json::array();
    for (const auto& f : h.f) hit["f"].push_back(f.to_string());
    hit["n"] = h.n;
    hit["value"] = h.value.to_string();
    hit["power"] = h.value.is_zero() ? Json(nullptr) : to_json(h.power);
    hit["degenerate"] = h.degenerate;
    j["hits"].push_back(std::move(hit));
  }
  j["notes"] = r.notes;
  return j;
}

Json to_json(const CountingReport& r) {
  Json j;
  j["total"] = r.total;
  Json t;
  for (const auto& [m, v] : r.truncated) t[std::to_string(m)] = v;
  j["truncated"] = t;
  j["per_place"] = Json::array();
  for (const auto& [p, e] : r.per_place) j["per_place"].push_back({{"place", p.encode()}, {"multiplicity", e}});
  return j;
}

Json to_json(const Locus& l) {
  Json j;
  if (l.place) {
    j["place"] = l.place->encode();
  } else {
    j["roots_of"] = l.poly.to_string();
  }
  j["weight"] = l.weight;
  j["in_S"] = l.in_s;
  return j;
}

Json to_json(const DivisorCounting& d) {
  Json j;
  j["m_S"] = d.m_S;
  j["N_S"] = d.N_S;
  j["N_S_truncated"] = d.N_S_truncated;
  j["h"] = d.h;
  j["contributions"] = Json::array();
  for (const auto& [locus, value] : d.contributions) {
    Json c = to_json(locus);
    c["lambda"] = value;
    j["contributions"].push_back(std::move(c));
  }
  return j;
}

}  // namespace ffd
