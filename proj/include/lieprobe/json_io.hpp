#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lieprobe/error.hpp"
#include "lieprobe/geometry.hpp"
#include "lieprobe/recognize.hpp"

namespace lieprobe {

using ojson = nlohmann::ordered_json;

/// {"n_points": n, "lines": [[...], ...], "labels": [...]} on one line.
inline std::string geometry_to_json(const Geometry& d) {
  ojson j;
  j["n_points"] = d.n_points();
  j["lines"] = d.lines();
  if (!d.labels().empty()) j["labels"] = d.labels();
  return j.dump() + "\n";
}

inline Geometry geometry_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("geometry JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("n_points") || !j.contains("lines")) {
      throw Error(ErrorCode::MalformedInput, "geometry JSON needs n_points and lines");
    }
    int n = j.at("n_points").get<int>();
    auto lines = j.at("lines").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Geometry(n, std::move(lines), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("geometry JSON: ") + e.what());
  }
}

inline ojson to_json(const Diagnostic& d) {
  ojson j;
  j["code"] = d.code;
  j["message"] = d.message;
  j["witness"] = d.witness;
  return j;
}

inline ojson to_json(const FamilyLabel& f) {
  ojson j;
  j["family"] = to_string(f.family);
  j["n"] = f.n;
  j["q"] = f.q;
  j["name"] = f.name();
  return j;
}

inline ojson to_json(const SrgParameters& s) {
  ojson j;
  j["strongly_regular"] = s.strongly_regular;
  if (s.strongly_regular) {
    j["v"] = s.v;
    j["k"] = s.k;
    j["lambda"] = s.lambda;
    j["mu"] = s.mu;
  } else {
    j["detail"] = s.detail;
    j["witness"] = s.witness;
  }
  return j;
}

inline ojson to_json(const RecognitionReport& r) {
  ojson j;
  j["outcome"] = r.outcome_string();
  j["family"] = r.outcome ? to_json(*r.outcome) : ojson(nullptr);
  j["q"] = r.q;
  j["branch"] = r.branch.empty() ? ojson(nullptr) : ojson(r.branch);
  j["identification_level"] = r.identification_level.empty() ? ojson(nullptr) : ojson(r.identification_level);
  ojson ev;
  ojson locals = ojson::array();
  for (const auto& l : r.evidence.local_families) {
    ojson e;
    e["vertex"] = l.vertex;
    e["family"] = l.family;
    e["iso_confirmed"] = l.iso_confirmed;
    locals.push_back(e);
  }
  ev["local_families"] = locals;
  ev["locals_checked"] = r.evidence.locals_checked;
  if (r.evidence.max_singular_dims) {
    ev["max_singular_dimensions"] = {r.evidence.max_singular_dims->first, r.evidence.max_singular_dims->second};
  } else {
    ev["max_singular_dimensions"] = nullptr;
  }
  if (r.evidence.perps) {
    const auto& p = *r.evidence.perps;
    ojson pj;
    pj["pairs"] = p.pairs;
    pj["grids"] = p.grids;
    pj["single_points"] = p.single_points;
    ojson sizes, ranks;
    for (auto [k, v] : p.sizes) sizes[std::to_string(k)] = v;
    for (auto [k, v] : p.ranks) ranks[std::to_string(k)] = v;
    pj["sizes"] = sizes.is_null() ? ojson::object() : sizes;
    pj["polar_ranks"] = ranks.is_null() ? ojson::object() : ranks;
    ev["perp_classification"] = pj;
  } else {
    ev["perp_classification"] = nullptr;
  }
  ev["strong"] = r.evidence.strong ? ojson(*r.evidence.strong) : ojson(nullptr);
  ev["uniform"] = r.evidence.uniform ? ojson(*r.evidence.uniform) : ojson(nullptr);
  ev["diameter"] = r.evidence.diameter ? ojson(*r.evidence.diameter) : ojson(nullptr);
  ev["points"] = r.evidence.points;
  ev["lines"] = r.evidence.lines ? ojson(*r.evidence.lines) : ojson(nullptr);
  ev["srg"] = r.evidence.srg ? to_json(*r.evidence.srg) : ojson(nullptr);
  j["evidence"] = ev;
  ojson diags = ojson::array();
  for (const auto& d : r.diagnostics) diags.push_back(to_json(d));
  j["diagnostics"] = diags;
  j["seed"] = r.seed ? ojson(*r.seed) : ojson(nullptr);
  return j;
}

inline std::string report_to_json(const RecognitionReport& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace lieprobe
