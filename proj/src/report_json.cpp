#include "kmatch/report_json.hpp"

#include "kmatch/canon.hpp"

namespace kmatch::json {

namespace {

Json optional_id(const std::optional<EdgeId>& id) { return id ? Json(*id) : Json(nullptr); }

}  // namespace

Json matching_set(const MatchingSet& set) {
  Json list = Json::array();
  for (const auto& m : set.matchings) list.push_back(m.edges);
  Json out;
  out["count"] = set.matchings.size();
  out["exhaustive"] = set.exhaustive;
  out["matchings"] = std::move(list);
  return out;
}

Json verdict(const MinimalityVerdict& v, unsigned k) {
  Json out;
  out["k"] = k;
  out["k_matchable"] = v.is_k_matchable;
  out["minimal"] = v.is_minimal;
  out["witness_edge"] = optional_id(v.witness_edge);
  out["count"] = v.count;
  out["count_capped"] = v.count_capped;
  return out;
}

Json trace(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& step : t.steps_in_original_names()) {
    Json s;
    if (const auto* strip = std::get_if<StripStep>(&step)) {
      s["op"] = "strip_k2";
      s["vertices"] = {strip->a, strip->b};
      s["edge"] = strip->edge;
    } else {
      const auto& sm = std::get<SmoothStep>(step);
      s["op"] = "smooth";
      s["path"] = {sm.w, sm.x, sm.y, sm.z};
      s["removed_edges"] = {sm.wx, sm.xy, sm.yz};
      s["new_edge"] = sm.new_edge;
    }
    steps.push_back(std::move(s));
  }
  Json out;
  out["base"] = to_mg(t.base);
  out["base_vertices"] = t.base.vertex_count();
  out["base_edges"] = t.base.edge_count();
  out["stripped_k2"] = t.stripped_k2;
  out["steps"] = std::move(steps);
  return out;
}

Json chord(const Chord& c) {
  Json out;
  out["endpoints"] = {c.a, c.b};
  out["kind"] = to_string(c.kind);
  out["external"] = c.external;
  out["vertices"] = c.vertices;
  out["edges"] = c.edges;
  return out;
}

Json chord_report(const OrientedCycle& cycle, const std::vector<Chord>& chords) {
  Json list = Json::array();
  for (const auto& c : chords) list.push_back(chord(c));
  Json crossings = Json::array();
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (chords_cross(cycle, chords[i], chords[j])) crossings.push_back({i, j});
    }
  }
  Json out;
  out["cycle"] = cycle.vertices();
  out["cycle_edges"] = cycle.edges();
  out["chords"] = std::move(list);
  out["crossings"] = std::move(crossings);
  return out;
}

Json partition(const std::vector<std::vector<Vertex>>& parts) {
  Json out;
  out["chambers"] = parts;
  return out;
}

Json bound(const BoundResult& b) {
  Json out;
  out["value"] = b.value ? Json(*b.value) : Json(nullptr);
  out["exact"] = b.exact;
  out["note"] = b.note;
  return out;
}

Json stats(const SearchStats& s) {
  Json out;
  out["generated"] = s.generated;
  out["rejected_noncanonical"] = s.rejected_noncanonical;
  out["pruned_degree"] = s.pruned_degree;
  out["pruned_multiplicity"] = s.pruned_multiplicity;
  out["k_matchable_leaves"] = s.k_matchable_leaves;
  out["rejected_lemma1"] = s.rejected_lemma1;
  out["rejected_k2_component"] = s.rejected_k2_component;
  out["rejected_reducible"] = s.rejected_reducible;
  out["rejected_not_minimal"] = s.rejected_not_minimal;
  return out;
}

Json family_report(const FamilyReport& r) {
  Json members = Json::array();
  for (const auto& m : r.members) {
    Json j;
    j["hash"] = m.hash;
    j["vertices"] = m.graph.vertex_count();
    j["edges"] = m.graph.edge_count();
    j["matchings"] = m.matching_count;
    j["automorphisms"] = m.form.automorphisms.str();
    j["canonical"] = m.form.text;
    j["certificate"] = verdict(m.certificate, r.k);
    members.push_back(std::move(j));
  }
  Json out;
  out["k"] = r.k;
  out["complete_up_to_vertices"] = r.max_vertices;
  out["max_multiplicity"] = r.max_multiplicity;
  out["member_count"] = r.members.size();
  out["members"] = std::move(members);
  out["theorem1_bound"] = bound(theorem1_bound(r.k, r));
  out["stats"] = stats(r.stats);
  return out;
}

Json classification(const Classification& c) {
  Json out;
  out["k"] = c.k;
  out["verdict"] = verdict(c.verdict, c.k);
  if (c.base_form) {
    out["base"] = c.base_form->text;
    out["base_hash"] = short_hash(*c.base_form);
  } else {
    out["base"] = nullptr;
    out["base_hash"] = nullptr;
  }
  out["stripped_k2"] = c.stripped_k2;
  out["member"] = c.member_name ? Json(*c.member_name) : Json(nullptr);
  out["trace"] = c.trace ? trace(*c.trace) : Json(nullptr);
  return out;
}

Json suite(const verify::SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["failed"] = c.failed;
    j["first_failure"] = c.first_failure.empty() ? Json(nullptr) : Json(c.first_failure);
    checks.push_back(std::move(j));
  }
  Json out;
  out["suite"] = r.suite;
  out["k"] = r.k;
  out["max_vertices"] = r.max_vertices;
  out["instances"] = r.instances;
  out["failures"] = r.failures();
  out["ok"] = r.ok();
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace kmatch::json
