#pragma once

#include "kmatch/alternating.hpp"
#include "kmatch/family.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/reduction.hpp"
#include "kmatch/verify.hpp"

#include <json.hpp>

namespace kmatch::json {

using Json = nlohmann::ordered_json;

Json matching_set(const MatchingSet& set);
Json verdict(const MinimalityVerdict& v, unsigned k);
/// Steps name vertices of the original graph.
Json trace(const ReductionTrace& t);
Json chord(const Chord& c);
Json chord_report(const OrientedCycle& cycle, const std::vector<Chord>& chords);
Json partition(const std::vector<std::vector<Vertex>>& parts);
Json bound(const BoundResult& b);
Json stats(const SearchStats& s);
Json family_report(const FamilyReport& r);
Json classification(const Classification& c);
Json suite(const verify::SuiteReport& r);

}  // namespace kmatch::json
