#include "condis/serialize.hpp"

namespace condis {

namespace {

int get_ordinal(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw OutOfRange(std::string("missing or non-integer field \"") + field + "\"");
  return j[field].get<int>();
}

std::vector<std::vector<int>> get_classes(const json& j) {
  if (!j.contains("classes") || !j["classes"].is_array())
    throw OutOfRange("missing or non-array field \"classes\"");
  std::vector<std::vector<int>> classes;
  for (const auto& c : j["classes"]) classes.push_back(c.get<std::vector<int>>());
  return classes;
}

}  // namespace

json finfun_to_json(const FinFun& f) {
  return json{{"src", f.src}, {"tgt", f.tgt}, {"table", f.table}};
}

json spliteq_to_json(const SplitEq& r) {
  return json{{"src", r.src}, {"tgt", r.tgt}, {"classes", r.classes}};
}

json binrel_to_json(const BinRel& r) {
  json pairs = json::array();
  for (auto [i, j] : r.pairs) pairs.push_back(json::array({i, j}));
  return json{{"src", r.src}, {"tgt", r.tgt}, {"pairs", std::move(pairs)}};
}

json eqrel_to_json(const EqRel& r) {
  return json{{"size", r.size}, {"classes", r.classes}};
}

FinFun finfun_from_json(const json& j) {
  if (!j.contains("table") || !j["table"].is_array())
    throw OutOfRange("missing or non-array field \"table\"");
  return FinFun(get_ordinal(j, "src"), get_ordinal(j, "tgt"), j["table"].get<std::vector<int>>());
}

SplitEq spliteq_from_json(const json& j) {
  return SplitEq(get_ordinal(j, "src"), get_ordinal(j, "tgt"), get_classes(j));
}

BinRel binrel_from_json(const json& j) {
  if (!j.contains("pairs") || !j["pairs"].is_array())
    throw OutOfRange("missing or non-array field \"pairs\"");
  std::set<std::pair<int, int>> pairs;
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2) throw OutOfRange("relation pair must be a two-element array");
    pairs.emplace(p[0].get<int>(), p[1].get<int>());
  }
  return BinRel(get_ordinal(j, "src"), get_ordinal(j, "tgt"), std::move(pairs));
}

EqRel eqrel_from_json(const json& j) { return EqRel(get_ordinal(j, "size"), get_classes(j)); }

}  // namespace condis
