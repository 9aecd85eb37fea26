#pragma once

#include <json.hpp>

#include "condis/brauer.hpp"
#include "condis/finfun.hpp"
#include "condis/gen.hpp"

namespace condis {

using json = nlohmann::ordered_json;

// Field orders are fixed: {"src","tgt","table"}, {"src","tgt","classes"},
// {"src","tgt","pairs"}, {"size","classes"}.
json finfun_to_json(const FinFun& f);
json spliteq_to_json(const SplitEq& r);
json binrel_to_json(const BinRel& r);
json eqrel_to_json(const EqRel& r);

FinFun finfun_from_json(const json& j);
SplitEq spliteq_from_json(const json& j);
BinRel binrel_from_json(const json& j);
EqRel eqrel_from_json(const json& j);

}  // namespace condis
