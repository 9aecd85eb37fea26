#pragma once

#include <string>

#include "condis/finfun.hpp"
#include "condis/gen.hpp"

namespace condis {

// Two-row pictures: sources on the top rank, targets on the bottom rank.
std::string render_finfun_text(const FinFun& f);
std::string render_finfun_dot(const FinFun& f);
std::string render_spliteq_text(const SplitEq& r);
std::string render_spliteq_dot(const SplitEq& r);

}  // namespace condis
