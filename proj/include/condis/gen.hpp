#pragma once

#include <vector>

#include "condis/finfun.hpp"

namespace condis {

// An equivalence relation on the disjoint union of a source and a target
// ordinal. Indices 0..src-1 are source positions, src..src+tgt-1 target
// positions. Classes are kept canonical: each sorted ascending, classes
// ordered by least element, so structural equality is partition equality.
struct SplitEq {
  SplitEq() = default;
  SplitEq(int src, int tgt, std::vector<std::vector<int>> classes);

  int src = 0;
  int tgt = 0;
  std::vector<std::vector<int>> classes;

  bool operator==(const SplitEq&) const = default;
};

// n classes of the form {i, i+n}.
SplitEq se_identity(int n);

// s after r: stack r on top of s, close under the union, then drop the
// middle layer. Classes living entirely in the middle vanish.
SplitEq se_compose(const SplitEq& s, const SplitEq& r);

// The split equivalence of f : m -> n read against the grain: one class per
// target element i, collecting i together with the fiber of f over i.
SplitEq j_of(const FinFun& f);

}  // namespace condis
