#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "condis/finfun.hpp"
#include "condis/gen.hpp"

namespace condis {

// A binary relation between finite ordinals.
struct BinRel {
  BinRel() = default;
  BinRel(int src, int tgt, std::set<std::pair<int, int>> pairs);

  int src = 0;
  int tgt = 0;
  std::set<std::pair<int, int>> pairs;

  bool operator==(const BinRel&) const = default;
};

// An equivalence relation on {0..size-1}, canonical like SplitEq classes.
struct EqRel {
  EqRel() = default;
  EqRel(int size, std::vector<std::vector<int>> classes);

  int size = 0;
  std::vector<std::vector<int>> classes;

  bool operator==(const EqRel&) const = default;
};

// One representative per class (the least element), the remaining elements,
// and the map sending each non-representative to its class representative.
struct RepChoice {
  std::vector<int> reps;    // X1, ascending
  std::vector<int> others;  // X2, ascending
  std::map<int, int> phi;   // X2 -> X1

  bool operator==(const RepChoice&) const = default;
};

// The i-th prime, 1-based: nth_prime(1) == 2.
int nth_prime(int i);

// Radix assignments equal across every related pair of positions; position
// x < r.src reads a[x], position x >= r.src reads b[x - r.src].
bool appropriate(const Radices& a, const Radices& b, const SplitEq& r);

// The Brauerian representation: (i,j) is in the relation exactly when the
// concatenation of the digit tuples of i and j is constant on every class.
BinRel f_ab_rel(const Radices& a, const Radices& b, const SplitEq& r);

// The same relation converted to a FinFun; throws NotAFunction with the
// first offending source element when it is not total and single-valued.
FinFun f_ab_fun(const Radices& a, const Radices& b, const SplitEq& r);

// f_ab_rel with all radices equal to p >= 2.
BinRel f_p(int p, const SplitEq& r);

// All functions {0..r.size-1} -> p constant on the classes of r, each
// encoded as a base-p code with r.size digits, element 0 most significant.
std::vector<int> respecting_functions(const EqRel& r, int p);

RepChoice choose_representatives(const EqRel& r);

// The exponential functor at p: sends f : A -> B to p^f : p^B -> p^A,
// g |-> g o f, with the same most-significant-first code convention.
FinFun exp_functor(int p, const FinFun& f);

// The contravariant power-set functor on subset codes: Y |-> f^{-1}(Y).
// With characteristic-digit codes its table coincides with exp_functor(2,f).
FinFun powerset_functor(const FinFun& f);

// Code of the image of the decoded subset under f.
int direct_image(const FinFun& f, int subset_code);

// Subset codecs shared by powerset_functor and direct_image: element x of a
// set of the given size contributes bit 2^(size-1-x).
int subset_encode(int size, const std::vector<int>& elements);
std::vector<int> subset_decode(int size, int code);

// Plumbing for relational checks.
BinRel graph_of(const FinFun& f);
BinRel rel_compose(const BinRel& s, const BinRel& r);

}  // namespace condis
