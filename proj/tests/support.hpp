#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "condis/brauer.hpp"
#include "condis/finfun.hpp"
#include "condis/gen.hpp"
#include "condis/syntax.hpp"

// Enumeration and sampling helpers shared by the test binaries. Everything
// here is an independent oracle path: brute-force enumeration only, no reuse
// of the library's own search logic.
namespace condis::testsupport {

// All partitions of {0..size-1}, enumerated via restricted growth strings.
inline std::vector<std::vector<std::vector<int>>> partitions_of(int size) {
  std::vector<std::vector<std::vector<int>>> result;
  if (size == 0) {
    result.push_back({});
    return result;
  }
  std::vector<int> rgs(size, 0);
  while (true) {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> classes(blocks);
    for (int x = 0; x < size; ++x) classes[rgs[x]].push_back(x);
    result.push_back(std::move(classes));

    int k = size - 1;
    while (k > 0) {
      int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + k);
      if (rgs[k] <= prefix_max) break;
      --k;
    }
    if (k == 0) break;
    ++rgs[k];
    std::fill(rgs.begin() + k + 1, rgs.end(), 0);
  }
  return result;
}

inline std::vector<SplitEq> all_spliteqs(int n, int m) {
  std::vector<SplitEq> result;
  for (auto& classes : partitions_of(n + m)) result.emplace_back(n, m, std::move(classes));
  return result;
}

inline std::vector<EqRel> all_eqrels(int size) {
  std::vector<EqRel> result;
  for (auto& classes : partitions_of(size)) result.emplace_back(size, std::move(classes));
  return result;
}

// All functions n -> m (none when m == 0 < n; just the empty one for n == 0).
inline std::vector<FinFun> all_functions(int n, int m) {
  std::vector<FinFun> result;
  if (n == 0) {
    result.push_back(kappa(m));
    return result;
  }
  if (m == 0) return result;
  std::vector<int> table(n, 0);
  while (true) {
    result.emplace_back(n, m, table);
    int k = n - 1;
    while (k >= 0 && table[k] == m - 1) table[k--] = 0;
    if (k < 0) break;
    ++table[k];
  }
  return result;
}

inline FinFun random_finfun(std::mt19937& rng, int n, int m) {
  if (n > 0 && m == 0) throw Error("no functions into 0 from a nonempty source");
  std::vector<int> table(n);
  for (int i = 0; i < n; ++i) table[i] = std::uniform_int_distribution<int>(0, m - 1)(rng);
  return FinFun(n, m, std::move(table));
}

inline SplitEq random_spliteq(std::mt19937& rng, int n, int m) {
  const int size = n + m;
  std::vector<int> rgs(size, 0);
  int max_block = -1;
  for (int x = 0; x < size; ++x) {
    rgs[x] = std::uniform_int_distribution<int>(0, max_block + 1)(rng);
    max_block = std::max(max_block, rgs[x]);
  }
  std::vector<std::vector<int>> classes(max_block + 1);
  for (int x = 0; x < size; ++x) classes[rgs[x]].push_back(x);
  if (size == 0) classes.clear();
  return SplitEq(n, m, std::move(classes));
}

// Assigns one radix in {2,3} per joint constraint component of the chain
// r : n -> m, s : m -> p, yielding sequences a, b, c appropriate for both.
inline std::array<Radices, 3> appropriate_chain_radices(std::mt19937& rng, const SplitEq& r,
                                                        const SplitEq& s) {
  const int n = r.src, m = r.tgt, p = s.tgt;
  std::vector<int> parent(n + m + p);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& c : r.classes)
    for (std::size_t k = 1; k < c.size(); ++k) unite(c[0], c[k]);
  for (const auto& c : s.classes)
    for (std::size_t k = 1; k < c.size(); ++k) unite(n + c[0], n + c[k]);
  std::vector<int> radix_of(n + m + p, 0);
  std::uniform_int_distribution<int> coin(2, 3);
  for (int x = 0; x < n + m + p; ++x)
    if (find(x) == x) radix_of[x] = coin(rng);
  auto radix_at = [&](int x) { return radix_of[find(x)]; };
  std::vector<int> a, b, c;
  for (int x = 0; x < n; ++x) a.push_back(radix_at(x));
  for (int x = 0; x < m; ++x) b.push_back(radix_at(n + x));
  for (int x = 0; x < p; ++x) c.push_back(radix_at(n + m + x));
  return {Radices(std::move(a)), Radices(std::move(b)), Radices(std::move(c))};
}

// All {2,3} radix assignments for positions 0..n+m-1 that are appropriate
// for r, produced by enumerating choices per constraint component.
inline std::vector<std::pair<Radices, Radices>> all_appropriate_radices(const SplitEq& r) {
  const int size = r.src + r.tgt;
  std::vector<int> component(size, -1);
  for (std::size_t c = 0; c < r.classes.size(); ++c)
    for (int x : r.classes[c]) component[x] = static_cast<int>(c);
  const int components = static_cast<int>(r.classes.size());
  std::vector<std::pair<Radices, Radices>> result;
  for (int mask = 0; mask < (1 << components); ++mask) {
    std::vector<int> a, b;
    for (int x = 0; x < size; ++x) {
      int radix = (mask >> component[x]) & 1 ? 3 : 2;
      (x < r.src ? a : b).push_back(radix);
    }
    result.emplace_back(Radices(std::move(a)), Radices(std::move(b)));
  }
  return result;
}

// --- random well-typed terms ---------------------------------------------

// Disjunctive terms; Seq and Case close type gaps with synthesized bridges.
inline DisjTermPtr random_disj_term(std::mt19937& rng, int depth) {
  auto nat = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (depth == 0) {
    switch (nat(0, 4)) {
      case 0: return d_id(nat(0, 4));
      case 1: return d_kappa(nat(0, 4));
      case 2: return d_in1(nat(0, 3), nat(0, 3));
      case 3: return d_in2(nat(0, 3), nat(0, 3));
      default: return d_fold(nat(0, 3));
    }
  }
  switch (nat(0, 2)) {
    case 0: {  // seq through a synthesized continuation
      auto t1 = random_disj_term(rng, depth - 1);
      int mid = infer_type_disj(*t1).tgt;
      if (mid == 0) return d_seq(t1, d_id(0));
      auto t2 = synth_disj(random_finfun(rng, mid, nat(1, 4)));
      return d_seq(t1, t2);
    }
    case 1: return d_sum(random_disj_term(rng, depth - 1), random_disj_term(rng, depth - 1));
    default: {  // case with a branch synthesized to match the target
      auto t1 = random_disj_term(rng, depth - 1);
      int tgt = infer_type_disj(*t1).tgt;
      if (tgt == 0) return d_case(t1, d_kappa(0));
      auto t2 = synth_disj(random_finfun(rng, nat(0, 3), tgt));
      return d_case(t1, t2);
    }
  }
}

// Conjunctive terms with the given source object; target object codes are
// capped so the evaluated tables stay desk-sized.
struct ConjTermGen {
  std::mt19937& rng;
  int max_index = 4;
  int code_cap = 128;

  int nat(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  ConjObj random_obj(int max_len) {
    ConjObj obj(nat(0, max_len));
    for (auto& i : obj) i = nat(1, max_index);
    return obj;
  }

  ConjTermPtr with_src(const ConjObj& a, int depth) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      auto t = candidate(a, depth);
      if (obj_code(infer_type_conj(*t).tgt) <= code_cap) return t;
    }
    return c_id(a);
  }

  ConjTermPtr candidate(const ConjObj& a, int depth) {
    const int split = a.empty() ? 0 : nat(0, static_cast<int>(a.size()));
    ConjObj left(a.begin(), a.begin() + split);
    ConjObj right(a.begin() + split, a.end());
    switch (nat(0, depth > 0 ? 7 : 4)) {
      case 0: return c_id(a);
      case 1: return c_bang(a);
      case 2: return c_pr1(left, right);
      case 3: return c_pr2(left, right);
      case 4: return c_dup(a);
      case 5: {
        auto t1 = with_src(a, depth - 1);
        return c_seq(t1, with_src(infer_type_conj(*t1).tgt, depth - 1));
      }
      case 6: return c_prod(with_src(left, depth - 1), with_src(right, depth - 1));
      default: return c_pair(with_src(a, depth - 1), with_src(a, depth - 1));
    }
  }

  ConjTermPtr random_term(int depth) {
    ConjObj root = random_obj(3);
    while (obj_code(root) > 64) root = random_obj(3);
    return with_src(root, depth);
  }
};

}  // namespace condis::testsupport
