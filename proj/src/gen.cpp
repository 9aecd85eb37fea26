#include "condis/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace condis {

namespace {

std::vector<std::vector<int>> canonicalize(std::vector<std::vector<int>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

// Minimal union-find over 0..n-1.
struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

SplitEq::SplitEq(int src_, int tgt_, std::vector<std::vector<int>> classes_)
    : src(src_), tgt(tgt_), classes(std::move(classes_)) {
  if (src < 0 || tgt < 0) throw OutOfRange("split equivalence endpoints must be finite ordinals");
  const int n = src + tgt;
  std::vector<char> seen(n, 0);
  for (auto& c : classes) {
    if (c.empty()) throw OutOfRange("split equivalence has an empty class");
    for (int x : c) {
      if (x < 0 || x >= n)
        throw OutOfRange("class member " + std::to_string(x) + " outside domain " + std::to_string(n));
      if (seen[x]) throw OutOfRange("class member " + std::to_string(x) + " appears twice");
      seen[x] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    if (!seen[x]) throw OutOfRange("domain element " + std::to_string(x) + " is in no class");
  classes = canonicalize(std::move(classes));
}

SplitEq se_identity(int n) {
  std::vector<std::vector<int>> classes;
  classes.reserve(n);
  for (int i = 0; i < n; ++i) classes.push_back({i, i + n});
  return SplitEq(n, n, std::move(classes));
}

SplitEq se_compose(const SplitEq& s, const SplitEq& r) {
  if (r.tgt != s.src)
    throw TypeMismatch("cannot compose: inner target " + std::to_string(r.tgt) +
                       " differs from outer source " + std::to_string(s.src));
  const int n = r.src, m = r.tgt, p = s.tgt;
  UnionFind uf(n + m + p);
  for (const auto& c : r.classes)
    for (std::size_t k = 1; k < c.size(); ++k) uf.unite(c[0], c[k]);
  for (const auto& c : s.classes)  // s lives shifted so its source meets r's target
    for (std::size_t k = 1; k < c.size(); ++k) uf.unite(n + c[0], n + c[k]);

  std::map<int, std::vector<int>> byRoot;
  for (int x = 0; x < n + m + p; ++x) {
    if (x >= n && x < n + m) continue;  // middle layer is dropped
    byRoot[uf.find(x)].push_back(x >= n + m ? x - m : x);
  }
  std::vector<std::vector<int>> classes;
  for (auto& [root, members] : byRoot) classes.push_back(std::move(members));
  return SplitEq(n, p, std::move(classes));
}

SplitEq j_of(const FinFun& f) {
  const int n = f.tgt, m = f.src;
  std::vector<std::vector<int>> classes(n);
  for (int i = 0; i < n; ++i) classes[i].push_back(i);
  for (int j = 0; j < m; ++j) classes[f.table[j]].push_back(n + j);
  return SplitEq(n, m, std::move(classes));
}

}  // namespace condis
