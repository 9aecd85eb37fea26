#include "condis/brauer.hpp"

#include <algorithm>
#include <string>

namespace condis {

namespace {

std::vector<std::vector<int>> validate_partition(int size, std::vector<std::vector<int>> classes,
                                                 const char* what) {
  if (size < 0) throw OutOfRange(std::string(what) + " size must be a finite ordinal");
  std::vector<char> seen(size, 0);
  for (auto& c : classes) {
    if (c.empty()) throw OutOfRange(std::string(what) + " has an empty class");
    for (int x : c) {
      if (x < 0 || x >= size)
        throw OutOfRange(std::string(what) + " member " + std::to_string(x) + " outside " +
                         std::to_string(size));
      if (seen[x]) throw OutOfRange(std::string(what) + " member " + std::to_string(x) + " appears twice");
      seen[x] = 1;
    }
    std::sort(c.begin(), c.end());
  }
  for (int x = 0; x < size; ++x)
    if (!seen[x]) throw OutOfRange(std::string(what) + " element " + std::to_string(x) + " is in no class");
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

void require_lengths(const Radices& a, const Radices& b, const SplitEq& r) {
  if (a.size() != r.src || b.size() != r.tgt)
    throw LengthMismatch("radix sequences of lengths " + std::to_string(a.size()) + "," +
                         std::to_string(b.size()) + " do not fit a relation of type " +
                         std::to_string(r.src) + " -> " + std::to_string(r.tgt));
}

int pow_checked(int base, int exp) {
  long long p = 1;
  for (int k = 0; k < exp; ++k) {
    p *= base;
    if (p > 1 << 26) throw OutOfRange("power " + std::to_string(base) + "^" + std::to_string(exp) +
                                      " exceeds the supported range");
  }
  return static_cast<int>(p);
}

}  // namespace

BinRel::BinRel(int src_, int tgt_, std::set<std::pair<int, int>> pairs_)
    : src(src_), tgt(tgt_), pairs(std::move(pairs_)) {
  if (src < 0 || tgt < 0) throw OutOfRange("relation endpoints must be finite ordinals");
  for (auto [i, j] : pairs)
    if (i < 0 || i >= src || j < 0 || j >= tgt)
      throw OutOfRange("pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                       std::to_string(src) + " x " + std::to_string(tgt));
}

EqRel::EqRel(int size_, std::vector<std::vector<int>> classes_) : size(size_) {
  classes = validate_partition(size, std::move(classes_), "equivalence relation");
}

int nth_prime(int i) {
  if (i < 1) throw OutOfRange("prime index " + std::to_string(i) + " must be >= 1");
  int count = 0;
  for (int candidate = 2;; ++candidate) {
    bool is_prime = true;
    for (int d = 2; d * d <= candidate; ++d)
      if (candidate % d == 0) {
        is_prime = false;
        break;
      }
    if (is_prime && ++count == i) return candidate;
  }
}

bool appropriate(const Radices& a, const Radices& b, const SplitEq& r) {
  require_lengths(a, b, r);
  auto radix_at = [&](int x) { return x < r.src ? a.entries[x] : b.entries[x - r.src]; };
  for (const auto& c : r.classes)
    for (int x : c)
      if (radix_at(x) != radix_at(c.front())) return false;
  return true;
}

BinRel f_ab_rel(const Radices& a, const Radices& b, const SplitEq& r) {
  require_lengths(a, b, r);
  const int pa = a.product(), pb = b.product();
  if (static_cast<long long>(pa) * pb > (1 << 26))
    throw OutOfRange("representation over " + std::to_string(pa) + " x " + std::to_string(pb) +
                     " exceeds the supported range");
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < pa; ++i) {
    auto left = mr_decode(a, i);
    for (int j = 0; j < pb; ++j) {
      auto right = mr_decode(b, j);
      auto digit_at = [&](int x) { return x < r.src ? left[x] : right[x - r.src]; };
      bool matches = true;
      for (const auto& c : r.classes) {
        for (int x : c)
          if (digit_at(x) != digit_at(c.front())) {
            matches = false;
            break;
          }
        if (!matches) break;
      }
      if (matches) pairs.emplace(i, j);
    }
  }
  return BinRel(pa, pb, std::move(pairs));
}

FinFun f_ab_fun(const Radices& a, const Radices& b, const SplitEq& r) {
  BinRel rel = f_ab_rel(a, b, r);
  std::vector<int> table(rel.src, -1);
  std::vector<int> images(rel.src, 0);
  for (auto [i, j] : rel.pairs) {
    ++images[i];
    table[i] = j;
  }
  for (int i = 0; i < rel.src; ++i)
    if (images[i] != 1)
      throw NotAFunction(i, images[i],
                         "relation is not a function (source " + std::to_string(i) +
                             (images[i] == 0 ? " has no image"
                                             : " has " + std::to_string(images[i]) + " images") +
                             ")");
  return FinFun(rel.src, rel.tgt, std::move(table));
}

BinRel f_p(int p, const SplitEq& r) {
  Radices a(std::vector<int>(r.src, p));
  Radices b(std::vector<int>(r.tgt, p));
  return f_ab_rel(a, b, r);
}

std::vector<int> respecting_functions(const EqRel& r, int p) {
  if (p < 2) throw OutOfRange("respecting_functions needs p >= 2, got " + std::to_string(p));
  const std::vector<int> shape(r.size, p);
  const int total = shape_product(shape);
  std::vector<int> codes;
  for (int code = 0; code < total; ++code) {
    auto f = shape_decode(shape, code);
    bool respects = true;
    for (const auto& c : r.classes) {
      for (int x : c)
        if (f[x] != f[c.front()]) {
          respects = false;
          break;
        }
      if (!respects) break;
    }
    if (respects) codes.push_back(code);
  }
  return codes;
}

RepChoice choose_representatives(const EqRel& r) {
  RepChoice choice;
  for (const auto& c : r.classes) {
    choice.reps.push_back(c.front());  // classes are canonical, front is the minimum
    for (std::size_t k = 1; k < c.size(); ++k) {
      choice.others.push_back(c[k]);
      choice.phi[c[k]] = c.front();
    }
  }
  std::sort(choice.others.begin(), choice.others.end());
  return choice;
}

FinFun exp_functor(int p, const FinFun& f) {
  if (p < 1) throw OutOfRange("exp_functor needs p >= 1, got " + std::to_string(p));
  const int src = pow_checked(p, f.tgt);
  const int tgt = pow_checked(p, f.src);
  const std::vector<int> src_shape(f.tgt, p);
  const std::vector<int> tgt_shape(f.src, p);
  std::vector<int> table(src);
  for (int code = 0; code < src; ++code) {
    auto g = shape_decode(src_shape, code);
    std::vector<int> h(f.src);
    for (int x = 0; x < f.src; ++x) h[x] = g[f.table[x]];
    table[code] = shape_encode(tgt_shape, h);
  }
  return FinFun(src, tgt, std::move(table));
}

FinFun powerset_functor(const FinFun& f) {
  const int src = pow_checked(2, f.tgt);
  const int tgt = pow_checked(2, f.src);
  std::vector<int> table(src);
  for (int code = 0; code < src; ++code) {
    auto y = subset_decode(f.tgt, code);
    std::set<int> members(y.begin(), y.end());
    std::vector<int> preimage;
    for (int x = 0; x < f.src; ++x)
      if (members.count(f.table[x])) preimage.push_back(x);
    table[code] = subset_encode(f.src, preimage);
  }
  return FinFun(src, tgt, std::move(table));
}

int direct_image(const FinFun& f, int subset_code) {
  auto s = subset_decode(f.src, subset_code);
  std::set<int> image;
  for (int x : s) image.insert(f.table[x]);
  return subset_encode(f.tgt, std::vector<int>(image.begin(), image.end()));
}

int subset_encode(int size, const std::vector<int>& elements) {
  int code = 0;
  for (int x : elements) {
    if (x < 0 || x >= size)
      throw OutOfRange("subset element " + std::to_string(x) + " outside " + std::to_string(size));
    code |= 1 << (size - 1 - x);
  }
  return code;
}

std::vector<int> subset_decode(int size, int code) {
  if (code < 0 || code >= pow_checked(2, size))
    throw OutOfRange("subset code " + std::to_string(code) + " outside 2^" + std::to_string(size));
  std::vector<int> elements;
  for (int x = 0; x < size; ++x)
    if (code & (1 << (size - 1 - x))) elements.push_back(x);
  return elements;
}

BinRel graph_of(const FinFun& f) {
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < f.src; ++i) pairs.emplace(i, f.table[i]);
  return BinRel(f.src, f.tgt, std::move(pairs));
}

BinRel rel_compose(const BinRel& s, const BinRel& r) {
  if (r.tgt != s.src)
    throw TypeMismatch("cannot compose relations of types " + std::to_string(r.src) + " -> " +
                       std::to_string(r.tgt) + " and " + std::to_string(s.src) + " -> " +
                       std::to_string(s.tgt));
  std::set<std::pair<int, int>> pairs;
  for (auto [i, j] : r.pairs)
    for (auto [j2, k] : s.pairs)
      if (j == j2) pairs.emplace(i, k);
  return BinRel(r.src, s.tgt, std::move(pairs));
}

}  // namespace condis
