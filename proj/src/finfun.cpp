#include "condis/finfun.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace condis {

namespace {

void require_ordinal(int n, const char* what) {
  if (n < 0) throw OutOfRange(std::string(what) + " must be a finite ordinal, got " + std::to_string(n));
}

}  // namespace

FinFun::FinFun(int src_, int tgt_, std::vector<int> table_)
    : src(src_), tgt(tgt_), table(std::move(table_)) {
  require_ordinal(src, "src");
  require_ordinal(tgt, "tgt");
  if (static_cast<int>(table.size()) != src)
    throw OutOfRange("table has " + std::to_string(table.size()) + " entries for src " + std::to_string(src));
  if (tgt == 0 && src > 0)
    throw OutOfRange("no function from " + std::to_string(src) + " into the empty ordinal");
  for (int i = 0; i < src; ++i)
    if (table[i] < 0 || table[i] >= tgt)
      throw OutOfRange("table entry " + std::to_string(table[i]) + " at " + std::to_string(i) +
                       " is outside target " + std::to_string(tgt));
}

int FinFun::operator()(int i) const {
  if (i < 0 || i >= src) throw OutOfRange("argument " + std::to_string(i) + " outside source " + std::to_string(src));
  return table[i];
}

Radices::Radices(std::vector<int> entries_) : entries(std::move(entries_)) {
  for (int d : entries)
    if (d < 2) throw OutOfRange("radix " + std::to_string(d) + " is below 2");
}

int Radices::product() const { return shape_product(entries); }

FinFun identity(int n) {
  require_ordinal(n, "n");
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  return FinFun(n, n, std::move(t));
}

FinFun compose(const FinFun& g, const FinFun& f) {
  if (f.tgt != g.src)
    throw TypeMismatch("cannot compose: inner target " + std::to_string(f.tgt) +
                       " differs from outer source " + std::to_string(g.src));
  std::vector<int> t(f.src);
  for (int i = 0; i < f.src; ++i) t[i] = g.table[f.table[i]];
  return FinFun(f.src, g.tgt, std::move(t));
}

FinFun sum(const FinFun& f, const FinFun& f2) {
  std::vector<int> t;
  t.reserve(f.src + f2.src);
  t.insert(t.end(), f.table.begin(), f.table.end());
  for (int v : f2.table) t.push_back(f.tgt + v);
  return FinFun(f.src + f2.src, f.tgt + f2.tgt, std::move(t));
}

FinFun kappa(int n) {
  require_ordinal(n, "n");
  return FinFun(0, n, {});
}

FinFun inj1(int n, int m) {
  require_ordinal(n, "n");
  require_ordinal(m, "m");
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  return FinFun(n, n + m, std::move(t));
}

FinFun inj2(int n, int m) {
  require_ordinal(n, "n");
  require_ordinal(m, "m");
  std::vector<int> t(m);
  std::iota(t.begin(), t.end(), n);
  return FinFun(m, n + m, std::move(t));
}

FinFun codiag(int n) {
  require_ordinal(n, "n");
  std::vector<int> t(2 * n);
  for (int i = 0; i < n; ++i) {
    t[i] = i;
    t[n + i] = i;
  }
  return FinFun(2 * n, n, std::move(t));
}

FinFun bracket(const FinFun& f, const FinFun& g) {
  if (f.tgt != g.tgt)
    throw TypeMismatch("bracket needs equal targets, got " + std::to_string(f.tgt) + " and " +
                       std::to_string(g.tgt));
  return compose(codiag(f.tgt), sum(f, g));
}

int shape_product(std::span<const int> factors) {
  long long p = 1;
  for (int d : factors) {
    require_ordinal(d, "factor");
    p *= d;
    if (p > std::numeric_limits<int>::max())
      throw OutOfRange("shape product exceeds the supported range");
  }
  return static_cast<int>(p);
}

int shape_encode(std::span<const int> factors, std::span<const int> digits) {
  if (factors.size() != digits.size())
    throw OutOfRange("tuple has " + std::to_string(digits.size()) + " digits for " +
                     std::to_string(factors.size()) + " factors");
  long long code = 0;
  for (std::size_t x = 0; x < factors.size(); ++x) {
    if (digits[x] < 0 || digits[x] >= factors[x])
      throw OutOfRange("digit " + std::to_string(digits[x]) + " at " + std::to_string(x) +
                       " is outside radix " + std::to_string(factors[x]));
    code = code * factors[x] + digits[x];
  }
  return static_cast<int>(code);
}

std::vector<int> shape_decode(std::span<const int> factors, int index) {
  int total = shape_product(factors);
  if (index < 0 || index >= total)
    throw OutOfRange("index " + std::to_string(index) + " outside product " + std::to_string(total));
  std::vector<int> digits(factors.size());
  for (std::size_t x = factors.size(); x-- > 0;) {
    digits[x] = index % factors[x];
    index /= factors[x];
  }
  return digits;
}

int mr_encode(const Radices& d, std::span<const int> tuple) { return shape_encode(d.entries, tuple); }

std::vector<int> mr_decode(const Radices& d, int index) { return shape_decode(d.entries, index); }

FinFun prod(const FinFun& f1, const FinFun& f2) {
  const int src_shape[2] = {f1.src, f2.src};
  const int tgt_shape[2] = {f1.tgt, f2.tgt};
  int src = shape_product(src_shape);
  int tgt = shape_product(tgt_shape);
  std::vector<int> t(src);
  for (int i = 0; i < src; ++i) {
    auto d = shape_decode(src_shape, i);
    const int image[2] = {f1.table[d[0]], f2.table[d[1]]};
    t[i] = shape_encode(tgt_shape, image);
  }
  return FinFun(src, tgt, std::move(t));
}

FinFun proj1(int n, int m) {
  const int shape[2] = {n, m};
  int src = shape_product(shape);
  std::vector<int> t(src);
  for (int i = 0; i < src; ++i) t[i] = i / m;
  return FinFun(src, n, std::move(t));
}

FinFun proj2(int n, int m) {
  const int shape[2] = {n, m};
  int src = shape_product(shape);
  std::vector<int> t(src);
  for (int i = 0; i < src; ++i) t[i] = i % m;
  return FinFun(src, m, std::move(t));
}

FinFun diag(int n) {
  const int shape[2] = {n, n};
  int tgt = shape_product(shape);
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i * n + i;
  return FinFun(n, tgt, std::move(t));
}

FinFun pair(const FinFun& f, const FinFun& g) {
  if (f.src != g.src)
    throw TypeMismatch("pair needs equal sources, got " + std::to_string(f.src) + " and " +
                       std::to_string(g.src));
  return compose(prod(f, g), diag(f.src));
}

}  // namespace condis
