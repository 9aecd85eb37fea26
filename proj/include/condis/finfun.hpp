#pragma once

#include <span>
#include <vector>

#include "condis/errors.hpp"

namespace condis {

// A total function between finite ordinals, stored as a dense table:
// table[i] is the image of i, so src == table.size() and every entry < tgt.
// The only function into 0 is the empty one, hence tgt == 0 forces src == 0.
struct FinFun {
  FinFun() = default;
  FinFun(int src, int tgt, std::vector<int> table);

  int src = 0;
  int tgt = 0;
  std::vector<int> table;

  // Bounds-checked application.
  int operator()(int i) const;

  bool operator==(const FinFun&) const = default;
};

// A sequence of radices, each >= 2 (possibly empty; the empty product is 1).
struct Radices {
  Radices() = default;
  explicit Radices(std::vector<int> entries);
  Radices(std::initializer_list<int> entries) : Radices(std::vector<int>(entries)) {}

  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int product() const;

  bool operator==(const Radices&) const = default;
};

// --- coproduct structure -------------------------------------------------

FinFun identity(int n);

// g after f; requires f.tgt == g.src.
FinFun compose(const FinFun& g, const FinFun& f);

// f side by side with f2: the second block lands shifted by f.tgt.
FinFun sum(const FinFun& f, const FinFun& f2);

// The empty function 0 -> n.
FinFun kappa(int n);

FinFun inj1(int n, int m);  // n -> n+m, i |-> i
FinFun inj2(int n, int m);  // m -> n+m, j |-> n+j

// n+n -> n, both copies folded onto one.
FinFun codiag(int n);

// [f,g] : n+m -> p for f : n -> p, g : m -> p, as codiag(p) after sum(f,g).
FinFun bracket(const FinFun& f, const FinFun& g);

// --- product structure ---------------------------------------------------

// Positional codec for arbitrary factor shapes (entries may be 0 or 1;
// an empty shape has product 1). Most significant digit first.
int shape_product(std::span<const int> factors);
int shape_encode(std::span<const int> factors, std::span<const int> digits);
std::vector<int> shape_decode(std::span<const int> factors, int index);

// The same codec restricted to radices >= 2: the bijection between
// d_0 x ... x d_{k-1} and the ordinal d_0 * ... * d_{k-1} that sends a
// tuple to its position in the lexicographical order.
int mr_encode(const Radices& d, std::span<const int> tuple);
std::vector<int> mr_decode(const Radices& d, int index);

// f1 * f2 : decode, apply componentwise, encode.
FinFun prod(const FinFun& f1, const FinFun& f2);

FinFun proj1(int n, int m);  // n*m -> n, i |-> floor(i/m)
FinFun proj2(int n, int m);  // n*m -> m, i |-> i mod m

// n -> n*n, i |-> i*n + i.
FinFun diag(int n);

// <f,g> : p -> n*m for f : p -> n, g : p -> m, as prod(f,g) after diag(p).
FinFun pair(const FinFun& f, const FinFun& g);

}  // namespace condis
