#include "condis/syntax.hpp"

#include <algorithm>
#include <limits>

namespace condis {

namespace {

void require_ordinal(int n, const char* what) {
  if (n < 0) throw OutOfRange(std::string(what) + " must be a finite ordinal, got " + std::to_string(n));
}

void require_obj(const ConjObj& a) {
  for (int i : a)
    if (i < 1) throw OutOfRange("generator index " + std::to_string(i) + " must be >= 1");
}

DisjTermPtr d_node(DisjTerm::Kind kind, int n, int m, DisjTermPtr lhs, DisjTermPtr rhs) {
  if ((lhs == nullptr) != (rhs == nullptr) ||
      (lhs == nullptr && (kind == DisjTerm::Kind::Seq || kind == DisjTerm::Kind::Sum ||
                          kind == DisjTerm::Kind::Case)))
    throw Error("null subterm");
  return std::make_shared<const DisjTerm>(DisjTerm{kind, n, m, std::move(lhs), std::move(rhs)});
}

ConjTermPtr c_node(ConjTerm::Kind kind, ConjObj a, ConjObj b, ConjTermPtr lhs, ConjTermPtr rhs) {
  if ((lhs == nullptr) != (rhs == nullptr) ||
      (lhs == nullptr && (kind == ConjTerm::Kind::Seq || kind == ConjTerm::Kind::Prod ||
                          kind == ConjTerm::Kind::Pair)))
    throw Error("null subterm");
  require_obj(a);
  require_obj(b);
  return std::make_shared<const ConjTerm>(
      ConjTerm{kind, std::move(a), std::move(b), std::move(lhs), std::move(rhs)});
}

ConjObj concat(const ConjObj& a, const ConjObj& b) {
  ConjObj r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

bool operator==(const DisjTerm& a, const DisjTerm& b) {
  if (a.kind != b.kind || a.n != b.n || a.m != b.m) return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if (a.lhs && !(*a.lhs == *b.lhs)) return false;
  if (a.rhs && !(*a.rhs == *b.rhs)) return false;
  return true;
}

bool operator==(const ConjTerm& a, const ConjTerm& b) {
  if (a.kind != b.kind || a.a != b.a || a.b != b.b) return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if (a.lhs && !(*a.lhs == *b.lhs)) return false;
  if (a.rhs && !(*a.rhs == *b.rhs)) return false;
  return true;
}

DisjTermPtr d_id(int n) {
  require_ordinal(n, "n");
  return d_node(DisjTerm::Kind::Id, n, 0, nullptr, nullptr);
}
DisjTermPtr d_kappa(int n) {
  require_ordinal(n, "n");
  return d_node(DisjTerm::Kind::Kappa, n, 0, nullptr, nullptr);
}
DisjTermPtr d_in1(int n, int m) {
  require_ordinal(n, "n");
  require_ordinal(m, "m");
  return d_node(DisjTerm::Kind::In1, n, m, nullptr, nullptr);
}
DisjTermPtr d_in2(int n, int m) {
  require_ordinal(n, "n");
  require_ordinal(m, "m");
  return d_node(DisjTerm::Kind::In2, n, m, nullptr, nullptr);
}
DisjTermPtr d_fold(int n) {
  require_ordinal(n, "n");
  return d_node(DisjTerm::Kind::Fold, n, 0, nullptr, nullptr);
}
DisjTermPtr d_seq(DisjTermPtr first, DisjTermPtr then) {
  return d_node(DisjTerm::Kind::Seq, 0, 0, std::move(first), std::move(then));
}
DisjTermPtr d_sum(DisjTermPtr a, DisjTermPtr b) {
  return d_node(DisjTerm::Kind::Sum, 0, 0, std::move(a), std::move(b));
}
DisjTermPtr d_case(DisjTermPtr a, DisjTermPtr b) {
  return d_node(DisjTerm::Kind::Case, 0, 0, std::move(a), std::move(b));
}

ConjTermPtr c_id(ConjObj a) { return c_node(ConjTerm::Kind::Id, std::move(a), {}, nullptr, nullptr); }
ConjTermPtr c_bang(ConjObj a) { return c_node(ConjTerm::Kind::Bang, std::move(a), {}, nullptr, nullptr); }
ConjTermPtr c_pr1(ConjObj a, ConjObj b) {
  return c_node(ConjTerm::Kind::Pr1, std::move(a), std::move(b), nullptr, nullptr);
}
ConjTermPtr c_pr2(ConjObj a, ConjObj b) {
  return c_node(ConjTerm::Kind::Pr2, std::move(a), std::move(b), nullptr, nullptr);
}
ConjTermPtr c_dup(ConjObj a) { return c_node(ConjTerm::Kind::Dup, std::move(a), {}, nullptr, nullptr); }
ConjTermPtr c_seq(ConjTermPtr first, ConjTermPtr then) {
  return c_node(ConjTerm::Kind::Seq, {}, {}, std::move(first), std::move(then));
}
ConjTermPtr c_prod(ConjTermPtr a, ConjTermPtr b) {
  return c_node(ConjTerm::Kind::Prod, {}, {}, std::move(a), std::move(b));
}
ConjTermPtr c_pair(ConjTermPtr a, ConjTermPtr b) {
  return c_node(ConjTerm::Kind::Pair, {}, {}, std::move(a), std::move(b));
}

std::string to_text(const ConjObj& a) {
  if (a.empty()) return "I";
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += "*";
    s += "p" + std::to_string(a[k]);
  }
  return s;
}

std::string to_text(const DisjTerm& t) {
  using K = DisjTerm::Kind;
  switch (t.kind) {
    case K::Id: return "id " + std::to_string(t.n);
    case K::Kappa: return "kappa " + std::to_string(t.n);
    case K::In1: return "in1 " + std::to_string(t.n) + " " + std::to_string(t.m);
    case K::In2: return "in2 " + std::to_string(t.n) + " " + std::to_string(t.m);
    case K::Fold: return "fold " + std::to_string(t.n);
    case K::Seq: return "(" + to_text(*t.lhs) + " ; " + to_text(*t.rhs) + ")";
    case K::Sum: return "(" + to_text(*t.lhs) + " + " + to_text(*t.rhs) + ")";
    case K::Case: return "[" + to_text(*t.lhs) + " , " + to_text(*t.rhs) + "]";
  }
  throw Error("unreachable");
}

std::string to_text(const ConjTerm& t) {
  using K = ConjTerm::Kind;
  switch (t.kind) {
    case K::Id: return "id " + to_text(t.a);
    case K::Bang: return "bang " + to_text(t.a);
    case K::Pr1: return "pr1 " + to_text(t.a) + "|" + to_text(t.b);
    case K::Pr2: return "pr2 " + to_text(t.a) + "|" + to_text(t.b);
    case K::Dup: return "dup " + to_text(t.a);
    case K::Seq: return "(" + to_text(*t.lhs) + " ; " + to_text(*t.rhs) + ")";
    case K::Prod: return "(" + to_text(*t.lhs) + " * " + to_text(*t.rhs) + ")";
    case K::Pair: return "<" + to_text(*t.lhs) + " , " + to_text(*t.rhs) + ">";
  }
  throw Error("unreachable");
}

DisjType infer_type_disj(const DisjTerm& t) {
  using K = DisjTerm::Kind;
  switch (t.kind) {
    case K::Id: return {t.n, t.n};
    case K::Kappa: return {0, t.n};
    case K::In1: return {t.n, t.n + t.m};
    case K::In2: return {t.m, t.n + t.m};
    case K::Fold: return {2 * t.n, t.n};
    case K::Seq: {
      auto a = infer_type_disj(*t.lhs), b = infer_type_disj(*t.rhs);
      if (a.tgt != b.src)
        throw TypeError("middle objects " + std::to_string(a.tgt) + " and " + std::to_string(b.src) +
                        " differ in " + to_text(t));
      return {a.src, b.tgt};
    }
    case K::Sum: {
      auto a = infer_type_disj(*t.lhs), b = infer_type_disj(*t.rhs);
      return {a.src + b.src, a.tgt + b.tgt};
    }
    case K::Case: {
      auto a = infer_type_disj(*t.lhs), b = infer_type_disj(*t.rhs);
      if (a.tgt != b.tgt)
        throw TypeError("branch targets " + std::to_string(a.tgt) + " and " + std::to_string(b.tgt) +
                        " differ in " + to_text(t));
      return {a.src + b.src, a.tgt};
    }
  }
  throw Error("unreachable");
}

ConjType infer_type_conj(const ConjTerm& t) {
  using K = ConjTerm::Kind;
  switch (t.kind) {
    case K::Id: return {t.a, t.a};
    case K::Bang: return {t.a, {}};
    case K::Pr1: return {concat(t.a, t.b), t.a};
    case K::Pr2: return {concat(t.a, t.b), t.b};
    case K::Dup: return {t.a, concat(t.a, t.a)};
    case K::Seq: {
      auto a = infer_type_conj(*t.lhs), b = infer_type_conj(*t.rhs);
      if (a.tgt != b.src)
        throw TypeError("middle objects " + to_text(a.tgt) + " and " + to_text(b.src) + " differ in " +
                        to_text(t));
      return {a.src, b.tgt};
    }
    case K::Prod: {
      auto a = infer_type_conj(*t.lhs), b = infer_type_conj(*t.rhs);
      return {concat(a.src, b.src), concat(a.tgt, b.tgt)};
    }
    case K::Pair: {
      auto a = infer_type_conj(*t.lhs), b = infer_type_conj(*t.rhs);
      if (a.src != b.src)
        throw TypeError("component sources " + to_text(a.src) + " and " + to_text(b.src) +
                        " differ in " + to_text(t));
      return {a.src, concat(a.tgt, b.tgt)};
    }
  }
  throw Error("unreachable");
}

namespace {

FinFun eval_F_unchecked(const DisjTerm& t) {
  using K = DisjTerm::Kind;
  switch (t.kind) {
    case K::Id: return identity(t.n);
    case K::Kappa: return kappa(t.n);
    case K::In1: return inj1(t.n, t.m);
    case K::In2: return inj2(t.n, t.m);
    case K::Fold: return codiag(t.n);
    case K::Seq: return compose(eval_F_unchecked(*t.rhs), eval_F_unchecked(*t.lhs));
    case K::Sum: return sum(eval_F_unchecked(*t.lhs), eval_F_unchecked(*t.rhs));
    case K::Case: return bracket(eval_F_unchecked(*t.lhs), eval_F_unchecked(*t.rhs));
  }
  throw Error("unreachable");
}

FinFun eval_H_unchecked(const ConjTerm& t) {
  using K = ConjTerm::Kind;
  switch (t.kind) {
    case K::Id: return identity(obj_code(t.a));
    case K::Bang: return FinFun(obj_code(t.a), 1, std::vector<int>(obj_code(t.a), 0));
    case K::Pr1: return proj1(obj_code(t.a), obj_code(t.b));
    case K::Pr2: return proj2(obj_code(t.a), obj_code(t.b));
    case K::Dup: return diag(obj_code(t.a));
    case K::Seq: return compose(eval_H_unchecked(*t.rhs), eval_H_unchecked(*t.lhs));
    case K::Prod: return prod(eval_H_unchecked(*t.lhs), eval_H_unchecked(*t.rhs));
    case K::Pair: return pair(eval_H_unchecked(*t.lhs), eval_H_unchecked(*t.rhs));
  }
  throw Error("unreachable");
}

FinFun eval_G_unchecked(const ConjTerm& t) {
  using K = ConjTerm::Kind;
  const int la = static_cast<int>(t.a.size());
  const int lb = static_cast<int>(t.b.size());
  switch (t.kind) {
    case K::Id: return identity(la);
    case K::Bang: return kappa(la);
    case K::Pr1: return inj1(la, lb);
    case K::Pr2: return inj2(la, lb);
    case K::Dup: return codiag(la);
    case K::Seq: return compose(eval_G_unchecked(*t.lhs), eval_G_unchecked(*t.rhs));
    case K::Prod: return sum(eval_G_unchecked(*t.lhs), eval_G_unchecked(*t.rhs));
    case K::Pair: return bracket(eval_G_unchecked(*t.lhs), eval_G_unchecked(*t.rhs));
  }
  throw Error("unreachable");
}

}  // namespace

FinFun eval_F(const DisjTerm& t) {
  infer_type_disj(t);
  return eval_F_unchecked(t);
}

FinFun eval_H(const ConjTerm& t) {
  infer_type_conj(t);
  return eval_H_unchecked(t);
}

FinFun eval_G(const ConjTerm& t) {
  infer_type_conj(t);
  return eval_G_unchecked(t);
}

SplitEq jg(const ConjTerm& t) { return j_of(eval_G(t)); }

FinFun eval_H_via_gen(const ConjTerm& t) {
  auto type = infer_type_conj(t);
  SplitEq r = jg(t);
  Radices a = obj_radices(type.src);
  Radices b = obj_radices(type.tgt);
  if (!appropriate(a, b, r))
    throw InternalInvariantViolation("prime radices not appropriate for " + to_text(t));
  return f_ab_fun(a, b, r);
}

DisjTermPtr synth_disj(const FinFun& f) {
  if (f.src == 0) return d_kappa(f.tgt);
  if (f.src == 1) {
    const int i = f.table[0], m = f.tgt;
    if (m == 1) return d_id(1);
    if (i == 0) return d_in1(1, m - 1);
    if (i == m - 1) return d_in2(m - 1, 1);
    return d_seq(d_in1(1, m - i - 1), d_in2(i, m - i));
  }
  std::vector<int> head(f.table.begin(), f.table.end() - 1);
  FinFun f1(f.src - 1, f.tgt, std::move(head));
  FinFun f2(1, f.tgt, {f.table.back()});
  return d_case(synth_disj(f1), synth_disj(f2));
}

DisjTermPtr conj_to_disj(const ConjTerm& t) { return synth_disj(eval_H(t)); }

bool eq_disj(const DisjTerm& t1, const DisjTerm& t2) {
  auto a = infer_type_disj(t1), b = infer_type_disj(t2);
  if (!(a == b))
    throw TypeMismatch("terms of types " + std::to_string(a.src) + " -> " + std::to_string(a.tgt) +
                       " and " + std::to_string(b.src) + " -> " + std::to_string(b.tgt) +
                       " are not comparable");
  return eval_F_unchecked(t1) == eval_F_unchecked(t2);
}

bool eq_conj(const ConjTerm& t1, const ConjTerm& t2) {
  auto a = infer_type_conj(t1), b = infer_type_conj(t2);
  if (!(a == b))
    throw TypeMismatch("terms of types " + to_text(a.src) + " -> " + to_text(a.tgt) + " and " +
                       to_text(b.src) + " -> " + to_text(b.tgt) + " are not comparable");
  return eval_H_unchecked(t1) == eval_H_unchecked(t2);
}

ConjObj normalize_obj(ConjObj a) {
  require_obj(a);
  std::sort(a.begin(), a.end());
  return a;
}

int obj_code(const ConjObj& a) {
  require_obj(a);
  long long code = 1;
  for (int i : a) {
    code *= nth_prime(i);
    if (code > std::numeric_limits<int>::max())
      throw OutOfRange("object code of " + to_text(a) + " exceeds the supported range");
  }
  return static_cast<int>(code);
}

Radices obj_radices(const ConjObj& a) {
  std::vector<int> primes;
  primes.reserve(a.size());
  for (int i : a) primes.push_back(nth_prime(i));
  return Radices(std::move(primes));
}

}  // namespace condis
