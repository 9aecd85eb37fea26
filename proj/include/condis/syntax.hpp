#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "condis/brauer.hpp"
#include "condis/finfun.hpp"
#include "condis/gen.hpp"

namespace condis {

// --- the disjunctive language (one letter, objects are ordinals) ---------

struct DisjTerm;
using DisjTermPtr = std::shared_ptr<const DisjTerm>;

struct DisjTerm {
  enum class Kind { Id, Kappa, In1, In2, Fold, Seq, Sum, Case };
  Kind kind;
  int n = 0;  // leaf parameters
  int m = 0;
  DisjTermPtr lhs;
  DisjTermPtr rhs;
};

bool operator==(const DisjTerm& a, const DisjTerm& b);

DisjTermPtr d_id(int n);
DisjTermPtr d_kappa(int n);
DisjTermPtr d_in1(int n, int m);
DisjTermPtr d_in2(int n, int m);
DisjTermPtr d_fold(int n);
DisjTermPtr d_seq(DisjTermPtr first, DisjTermPtr then);  // first, then then
DisjTermPtr d_sum(DisjTermPtr a, DisjTermPtr b);
DisjTermPtr d_case(DisjTermPtr a, DisjTermPtr b);

struct DisjType {
  int src = 0;
  int tgt = 0;
  bool operator==(const DisjType&) const = default;
};

// --- the conjunctive language (letters p1, p2, ...; objects are words) ---

// A finite sequence of generator indices, each >= 1.
using ConjObj = std::vector<int>;

struct ConjTerm;
using ConjTermPtr = std::shared_ptr<const ConjTerm>;

struct ConjTerm {
  enum class Kind { Id, Bang, Pr1, Pr2, Dup, Seq, Prod, Pair };
  Kind kind;
  ConjObj a;  // leaf object parameters
  ConjObj b;
  ConjTermPtr lhs;
  ConjTermPtr rhs;
};

bool operator==(const ConjTerm& a, const ConjTerm& b);

ConjTermPtr c_id(ConjObj a);
ConjTermPtr c_bang(ConjObj a);
ConjTermPtr c_pr1(ConjObj a, ConjObj b);
ConjTermPtr c_pr2(ConjObj a, ConjObj b);
ConjTermPtr c_dup(ConjObj a);
ConjTermPtr c_seq(ConjTermPtr first, ConjTermPtr then);
ConjTermPtr c_prod(ConjTermPtr a, ConjTermPtr b);
ConjTermPtr c_pair(ConjTermPtr a, ConjTermPtr b);

struct ConjType {
  ConjObj src;
  ConjObj tgt;
  bool operator==(const ConjType&) const = default;
};

// --- parsing and printing ------------------------------------------------

// term := 'id' NAT | 'kappa' NAT | 'in1' NAT NAT | 'in2' NAT NAT | 'fold' NAT
//       | '(' term ';' term ')' | '(' term '+' term ')' | '[' term ',' term ']'
DisjTermPtr parse_disj(std::string_view text);

// obj  := 'I' | 'p'NAT ('*' 'p'NAT)*
// term := 'id' obj | 'bang' obj | 'pr1' obj '|' obj | 'pr2' obj '|' obj
//       | 'dup' obj | '(' term ';' term ')' | '(' term '*' term ')'
//       | '<' term ',' term '>'
ConjTermPtr parse_conj(std::string_view text);

std::string to_text(const DisjTerm& t);
std::string to_text(const ConjTerm& t);
std::string to_text(const ConjObj& a);

// --- typing and semantics ------------------------------------------------

DisjType infer_type_disj(const DisjTerm& t);
ConjType infer_type_conj(const ConjTerm& t);

// The coproduct semantics: the letter denotes 1, Seq composes, Sum and Case
// land on sum and bracket.
FinFun eval_F(const DisjTerm& t);

// The product semantics: letter p_n denotes the n-th prime, objects denote
// products of primes, Pr/Dup/Bang land on proj/diag/terminal.
FinFun eval_H(const ConjTerm& t);

// The collapse-every-letter-to-1 semantics, returned as the underlying
// arrow: a term A -> B yields a FinFun |B| -> |A| on object lengths.
FinFun eval_G(const ConjTerm& t);

// j_of(eval_G(t)): the split equivalence of a conjunctive term,
// |source| -> |target| on letter counts.
SplitEq jg(const ConjTerm& t);

// The representation route: f_ab_fun over the prime radices of the term's
// objects applied to jg(t). Agrees with eval_H on every well-typed term.
FinFun eval_H_via_gen(const ConjTerm& t);

// Builds a term from Id, Kappa, In1, In2, Seq, Case with eval_F(result) == f,
// peeling the last source element into a Case at each step.
// Requires f.tgt >= 1 or f.src == 0.
DisjTermPtr synth_disj(const FinFun& f);

// synth_disj(eval_H(t)): a one-letter disjunctive deduction denoting the
// same finite function as the conjunctive term.
DisjTermPtr conj_to_disj(const ConjTerm& t);

// Semantic equality; both terms must have identical source and target.
bool eq_disj(const DisjTerm& t1, const DisjTerm& t2);
bool eq_conj(const ConjTerm& t1, const ConjTerm& t2);

// Sorted-letters normal form and the prime product code of an object.
ConjObj normalize_obj(ConjObj a);
int obj_code(const ConjObj& a);

// The prime radices of an object, in letter order.
Radices obj_radices(const ConjObj& a);

}  // namespace condis
