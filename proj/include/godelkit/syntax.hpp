#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "godelkit/nat.hpp"

namespace godelkit {

// ---------------------------------------------------------------------------
// Symbol alphabet
//
// Every syntactic object (term, formula, proof, program) is a finite tree
// over one fixed label alphabet. Label codes 0..57 are the plain symbols
// below; variables and numeral literals are leaves whose label code packs
// the index/value into the code itself:
//
//   label(Var i)    = 58 + 2*i
//   label(NumLit n) = 59 + 2*n
//
// The table is normative: all published code values are computed against it
// (see docs/numbering.md).
// ---------------------------------------------------------------------------

enum class Sym : unsigned {
  Zero = 0,
  Succ = 1,
  Add = 2,
  Mul = 3,
  Eq = 4,
  Bottom = 5,
  Implies = 6,
  And = 7,
  Or = 8,
  Not = 9,
  Forall = 10,
  Exists = 11,
  DefPred = 12,
  PProj = 13,
  PZero = 14,
  PSucc = 15,
  PAdd = 16,
  PMul = 17,
  PChiLeq = 18,
  PComp = 19,
  PMu = 20,
  PRec = 21,
  RuleMp = 22,
  RuleGen = 23,
  AxImpK = 24,
  AxImpS = 25,
  AxEfq = 26,
  AxDne = 27,
  AxNegIntro = 28,
  AxNegElim = 29,
  AxTrue = 30,
  AxAndIntro = 31,
  AxAndLeft = 32,
  AxAndRight = 33,
  AxOrLeft = 34,
  AxOrRight = 35,
  AxOrElim = 36,
  AxForallInst = 37,
  AxForallDistr = 38,
  AxForallVac = 39,
  AxExistsIntro = 40,
  AxExistsElim = 41,
  AxEqRefl = 42,
  AxEqSym = 43,
  AxEqTrans = 44,
  AxEqSucc = 45,
  AxEqAdd = 46,
  AxEqMul = 47,
  AxLitZero = 48,
  AxLitSucc = 49,
  AxQ1 = 50,
  AxQ2 = 51,
  AxQ3 = 52,
  AxQ4 = 53,
  AxQ5 = 54,
  AxQ6 = 55,
  AxQ7 = 56,
  AxInduction = 57,
};

inline constexpr unsigned kSymbolCount = 58;

inline Nat var_label(const Nat& index) { return Nat(kSymbolCount) + 2 * index; }
inline Nat lit_label(const Nat& value) { return Nat(kSymbolCount) + 1 + 2 * value; }

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Zero, Succ, Add, Mul, Var, Lit };
  Kind kind;
  TermPtr a, b;  // Succ uses a; Add/Mul use a,b
  Nat value;     // Var index or Lit value

  Term(Kind k, TermPtr x, TermPtr y, Nat v)
      : kind(k), a(std::move(x)), b(std::move(y)), value(std::move(v)) {}
};

TermPtr mk_zero();
TermPtr mk_succ(TermPtr t);
TermPtr mk_add(TermPtr a, TermPtr b);
TermPtr mk_mul(TermPtr a, TermPtr b);
TermPtr mk_var(Nat index);
TermPtr mk_lit(Nat value);

// numeral(n): the term standing for the natural number n.
inline TermPtr numeral(Nat n) { return mk_lit(std::move(n)); }

bool term_equal(const TermPtr& a, const TermPtr& b);
bool term_closed(const TermPtr& t);
void collect_term_vars(const TermPtr& t, std::set<Nat>& out);

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Eq, Bottom, Implies, And, Or, Not, Forall, Exists, DefPred };
  Kind kind;
  TermPtr t1, t2;          // Eq
  FormulaPtr f1, f2;       // connectives; quantifier body in f1
  Nat var;                 // quantifier variable index
  Nat pred;                // oracle predicate id
  std::vector<TermPtr> args;  // DefPred arguments

  explicit Formula(Kind k) : kind(k) {}
};

FormulaPtr mk_eq(TermPtr a, TermPtr b);
FormulaPtr mk_bottom();
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_not(FormulaPtr a);
FormulaPtr mk_forall(Nat var, FormulaPtr body);
FormulaPtr mk_exists(Nat var, FormulaPtr body);
FormulaPtr mk_defpred(Nat pred, std::vector<TermPtr> args);

// Truth constant: the empty conjunction is spelled (not bot).
inline FormulaPtr mk_top() { return mk_not(mk_bottom()); }

// x <= y and x < y as their defining shapes; the bound variable of the
// existential is chosen fresh for the two terms.
FormulaPtr mk_le(const TermPtr& x, const TermPtr& y);
FormulaPtr mk_lt(const TermPtr& x, const TermPtr& y);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
std::set<Nat> free_vars(const FormulaPtr& f);
bool var_free_in(const FormulaPtr& f, const Nat& v);
bool is_pure(const FormulaPtr& f);  // no DefPred node anywhere
bool formula_closed(const FormulaPtr& f);

// Largest variable index occurring in f (free or bound), or nullopt.
std::optional<Nat> max_var_index(const FormulaPtr& f);

// substitute(f, v, t): replaces free occurrences of v by the closed term t.
// Open t is rejected; closedness makes variable capture impossible.
TermPtr substitute(const TermPtr& s, const Nat& v, const TermPtr& t);
FormulaPtr substitute(const FormulaPtr& f, const Nat& v, const TermPtr& t);

// Rename free occurrences of v to the variable w. Used internally where w is
// known fresh; callers must guarantee w is not captured.
FormulaPtr rename_free_var(const FormulaPtr& f, const Nat& v, const Nat& w);

// Replace free occurrences of v by a term whose variables cannot be captured
// at any free position of v (precondition of the caller, e.g. t = S(v)).
FormulaPtr replace_var_unchecked(const FormulaPtr& f, const Nat& v, const TermPtr& t);

// ---------------------------------------------------------------------------
// expand_numeral: unfold Lit n (n <= cap) into the n-fold successor of zero.
// ---------------------------------------------------------------------------

struct ExpandResult {
  TermPtr term;
  bool complete;  // false if some literal above the cap was left in place
};

struct ExpandFormulaResult {
  FormulaPtr formula;
  bool complete;
};

ExpandResult expand_numeral(const TermPtr& t, const Nat& cap);
ExpandFormulaResult expand_numeral(const FormulaPtr& f, const Nat& cap);

// ---------------------------------------------------------------------------
// Articulated trees: the common tree view every syntactic category maps into.
// ---------------------------------------------------------------------------

struct ArtTree {
  Nat label;
  std::vector<ArtTree> children;
};

bool art_equal(const ArtTree& a, const ArtTree& b);

ArtTree to_articulated(const TermPtr& t);
ArtTree to_articulated(const FormulaPtr& f);

// Inverses; nullopt when the tree violates the arity/label discipline of the
// category.
std::optional<TermPtr> term_from_articulated(const ArtTree& t);
std::optional<FormulaPtr> formula_from_articulated(const ArtTree& t);

}  // namespace godelkit
