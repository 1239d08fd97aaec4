#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "godelkit/syntax.hpp"

namespace godelkit {

// Three-valued verdict of bounded evaluation in the standard model.
// Connectives follow the strong Kleene tables.
enum class TriBool { False, True, Unknown };

TriBool tri_not(TriBool a);
TriBool tri_and(TriBool a, TriBool b);
TriBool tri_or(TriBool a, TriBool b);
TriBool tri_implies(TriBool a, TriBool b);
const char* tri_name(TriBool a);

using Env = std::map<Nat, Nat>;

// Host-level semantics of a defined predicate symbol. When the relation
// determines one argument from the others (substitution-on-codes determines
// its output slot, for instance), `functional_slot`/`solve` expose that, and
// the evaluator can decide existentials over that slot exactly.
struct Oracle {
  std::function<bool(const std::vector<Nat>&)> holds;
  std::optional<std::size_t> functional_slot;
  // Receives the full argument vector with the functional slot's entry
  // meaningless; returns the unique value making the relation hold, if any.
  std::function<std::optional<Nat>(const std::vector<Nat>&)> solve;
};

using OracleTable = std::map<Nat, Oracle>;

// Identifiers of the standard defined predicates.
inline const Nat kOracleProof = 0;  // Proof[n, p, b]: b = 1 iff n codes a proof of the formula coded by p
inline const Nat kOracleSub = 1;    // S[n, p, m]: m codes the formula n with the numeral of p plugged in
inline const Nat kOracleNeg = 2;    // Neg[n, m]: m codes the negation of the formula coded by n

Nat eval_term(const TermPtr& t, const Env& env);
std::optional<Nat> try_eval_term(const TermPtr& t, const Env& env);

// Bounded evaluation in N. Exact on: quantifier-free formulas, the bounded
// quantifier shapes (forall z (z < t => B) and friends), and existentials
// whose witness is pinned by an equation linear in the witness or by a
// functional oracle slot. Everything else searches witnesses/counterexamples
// up to `cap` and reports Unknown at exhaustion.
TriBool eval(const FormulaPtr& f, const Env& env, const Nat& cap, const OracleTable& oracles);

enum class BoundKind { Strict, Inclusive };

// Unfolds forall z (z < t => B) (resp. z <= t) with a closed bound into the
// finite conjunction B[0] /\ ... /\ B[bound-1] (resp. bound); the empty
// conjunction is (not bot). Throws on shape mismatch.
FormulaPtr expand_bounded(const FormulaPtr& f, BoundKind which);

}  // namespace godelkit
