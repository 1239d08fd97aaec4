#pragma once

#include "godelkit/model.hpp"
#include "godelkit/program.hpp"
#include "godelkit/syntax.hpp"

namespace godelkit {

// A program together with the arithmetic formula tracking it. The formula's
// free variables are exactly x1..xn (the arguments, variables 1..n) and y
// (the value, variable 0); it contains no defined predicates.
struct RepFormula {
  ProgramPtr program;
  FormulaPtr formula;
};

// The clause-by-clause translation of Rec-free programs into formulas.
// Fresh existential witnesses are allocated deterministically above every
// variable of the subformulas, so compilation is reproducible bit for bit.
RepFormula compile(const ProgramPtr& p);

// Evaluates compile(p) at numerals for the arguments and candidate value in
// the standard model. True must coincide with run(p, args) = q.
TriBool check_weak_representation(const ProgramPtr& p, const std::vector<Nat>& args, const Nat& q,
                                  const Nat& cap);

// forall y (A[args, y] <=> y = r) with r = run(p, args); throws when the
// program exhausts the fuel instead of producing a value.
FormulaPtr strong_rep_formula(const ProgramPtr& p, const std::vector<Nat>& args, const Nat& fuel);

// exists y A[args, y]: true in the standard model iff p halts on args.
FormulaPtr to_halting_formula(const ProgramPtr& p, const std::vector<Nat>& args);

}  // namespace godelkit
