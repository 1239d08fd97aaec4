#pragma once

#include <string>

#include "godelkit/calculus.hpp"
#include "godelkit/program.hpp"
#include "godelkit/syntax.hpp"

namespace godelkit {

// Fully parenthesized prefix notation; print and parse round-trip exactly.
//
//   term     := 0 | x<k> | (S t) | (+ t u) | (* t u) | (lit n)
//   formula  := bot | (= t u) | (=> f g) | (and f g) | (or f g) | (not f)
//             | (forall x<k> f) | (exists x<k> f) | (defpred <name> t*)
//   program  := succ | add | mul | chileq | (z n) | (proj n i)
//             | (comp n m h (g*)) | (mu n g) | (rec n base step)
//   proof    := (node <formula> <rule-tag> (<proof>*))
//
// Defined-predicate names: Proof, S, Neg for identifiers 0..2, p<k> beyond.

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);
std::string print_program(const ProgramPtr& p);
std::string print_proof(const ProofPtr& p);

TermPtr parse_term(const std::string& text);
FormulaPtr parse_formula(const std::string& text);
ProgramPtr parse_program(const std::string& text);
ProofPtr parse_proof(const std::string& text);

}  // namespace godelkit
