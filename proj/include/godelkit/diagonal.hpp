#pragma once

#include <optional>

#include "godelkit/calculus.hpp"
#include "godelkit/model.hpp"
#include "godelkit/numbering.hpp"

namespace godelkit {

// Substitution on codes: n must code a formula with at most one free
// variable; the result codes that formula with the numeral of p plugged in.
// Codes of closed formulas map to themselves. Throws on undecodable input or
// several free variables.
Code sub_on_codes(const Code& n, const Code& p);
std::optional<Code> try_sub_on_codes(const Code& n, const Code& p);

// Negation on codes.
Code neg_on_codes(const Code& n);
std::optional<Code> try_neg_on_codes(const Code& n);

// Host semantics for the Proof, S and Neg predicate symbols.
OracleTable standard_oracles(Theory theory);

// Result of the fixed-point construction: D = exists z (C[z] /\ S[x1,x2,z]),
// E = D[w,w], G = E[code(E) as a numeral]. When verified, code_G equals
// sub_on_codes(code_E, code_E) exactly.
struct FixpointResult {
  FormulaPtr c;
  Nat c_var;  // designated free variable of C
  FormulaPtr d;
  FormulaPtr e;
  Nat e_var;  // the single free variable of E
  FormulaPtr g;
  std::optional<Code> code_e;
  std::optional<Code> code_g;
  bool identity_checked = false;
};

struct FixpointOptions {
  bool verify = true;  // compute both codes and insist on the diagonal identity
  // Refuse to materialize codes whose size bound exceeds this many bits.
  Nat max_code_bits = Nat(1) << 29;
};

// General fixed point of a formula C with exactly one free variable.
FixpointResult fixpoint(const FormulaPtr& c, const FixpointOptions& options = {});

FixpointResult godel_sentence(const FixpointOptions& options = {});
FixpointResult henkin_sentence(const FixpointOptions& options = {});
FixpointResult loeb_sentence(const FormulaPtr& p, const FixpointOptions& options = {});
FixpointResult rosser_sentence(const FixpointOptions& options = {});

// C[reflect(G)], the right-hand side of the defining equivalence, obtained by
// rewriting the S conjunct to z = code(G).
FormulaPtr equiv_unfold(const FixpointResult& r, const FixpointOptions& options = {});

}  // namespace godelkit
