#pragma once

#include <optional>

#include "godelkit/syntax.hpp"

namespace godelkit {

// Gödel numbers are plain naturals; the syntactic category is supplied by
// context when decoding.
using Code = Nat;

enum class Category { Term, Formula, Proof, Program };

// Cantor's bijection from N^2 onto N \ {0}:
//   pair(n, p) = (n+p)(n+p+1)/2 + n + 1
Code cantor_pair(const Nat& n, const Nat& p);

// Inverse of cantor_pair; rejects 0 (not in the image).
std::pair<Nat, Nat> cantor_unpair(const Code& c);

// Tree numbering: code(f(t1,...,tp)) = label ; (code(t1) ; (... ; (code(tp) ; 0)...))
Code encode(const ArtTree& t);

// Untyped structural decode; nullopt when c is not the code of any tree.
std::optional<ArtTree> decode_tree(const Code& c);

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;
struct Program;
using ProgramPtr = std::shared_ptr<const Program>;

std::optional<TermPtr> decode_term(const Code& c);
std::optional<FormulaPtr> decode_formula(const Code& c);

Code godel_number(const TermPtr& t);
Code godel_number(const FormulaPtr& f);

// reflect(A): the closed term standing for A's own Gödel number.
TermPtr reflect(const FormulaPtr& f);

// Upper bound on bit_length(encode(t)) computed without materializing any
// code. Used to refuse constructions whose numbers would not fit in memory.
Nat encoded_bits_bound(const ArtTree& t);

}  // namespace godelkit
