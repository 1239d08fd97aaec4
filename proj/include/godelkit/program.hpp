#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "godelkit/numbering.hpp"
#include "godelkit/syntax.hpp"

namespace godelkit {

// Construction trees of computable functions. A program denotes a function
// by its construction, not extensionally; two constructions of the same
// function are distinct programs with distinct codes.
struct Program {
  enum class Kind { Proj, Zero, Succ, Add, Mul, ChiLeq, Comp, Mu, Rec };
  Kind kind;
  std::uint64_t n = 0;  // declared arity (Proj/Zero/Comp/Mu/Rec)
  std::uint64_t i = 0;  // projection index
  std::uint64_t m = 0;  // composition count
  ProgramPtr h;         // Comp outer / Mu body / Rec base
  ProgramPtr r;         // Rec step
  std::vector<ProgramPtr> gs;

  explicit Program(Kind k) : kind(k) {}
};

ProgramPtr p_proj(std::uint64_t n, std::uint64_t i);
ProgramPtr p_zero(std::uint64_t n);
ProgramPtr p_succ();
ProgramPtr p_add();
ProgramPtr p_mul();
ProgramPtr p_chileq();
ProgramPtr p_comp(std::uint64_t n, std::uint64_t m, ProgramPtr h, std::vector<ProgramPtr> gs);
ProgramPtr p_mu(std::uint64_t n, ProgramPtr g);
ProgramPtr p_rec(std::uint64_t n, ProgramPtr base, ProgramPtr step);

bool program_equal(const ProgramPtr& a, const ProgramPtr& b);
bool contains_rec(const ProgramPtr& p);

// Declared arity; throws on arity-discipline violations, naming the node.
std::uint64_t arity(const ProgramPtr& p);

// Evaluation outcome: either a value or an exhausted fuel budget. The budget
// counts mu-candidate tests plus Rec unfoldings, one shared budget per run.
struct RunOutcome {
  std::optional<Nat> value;
  bool exhausted() const { return !value.has_value(); }
};

RunOutcome run(const ProgramPtr& p, const std::vector<Nat>& args, const Nat& fuel);

// beta(a, b, i) = a mod (1 + (i+1) * b)
Nat beta(const Nat& a, const Nat& b, const Nat& i);

// Finds (a, b) with beta(a, b, i) = seq[i] for every i, by the Chinese
// remainder theorem over the moduli 1 + (i+1) * b, b = m! for
// m = max(length, max value) + 1.
std::pair<Nat, Nat> beta_encode(const std::vector<Nat>& seq);

// Compiles away every Rec node: definitions by induction are replaced by a
// mu-search for a beta-coded course-of-values sequence. The result has the
// same arity and agrees with the input wherever the input terminates.
ProgramPtr eliminate_rec(const ProgramPtr& p);

ArtTree to_articulated(const ProgramPtr& p);
std::optional<ProgramPtr> program_from_articulated(const ArtTree& t);
std::optional<ProgramPtr> decode_program(const Code& c);
Code godel_number(const ProgramPtr& p);

}  // namespace godelkit
