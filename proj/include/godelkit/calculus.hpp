#pragma once

#include <optional>
#include <vector>

#include "godelkit/model.hpp"
#include "godelkit/numbering.hpp"
#include "godelkit/syntax.hpp"

namespace godelkit {

enum class Theory { Q, PA };

// Rule tags share their numeric codes with the symbol alphabet.
enum class RuleTag : unsigned {
  Mp = 22,
  Gen = 23,
  ImpK = 24,
  ImpS = 25,
  Efq = 26,
  Dne = 27,
  NegIntro = 28,
  NegElim = 29,
  TruthIntro = 30,
  AndIntro = 31,
  AndLeft = 32,
  AndRight = 33,
  OrLeft = 34,
  OrRight = 35,
  OrElim = 36,
  ForallInst = 37,
  ForallDistr = 38,
  ForallVac = 39,
  ExistsIntro = 40,
  ExistsElim = 41,
  EqRefl = 42,
  EqSym = 43,
  EqTrans = 44,
  EqSucc = 45,
  EqAdd = 46,
  EqMul = 47,
  LitZero = 48,
  LitSucc = 49,
  Q1 = 50,
  Q2 = 51,
  Q3 = 52,
  Q4 = 53,
  Q5 = 54,
  Q6 = 55,
  Q7 = 56,
  Induction = 57,
};

inline constexpr unsigned kFirstRuleTag = 22;
inline constexpr unsigned kLastRuleTag = 57;

const std::vector<RuleTag>& all_rule_tags();
const char* rule_tag_name(RuleTag t);
std::optional<RuleTag> rule_tag_from_name(const std::string& name);

// Deduction trees: a conclusion, the rule said to justify it, and the
// subproofs of the rule's premises. Validity of a node depends only on its
// conclusion, tag and premise conclusions.
struct Proof {
  FormulaPtr conclusion;
  RuleTag tag;
  std::vector<ProofPtr> premises;
};

ProofPtr mk_proof(FormulaPtr conclusion, RuleTag tag, std::vector<ProofPtr> premises);
bool proof_equal(const ProofPtr& a, const ProofPtr& b);

// The one normative rule source both checkers consult: does `tag` license
// `conclusion` from premises with the given conclusions? Axiom schemas admit
// any prefix of universal quantifiers in front of their instance.
bool rule_licenses(RuleTag tag, const FormulaPtr& conclusion,
                   const std::vector<FormulaPtr>& premises, Theory theory);

// Recursive reference checker: 1 iff every node matches its rule.
int check_direct(const ProofPtr& p, Theory theory);

// ---------------------------------------------------------------------------
// The rewriting machine: trees whose leaves are proofs or bits, with binary
// "and" nodes; reduction contracts the leftmost redex.
// ---------------------------------------------------------------------------

struct MTree;
using MTreePtr = std::shared_ptr<const MTree>;

struct MTree {
  enum class Kind { Bit, ProofLeaf, AndNode };
  Kind kind;
  int bit = 0;
  ProofPtr proof;
  MTreePtr left, right;
};

MTreePtr mt_bit(int b);
MTreePtr mt_leaf(ProofPtr p);
MTreePtr mt_and(MTreePtr l, MTreePtr r);
bool mt_equal(const MTreePtr& a, const MTreePtr& b);
bool mt_irreducible(const MTreePtr& t);

// Contracts exactly the leftmost redex; throws on irreducible input.
MTreePtr machine_step(const MTreePtr& t, Theory theory);

// Iterates machine_step from a single proof leaf to a bit.
int machine_check(const ProofPtr& p, Theory theory);

// Number of steps machine_check takes to reach a bit.
std::uint64_t machine_reduction_length(const ProofPtr& p, Theory theory);

// ---------------------------------------------------------------------------
// Numbering-level interface
// ---------------------------------------------------------------------------

ArtTree to_articulated(const ProofPtr& p);
std::optional<ProofPtr> proof_from_articulated(const ArtTree& t);
std::optional<ProofPtr> decode_proof(const Code& c);
Code godel_number(const ProofPtr& p);

// 1 iff n codes a valid proof whose root conclusion has code p.
int proof_predicate(const Code& n, const Code& p, Theory theory);

// Same predicate with the target given as a formula; avoids encoding it.
int proof_predicate_root(const Code& n, const FormulaPtr& a, Theory theory);

// Least x <= fuel with proof_predicate(x, code(A)) = 1, else nullopt.
// Candidates are enumerated in increasing order within the family of codes
// whose root conclusion matches A; everything outside that family fails the
// root test by construction, so the result equals the plain scan's.
std::optional<Code> search_proof(const FormulaPtr& a, const Nat& fuel, Theory theory);

// Reference scan over every natural <= fuel; for differential tests.
std::optional<Code> search_proof_naive(const FormulaPtr& a, const Nat& fuel, Theory theory);

struct DecideResult {
  enum class Kind { ProvedA, ProvedNegA, NotFound } kind = Kind::NotFound;
  Code code;
};

// Interleaved search for a proof of A or of (not A); smallest code wins.
DecideResult decide_both(const FormulaPtr& a, const Nat& fuel, Theory theory);

// 1 iff some x <= n has proof_predicate(x, code(A)) = 1; plain scan.
int bounded_provable(const FormulaPtr& a, const Nat& n, Theory theory);

// Bew = exists z Proof[z, x, 1] with designated free variable x0.
FormulaPtr bew_formula();

// box(A) = Bew[reflect A]
FormulaPtr box(const FormulaPtr& a);

// Witness record for: if A is provable then box(A) holds. Checks the proof,
// then confirms Proof[witness, code(A), 1] through the oracle, which is the
// witness instance deciding eval(box(A)) at any cap >= witness.
struct NecessitationEvidence {
  Code witness;
  FormulaPtr box_formula;
  bool instance_true;
};

NecessitationEvidence necessitation_check(const ProofPtr& p, Theory theory,
                                          const OracleTable& oracles);

}  // namespace godelkit
