#include "godelkit/calculus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <tuple>

namespace godelkit {

const std::vector<RuleTag>& all_rule_tags() {
  static const std::vector<RuleTag> tags = [] {
    std::vector<RuleTag> v;
    for (unsigned c = kFirstRuleTag; c <= kLastRuleTag; ++c) v.push_back(static_cast<RuleTag>(c));
    return v;
  }();
  return tags;
}

const char* rule_tag_name(RuleTag t) {
  switch (t) {
    case RuleTag::Mp: return "mp";
    case RuleTag::Gen: return "gen";
    case RuleTag::ImpK: return "ax-imp-k";
    case RuleTag::ImpS: return "ax-imp-s";
    case RuleTag::Efq: return "ax-efq";
    case RuleTag::Dne: return "ax-dne";
    case RuleTag::NegIntro: return "ax-neg-intro";
    case RuleTag::NegElim: return "ax-neg-elim";
    case RuleTag::TruthIntro: return "ax-true";
    case RuleTag::AndIntro: return "ax-and-intro";
    case RuleTag::AndLeft: return "ax-and-left";
    case RuleTag::AndRight: return "ax-and-right";
    case RuleTag::OrLeft: return "ax-or-left";
    case RuleTag::OrRight: return "ax-or-right";
    case RuleTag::OrElim: return "ax-or-elim";
    case RuleTag::ForallInst: return "ax-forall-inst";
    case RuleTag::ForallDistr: return "ax-forall-distr";
    case RuleTag::ForallVac: return "ax-forall-vac";
    case RuleTag::ExistsIntro: return "ax-exists-intro";
    case RuleTag::ExistsElim: return "ax-exists-elim";
    case RuleTag::EqRefl: return "ax-eq-refl";
    case RuleTag::EqSym: return "ax-eq-sym";
    case RuleTag::EqTrans: return "ax-eq-trans";
    case RuleTag::EqSucc: return "ax-eq-succ";
    case RuleTag::EqAdd: return "ax-eq-add";
    case RuleTag::EqMul: return "ax-eq-mul";
    case RuleTag::LitZero: return "ax-lit-zero";
    case RuleTag::LitSucc: return "ax-lit-succ";
    case RuleTag::Q1: return "ax-q1";
    case RuleTag::Q2: return "ax-q2";
    case RuleTag::Q3: return "ax-q3";
    case RuleTag::Q4: return "ax-q4";
    case RuleTag::Q5: return "ax-q5";
    case RuleTag::Q6: return "ax-q6";
    case RuleTag::Q7: return "ax-q7";
    case RuleTag::Induction: return "ax-induction";
  }
  return "?";
}

std::optional<RuleTag> rule_tag_from_name(const std::string& name) {
  static const std::map<std::string, RuleTag> table = [] {
    std::map<std::string, RuleTag> m;
    for (RuleTag t : all_rule_tags()) m.emplace(rule_tag_name(t), t);
    return m;
  }();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

ProofPtr mk_proof(FormulaPtr conclusion, RuleTag tag, std::vector<ProofPtr> premises) {
  auto p = std::make_shared<Proof>();
  p->conclusion = std::move(conclusion);
  p->tag = tag;
  p->premises = std::move(premises);
  return p;
}

bool proof_equal(const ProofPtr& a, const ProofPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->tag != b->tag || a->premises.size() != b->premises.size()) return false;
  if (!formula_equal(a->conclusion, b->conclusion)) return false;
  for (std::size_t i = 0; i < a->premises.size(); ++i)
    if (!proof_equal(a->premises[i], b->premises[i])) return false;
  return true;
}

namespace {

using F = const FormulaPtr&;

bool is_imp(F f) { return f->kind == Formula::Kind::Implies; }
bool is_forall(F f) { return f->kind == Formula::Kind::Forall; }

FormulaPtr strip_foralls(FormulaPtr f) {
  while (f->kind == Formula::Kind::Forall) f = f->f1;
  return f;
}

// Infers the term t with b = a[t/x] (t plugged for the free occurrences of
// x), walking a and b in parallel. Rejects inconsistent positions. When x has
// no free occurrence, returns Zero provided a and b are equal.
struct SubstMatcher {
  const Nat& x;
  std::optional<TermPtr> t;
  bool ok = true;

  void fail() { ok = false; }

  void match_term(const TermPtr& a, const TermPtr& b, bool shadowed) {
    if (!ok) return;
    if (a->kind == Term::Kind::Var && a->value == x && !shadowed) {
      if (t) {
        if (!term_equal(*t, b)) fail();
      } else {
        t = b;
      }
      return;
    }
    if (a->kind != b->kind) return fail();
    switch (a->kind) {
      case Term::Kind::Zero:
        return;
      case Term::Kind::Var:
      case Term::Kind::Lit:
        if (a->value != b->value) fail();
        return;
      case Term::Kind::Succ:
        return match_term(a->a, b->a, shadowed);
      case Term::Kind::Add:
      case Term::Kind::Mul:
        match_term(a->a, b->a, shadowed);
        match_term(a->b, b->b, shadowed);
        return;
    }
  }

  void match_formula(F a, F b, bool shadowed) {
    if (!ok) return;
    if (a->kind != b->kind) return fail();
    switch (a->kind) {
      case Formula::Kind::Eq:
        match_term(a->t1, b->t1, shadowed);
        match_term(a->t2, b->t2, shadowed);
        return;
      case Formula::Kind::Bottom:
        return;
      case Formula::Kind::Implies:
      case Formula::Kind::And:
      case Formula::Kind::Or:
        match_formula(a->f1, b->f1, shadowed);
        match_formula(a->f2, b->f2, shadowed);
        return;
      case Formula::Kind::Not:
        return match_formula(a->f1, b->f1, shadowed);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        if (a->var != b->var) return fail();
        return match_formula(a->f1, b->f1, shadowed || a->var == x);
      case Formula::Kind::DefPred: {
        if (a->pred != b->pred || a->args.size() != b->args.size()) return fail();
        for (std::size_t i = 0; i < a->args.size(); ++i)
          match_term(a->args[i], b->args[i], shadowed);
        return;
      }
    }
  }
};

std::optional<TermPtr> infer_closed_subst(F a, const Nat& x, F b) {
  SubstMatcher m{x, std::nullopt, true};
  m.match_formula(a, b, false);
  if (!m.ok) return std::nullopt;
  if (!m.t) return formula_equal(a, b) ? std::optional<TermPtr>(mk_zero()) : std::nullopt;
  if (!term_closed(*m.t)) return std::nullopt;
  return m.t;
}

bool term_has_var(const TermPtr& t, const Nat& v) {
  std::set<Nat> vs;
  collect_term_vars(t, vs);
  return vs.count(v) > 0;
}

bool axiom_matches(RuleTag tag, F core, Theory theory) {
  using K = Formula::Kind;
  using TK = Term::Kind;
  switch (tag) {
    case RuleTag::ImpK:  // A => (B => A)
      return is_imp(core) && is_imp(core->f2) && formula_equal(core->f1, core->f2->f2);
    case RuleTag::ImpS: {  // (A => (B => C)) => ((A => B) => (A => C))
      if (!is_imp(core) || !is_imp(core->f1) || !is_imp(core->f1->f2) || !is_imp(core->f2))
        return false;
      F abc = core->f1;
      F rhs = core->f2;
      if (!is_imp(rhs->f1) || !is_imp(rhs->f2)) return false;
      F a = abc->f1, b = abc->f2->f1, c = abc->f2->f2;
      return formula_equal(rhs->f1->f1, a) && formula_equal(rhs->f1->f2, b) &&
             formula_equal(rhs->f2->f1, a) && formula_equal(rhs->f2->f2, c);
    }
    case RuleTag::Efq:  // bot => A
      return is_imp(core) && core->f1->kind == K::Bottom;
    case RuleTag::Dne:  // not not A => A
      return is_imp(core) && core->f1->kind == K::Not && core->f1->f1->kind == K::Not &&
             formula_equal(core->f1->f1->f1, core->f2);
    case RuleTag::NegIntro:  // (A => bot) => not A
      return is_imp(core) && is_imp(core->f1) && core->f1->f2->kind == K::Bottom &&
             core->f2->kind == K::Not && formula_equal(core->f1->f1, core->f2->f1);
    case RuleTag::NegElim:  // not A => (A => bot)
      return is_imp(core) && core->f1->kind == K::Not && is_imp(core->f2) &&
             core->f2->f2->kind == K::Bottom && formula_equal(core->f1->f1, core->f2->f1);
    case RuleTag::TruthIntro:  // not bot
      return core->kind == K::Not && core->f1->kind == K::Bottom;
    case RuleTag::AndIntro:  // A => (B => (A /\ B))
      return is_imp(core) && is_imp(core->f2) && core->f2->f2->kind == K::And &&
             formula_equal(core->f2->f2->f1, core->f1) &&
             formula_equal(core->f2->f2->f2, core->f2->f1);
    case RuleTag::AndLeft:  // (A /\ B) => A
      return is_imp(core) && core->f1->kind == K::And && formula_equal(core->f1->f1, core->f2);
    case RuleTag::AndRight:  // (A /\ B) => B
      return is_imp(core) && core->f1->kind == K::And && formula_equal(core->f1->f2, core->f2);
    case RuleTag::OrLeft:  // A => (A \/ B)
      return is_imp(core) && core->f2->kind == K::Or && formula_equal(core->f1, core->f2->f1);
    case RuleTag::OrRight:  // B => (A \/ B)
      return is_imp(core) && core->f2->kind == K::Or && formula_equal(core->f1, core->f2->f2);
    case RuleTag::OrElim: {  // (A => C) => ((B => C) => ((A \/ B) => C))
      if (!is_imp(core) || !is_imp(core->f1) || !is_imp(core->f2)) return false;
      F ac = core->f1;
      F rest = core->f2;
      if (!is_imp(rest->f1) || !is_imp(rest->f2)) return false;
      F bc = rest->f1;
      F last = rest->f2;
      if (!is_imp(last) || last->f1->kind != K::Or) return false;
      return formula_equal(last->f1->f1, ac->f1) && formula_equal(last->f1->f2, bc->f1) &&
             formula_equal(ac->f2, bc->f2) && formula_equal(ac->f2, last->f2);
    }
    case RuleTag::ForallInst: {  // forall x A => A[t/x], t closed
      if (!is_imp(core) || !is_forall(core->f1)) return false;
      return infer_closed_subst(core->f1->f1, core->f1->var, core->f2).has_value();
    }
    case RuleTag::ForallDistr: {  // forall x (A => B) => (forall x A => forall x B)
      if (!is_imp(core) || !is_forall(core->f1) || !is_imp(core->f1->f1)) return false;
      if (!is_imp(core->f2) || !is_forall(core->f2->f1) || !is_forall(core->f2->f2)) return false;
      const Nat& x = core->f1->var;
      return core->f2->f1->var == x && core->f2->f2->var == x &&
             formula_equal(core->f2->f1->f1, core->f1->f1->f1) &&
             formula_equal(core->f2->f2->f1, core->f1->f1->f2);
    }
    case RuleTag::ForallVac:  // A => forall x A, x not free in A
      return is_imp(core) && is_forall(core->f2) && formula_equal(core->f1, core->f2->f1) &&
             !var_free_in(core->f1, core->f2->var);
    case RuleTag::ExistsIntro: {  // A[t/x] => exists x A, t closed
      if (!is_imp(core) || core->f2->kind != K::Exists) return false;
      return infer_closed_subst(core->f2->f1, core->f2->var, core->f1).has_value();
    }
    case RuleTag::ExistsElim: {  // forall x (A => B) => (exists x A => B), x not free in B
      if (!is_imp(core) || !is_forall(core->f1) || !is_imp(core->f1->f1)) return false;
      if (!is_imp(core->f2) || core->f2->f1->kind != K::Exists) return false;
      const Nat& x = core->f1->var;
      return core->f2->f1->var == x && formula_equal(core->f2->f1->f1, core->f1->f1->f1) &&
             formula_equal(core->f2->f2, core->f1->f1->f2) &&
             !var_free_in(core->f2->f2, x);
    }
    case RuleTag::EqRefl:  // t = t
      return core->kind == K::Eq && term_equal(core->t1, core->t2);
    case RuleTag::EqSym:  // t = u => u = t
      return is_imp(core) && core->f1->kind == K::Eq && core->f2->kind == K::Eq &&
             term_equal(core->f1->t1, core->f2->t2) && term_equal(core->f1->t2, core->f2->t1);
    case RuleTag::EqTrans: {  // t = u => (u = v => t = v)
      if (!is_imp(core) || core->f1->kind != K::Eq || !is_imp(core->f2)) return false;
      F tu = core->f1;
      F uv = core->f2->f1;
      F tv = core->f2->f2;
      if (uv->kind != K::Eq || tv->kind != K::Eq) return false;
      return term_equal(tu->t2, uv->t1) && term_equal(tv->t1, tu->t1) &&
             term_equal(tv->t2, uv->t2);
    }
    case RuleTag::EqSucc:  // t = u => S(t) = S(u)
      return is_imp(core) && core->f1->kind == K::Eq && core->f2->kind == K::Eq &&
             core->f2->t1->kind == TK::Succ && core->f2->t2->kind == TK::Succ &&
             term_equal(core->f2->t1->a, core->f1->t1) && term_equal(core->f2->t2->a, core->f1->t2);
    case RuleTag::EqAdd:
    case RuleTag::EqMul: {  // t1 = u1 => (t2 = u2 => t1 op t2 = u1 op u2)
      if (!is_imp(core) || core->f1->kind != K::Eq || !is_imp(core->f2)) return false;
      F e1 = core->f1;
      F e2 = core->f2->f1;
      F e3 = core->f2->f2;
      if (e2->kind != K::Eq || e3->kind != K::Eq) return false;
      TK op = tag == RuleTag::EqAdd ? TK::Add : TK::Mul;
      if (e3->t1->kind != op || e3->t2->kind != op) return false;
      return term_equal(e3->t1->a, e1->t1) && term_equal(e3->t1->b, e2->t1) &&
             term_equal(e3->t2->a, e1->t2) && term_equal(e3->t2->b, e2->t2);
    }
    case RuleTag::LitZero:  // lit 0 = 0
      return core->kind == K::Eq && core->t1->kind == TK::Lit && core->t1->value == 0 &&
             core->t2->kind == TK::Zero;
    case RuleTag::LitSucc:  // lit n = S (lit (n-1)), n >= 1
      return core->kind == K::Eq && core->t1->kind == TK::Lit && core->t1->value >= 1 &&
             core->t2->kind == TK::Succ && core->t2->a->kind == TK::Lit &&
             core->t2->a->value + 1 == core->t1->value;
    case RuleTag::Q1:  // not (S(t) = 0)
      return core->kind == K::Not && core->f1->kind == K::Eq &&
             core->f1->t1->kind == TK::Succ && core->f1->t2->kind == TK::Zero;
    case RuleTag::Q2:  // S(t) = S(u) => t = u
      return is_imp(core) && core->f1->kind == K::Eq && core->f2->kind == K::Eq &&
             core->f1->t1->kind == TK::Succ && core->f1->t2->kind == TK::Succ &&
             term_equal(core->f1->t1->a, core->f2->t1) && term_equal(core->f1->t2->a, core->f2->t2);
    case RuleTag::Q3:  // t + 0 = t
      return core->kind == K::Eq && core->t1->kind == TK::Add &&
             core->t1->b->kind == TK::Zero && term_equal(core->t1->a, core->t2);
    case RuleTag::Q4:  // t + S(u) = S(t + u)
      return core->kind == K::Eq && core->t1->kind == TK::Add &&
             core->t1->b->kind == TK::Succ && core->t2->kind == TK::Succ &&
             core->t2->a->kind == TK::Add && term_equal(core->t2->a->a, core->t1->a) &&
             term_equal(core->t2->a->b, core->t1->b->a);
    case RuleTag::Q5:  // t * 0 = 0
      return core->kind == K::Eq && core->t1->kind == TK::Mul &&
             core->t1->b->kind == TK::Zero && core->t2->kind == TK::Zero;
    case RuleTag::Q6:  // t * S(u) = t + (t * u)
      return core->kind == K::Eq && core->t1->kind == TK::Mul &&
             core->t1->b->kind == TK::Succ && core->t2->kind == TK::Add &&
             core->t2->b->kind == TK::Mul && term_equal(core->t2->a, core->t1->a) &&
             term_equal(core->t2->b->a, core->t1->a) &&
             term_equal(core->t2->b->b, core->t1->b->a);
    case RuleTag::Q7: {  // not (t = 0) => exists y (t = S(y)), y not in t
      if (!is_imp(core) || core->f1->kind != K::Not || core->f1->f1->kind != K::Eq) return false;
      F neq = core->f1->f1;
      if (neq->t2->kind != TK::Zero) return false;
      if (core->f2->kind != K::Exists) return false;
      F body = core->f2->f1;
      const Nat& y = core->f2->var;
      if (body->kind != K::Eq || body->t2->kind != TK::Succ) return false;
      if (body->t2->a->kind != TK::Var || body->t2->a->value != y) return false;
      return term_equal(body->t1, neq->t1) && !term_has_var(neq->t1, y);
    }
    case RuleTag::Induction: {  // A[0/x] => (forall x (A => A[S(x)/x]) => forall x A)
      if (theory != Theory::PA) return false;
      if (!is_imp(core) || !is_imp(core->f2)) return false;
      F base = core->f1;
      F stepq = core->f2->f1;
      F concl = core->f2->f2;
      if (!is_forall(stepq) || !is_imp(stepq->f1) || !is_forall(concl)) return false;
      const Nat& x = stepq->var;
      if (concl->var != x) return false;
      F a = stepq->f1->f1;
      if (!formula_equal(concl->f1, a)) return false;
      if (!formula_equal(base, substitute(a, x, mk_zero()))) return false;
      // S(x) plugged for free x cannot be captured: x stays free where it was.
      return formula_equal(stepq->f1->f2, replace_var_unchecked(a, x, mk_succ(mk_var(x))));
    }
    default:
      return false;
  }
}

}  // namespace

bool rule_licenses(RuleTag tag, const FormulaPtr& conclusion,
                   const std::vector<FormulaPtr>& premises, Theory theory) {
  switch (tag) {
    case RuleTag::Mp:
      return premises.size() == 2 && is_imp(premises[0]) &&
             formula_equal(premises[0]->f1, premises[1]) &&
             formula_equal(premises[0]->f2, conclusion);
    case RuleTag::Gen:
      return premises.size() == 1 && is_forall(conclusion) &&
             formula_equal(conclusion->f1, premises[0]);
    default:
      return premises.empty() && axiom_matches(tag, strip_foralls(conclusion), theory);
  }
}

int check_direct(const ProofPtr& p, Theory theory) {
  std::vector<FormulaPtr> premises;
  premises.reserve(p->premises.size());
  for (const auto& q : p->premises) premises.push_back(q->conclusion);
  if (!rule_licenses(p->tag, p->conclusion, premises, theory)) return 0;
  for (const auto& q : p->premises)
    if (!check_direct(q, theory)) return 0;
  return 1;
}

MTreePtr mt_bit(int b) {
  auto t = std::make_shared<MTree>();
  t->kind = MTree::Kind::Bit;
  t->bit = b;
  return t;
}

MTreePtr mt_leaf(ProofPtr p) {
  auto t = std::make_shared<MTree>();
  t->kind = MTree::Kind::ProofLeaf;
  t->proof = std::move(p);
  return t;
}

MTreePtr mt_and(MTreePtr l, MTreePtr r) {
  auto t = std::make_shared<MTree>();
  t->kind = MTree::Kind::AndNode;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

bool mt_equal(const MTreePtr& a, const MTreePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case MTree::Kind::Bit:
      return a->bit == b->bit;
    case MTree::Kind::ProofLeaf:
      return proof_equal(a->proof, b->proof);
    case MTree::Kind::AndNode:
      return mt_equal(a->left, b->left) && mt_equal(a->right, b->right);
  }
  return false;
}

bool mt_irreducible(const MTreePtr& t) { return t->kind == MTree::Kind::Bit; }

MTreePtr machine_step(const MTreePtr& t, Theory theory) {
  switch (t->kind) {
    case MTree::Kind::Bit:
      throw error("machine_step: tree is irreducible");
    case MTree::Kind::ProofLeaf: {
      const ProofPtr& p = t->proof;
      std::vector<FormulaPtr> premises;
      premises.reserve(p->premises.size());
      for (const auto& q : p->premises) premises.push_back(q->conclusion);
      if (!rule_licenses(p->tag, p->conclusion, premises, theory)) return mt_bit(0);
      if (p->premises.empty()) return mt_bit(1);
      MTreePtr acc = mt_leaf(p->premises[0]);
      for (std::size_t i = 1; i < p->premises.size(); ++i)
        acc = mt_and(std::move(acc), mt_leaf(p->premises[i]));
      return acc;
    }
    case MTree::Kind::AndNode: {
      if (t->left->kind != MTree::Kind::Bit) return mt_and(machine_step(t->left, theory), t->right);
      if (t->right->kind != MTree::Kind::Bit) return mt_and(t->left, machine_step(t->right, theory));
      return mt_bit(t->left->bit == 1 && t->right->bit == 1 ? 1 : 0);
    }
  }
  throw error("machine_step: bad tree");
}

int machine_check(const ProofPtr& p, Theory theory) {
  MTreePtr t = mt_leaf(p);
  while (!mt_irreducible(t)) t = machine_step(t, theory);
  return t->bit;
}

std::uint64_t machine_reduction_length(const ProofPtr& p, Theory theory) {
  MTreePtr t = mt_leaf(p);
  std::uint64_t steps = 0;
  while (!mt_irreducible(t)) {
    t = machine_step(t, theory);
    ++steps;
  }
  return steps;
}

ArtTree to_articulated(const ProofPtr& p) {
  std::vector<ArtTree> kids{to_articulated(p->conclusion)};
  for (const auto& q : p->premises) kids.push_back(to_articulated(q));
  return ArtTree{Nat(static_cast<unsigned>(p->tag)), std::move(kids)};
}

std::optional<ProofPtr> proof_from_articulated(const ArtTree& t) {
  if (t.label < kFirstRuleTag || t.label > kLastRuleTag) return std::nullopt;
  if (t.children.empty()) return std::nullopt;
  auto conclusion = formula_from_articulated(t.children[0]);
  if (!conclusion) return std::nullopt;
  std::vector<ProofPtr> premises;
  premises.reserve(t.children.size() - 1);
  for (std::size_t i = 1; i < t.children.size(); ++i) {
    auto q = proof_from_articulated(t.children[i]);
    if (!q) return std::nullopt;
    premises.push_back(*q);
  }
  return mk_proof(*conclusion, static_cast<RuleTag>(t.label.get_ui()), std::move(premises));
}

std::optional<ProofPtr> decode_proof(const Code& c) {
  if (c < 1) return std::nullopt;
  // Reject non-rule labels before decoding any substructure; scans spend
  // nearly all their time on this path.
  auto [label, rest] = cantor_unpair(c);
  if (label < kFirstRuleTag || label > kLastRuleTag || rest == 0) return std::nullopt;
  auto t = decode_tree(c);
  if (!t) return std::nullopt;
  return proof_from_articulated(*t);
}

Code godel_number(const ProofPtr& p) { return encode(to_articulated(p)); }

int proof_predicate(const Code& n, const Code& p, Theory theory) {
  if (n < 1) return 0;
  auto [label, rest] = cantor_unpair(n);
  if (label < kFirstRuleTag || label > kLastRuleTag || rest == 0) return 0;
  if (cantor_unpair(rest).first != p) return 0;
  auto proof = decode_proof(n);
  if (!proof) return 0;
  return machine_check(*proof, theory);
}

int proof_predicate_root(const Code& n, const FormulaPtr& a, Theory theory) {
  auto proof = decode_proof(n);
  if (!proof) return 0;
  if (!formula_equal((*proof)->conclusion, a)) return 0;
  return machine_check(*proof, theory);
}

namespace {

// Lower bound on the bit length of encode(t), used to refuse hopeless scans
// without materializing any code.
Nat encoded_bits_floor(const ArtTree& t) {
  Nat tail = 0;
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) {
    Nat child = encoded_bits_floor(*it);
    Nat m = child > tail ? child : tail;
    tail = m >= 2 ? 2 * m - 2 : Nat(1);
  }
  Nat lab = Nat(bit_length(t.label));
  Nat m = lab > tail ? lab : tail;
  return m >= 2 ? 2 * m - 2 : Nat(1);
}

// Any proof of A has code pair(tag, pair(code(A), premises)), which is at
// least pair(code(A), 0) > 2^(2*bits_floor - 3). True when every proof code
// of A exceeds the fuel.
bool certainly_beyond_fuel(const FormulaPtr& a, const Nat& fuel) {
  Nat lb = 2 * encoded_bits_floor(to_articulated(a)) - 3;
  if (lb <= 1) return false;
  return lb - 1 >= Nat(static_cast<unsigned long>(bit_length(fuel)));
}

struct FamilyCursor {
  Code current;  // pair(tag, pair(target, r))
  unsigned tag;
  Nat r;
  const Code* target;
  bool neg;  // decide_both: which side this cursor searches

  bool operator>(const FamilyCursor& o) const { return current > o.current; }
};

Code family_code(unsigned tag, const Code& target, const Nat& r) {
  return cantor_pair(Nat(tag), cantor_pair(target, r));
}

std::optional<Code> search_family(const std::vector<std::pair<const Code*, bool>>& targets,
                                  const Nat& fuel, Theory theory, bool* out_neg) {
  std::priority_queue<FamilyCursor, std::vector<FamilyCursor>, std::greater<>> heap;
  for (const auto& [target, neg] : targets)
    for (unsigned tag = kFirstRuleTag; tag <= kLastRuleTag; ++tag) {
      Code c = family_code(tag, *target, Nat(0));
      if (c <= fuel) heap.push(FamilyCursor{std::move(c), tag, Nat(0), target, neg});
    }
  while (!heap.empty()) {
    FamilyCursor cur = heap.top();
    heap.pop();
    if (proof_predicate(cur.current, *cur.target, theory) == 1) {
      if (out_neg) *out_neg = cur.neg;
      return cur.current;
    }
    Nat r = cur.r + 1;
    Code next = family_code(cur.tag, *cur.target, r);
    if (next <= fuel)
      heap.push(FamilyCursor{std::move(next), cur.tag, std::move(r), cur.target, cur.neg});
  }
  return std::nullopt;
}

}  // namespace

std::optional<Code> search_proof(const FormulaPtr& a, const Nat& fuel, Theory theory) {
  if (certainly_beyond_fuel(a, fuel)) return std::nullopt;
  Code target = godel_number(a);
  return search_family({{&target, false}}, fuel, theory, nullptr);
}

std::optional<Code> search_proof_naive(const FormulaPtr& a, const Nat& fuel, Theory theory) {
  for (Nat x = 0; x <= fuel; ++x)
    if (proof_predicate_root(x, a, theory) == 1) return x;
  return std::nullopt;
}

DecideResult decide_both(const FormulaPtr& a, const Nat& fuel, Theory theory) {
  FormulaPtr na = mk_not(a);
  bool pos_hopeless = certainly_beyond_fuel(a, fuel);
  bool neg_hopeless = certainly_beyond_fuel(na, fuel);
  if (pos_hopeless && neg_hopeless) return DecideResult{};
  std::vector<std::pair<const Code*, bool>> targets;
  Code ca, cna;
  if (!pos_hopeless) {
    ca = godel_number(a);
    targets.push_back({&ca, false});
  }
  if (!neg_hopeless) {
    cna = godel_number(na);
    targets.push_back({&cna, true});
  }
  bool neg = false;
  auto found = search_family(targets, fuel, theory, &neg);
  if (!found) return DecideResult{};
  return DecideResult{neg ? DecideResult::Kind::ProvedNegA : DecideResult::Kind::ProvedA,
                      std::move(*found)};
}

int bounded_provable(const FormulaPtr& a, const Nat& n, Theory theory) {
  for (Nat x = 0; x <= n; ++x)
    if (proof_predicate_root(x, a, theory) == 1) return 1;
  return 0;
}

FormulaPtr bew_formula() {
  return mk_exists(1, mk_defpred(kOracleProof, {mk_var(1), mk_var(0), mk_lit(1)}));
}

FormulaPtr box(const FormulaPtr& a) { return substitute(bew_formula(), 0, reflect(a)); }

NecessitationEvidence necessitation_check(const ProofPtr& p, Theory theory,
                                          const OracleTable& oracles) {
  if (machine_check(p, theory) != 1) throw error("necessitation_check: proof does not check");
  Code witness = godel_number(p);
  Code target = godel_number(p->conclusion);
  auto it = oracles.find(kOracleProof);
  if (it == oracles.end()) throw error("necessitation_check: Proof oracle missing");
  bool instance = it->second.holds({witness, target, Nat(1)});
  return NecessitationEvidence{std::move(witness), box(p->conclusion), instance};
}

}  // namespace godelkit
