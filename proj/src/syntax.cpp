#include "godelkit/syntax.hpp"

#include <algorithm>

namespace godelkit {

TermPtr mk_zero() {
  static const TermPtr z = std::make_shared<Term>(Term::Kind::Zero, nullptr, nullptr, Nat(0));
  return z;
}

TermPtr mk_succ(TermPtr t) {
  return std::make_shared<Term>(Term::Kind::Succ, std::move(t), nullptr, Nat(0));
}

TermPtr mk_add(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term::Kind::Add, std::move(a), std::move(b), Nat(0));
}

TermPtr mk_mul(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term::Kind::Mul, std::move(a), std::move(b), Nat(0));
}

TermPtr mk_var(Nat index) {
  return std::make_shared<Term>(Term::Kind::Var, nullptr, nullptr, std::move(index));
}

TermPtr mk_lit(Nat value) {
  if (value < 0) throw error("numeral literal must be a natural number");
  return std::make_shared<Term>(Term::Kind::Lit, nullptr, nullptr, std::move(value));
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Succ:
      return term_equal(a->a, b->a);
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return term_equal(a->a, b->a) && term_equal(a->b, b->b);
    case Term::Kind::Var:
    case Term::Kind::Lit:
      return a->value == b->value;
  }
  return false;
}

bool term_closed(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero:
    case Term::Kind::Lit:
      return true;
    case Term::Kind::Var:
      return false;
    case Term::Kind::Succ:
      return term_closed(t->a);
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return term_closed(t->a) && term_closed(t->b);
  }
  return false;
}

void collect_term_vars(const TermPtr& t, std::set<Nat>& out) {
  switch (t->kind) {
    case Term::Kind::Zero:
    case Term::Kind::Lit:
      return;
    case Term::Kind::Var:
      out.insert(t->value);
      return;
    case Term::Kind::Succ:
      collect_term_vars(t->a, out);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_term_vars(t->a, out);
      collect_term_vars(t->b, out);
      return;
  }
}

FormulaPtr mk_eq(TermPtr a, TermPtr b) {
  auto f = std::make_shared<Formula>(Formula::Kind::Eq);
  f->t1 = std::move(a);
  f->t2 = std::move(b);
  return f;
}

FormulaPtr mk_bottom() {
  static const FormulaPtr bot = std::make_shared<Formula>(Formula::Kind::Bottom);
  return bot;
}

static FormulaPtr mk_binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>(k);
  f->f1 = std::move(a);
  f->f2 = std::move(b);
  return f;
}

FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return mk_binary(Formula::Kind::Implies, std::move(a), std::move(b));
}
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return mk_binary(Formula::Kind::And, std::move(a), std::move(b));
}
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return mk_binary(Formula::Kind::Or, std::move(a), std::move(b));
}

FormulaPtr mk_not(FormulaPtr a) {
  auto f = std::make_shared<Formula>(Formula::Kind::Not);
  f->f1 = std::move(a);
  return f;
}

static FormulaPtr mk_quant(Formula::Kind k, Nat var, FormulaPtr body) {
  auto f = std::make_shared<Formula>(k);
  f->var = std::move(var);
  f->f1 = std::move(body);
  return f;
}

FormulaPtr mk_forall(Nat var, FormulaPtr body) {
  return mk_quant(Formula::Kind::Forall, std::move(var), std::move(body));
}
FormulaPtr mk_exists(Nat var, FormulaPtr body) {
  return mk_quant(Formula::Kind::Exists, std::move(var), std::move(body));
}

FormulaPtr mk_defpred(Nat pred, std::vector<TermPtr> args) {
  auto f = std::make_shared<Formula>(Formula::Kind::DefPred);
  f->pred = std::move(pred);
  f->args = std::move(args);
  return f;
}

FormulaPtr mk_le(const TermPtr& x, const TermPtr& y) {
  // x <= y  :=  exists z (z + x = y), z fresh for x and y
  std::set<Nat> used;
  collect_term_vars(x, used);
  collect_term_vars(y, used);
  Nat z = used.empty() ? Nat(0) : *used.rbegin() + 1;
  return mk_exists(z, mk_eq(mk_add(mk_var(z), x), y));
}

FormulaPtr mk_lt(const TermPtr& x, const TermPtr& y) { return mk_le(mk_succ(x), y); }

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Eq:
      return term_equal(a->t1, b->t1) && term_equal(a->t2, b->t2);
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return formula_equal(a->f1, b->f1) && formula_equal(a->f2, b->f2);
    case Formula::Kind::Not:
      return formula_equal(a->f1, b->f1);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a->var == b->var && formula_equal(a->f1, b->f1);
    case Formula::Kind::DefPred: {
      if (a->pred != b->pred || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

static void collect_free(const FormulaPtr& f, std::set<Nat>& bound, std::set<Nat>& out) {
  switch (f->kind) {
    case Formula::Kind::Eq: {
      std::set<Nat> vs;
      collect_term_vars(f->t1, vs);
      collect_term_vars(f->t2, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_free(f->f1, bound, out);
      collect_free(f->f2, bound, out);
      return;
    case Formula::Kind::Not:
      collect_free(f->f1, bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool fresh = bound.insert(f->var).second;
      collect_free(f->f1, bound, out);
      if (fresh) bound.erase(f->var);
      return;
    }
    case Formula::Kind::DefPred: {
      std::set<Nat> vs;
      for (const auto& t : f->args) collect_term_vars(t, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
  }
}

std::set<Nat> free_vars(const FormulaPtr& f) {
  std::set<Nat> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool var_free_in(const FormulaPtr& f, const Nat& v) { return free_vars(f).count(v) > 0; }

bool is_pure(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_pure(f->f1) && is_pure(f->f2);
    case Formula::Kind::Not:
      return is_pure(f->f1);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return is_pure(f->f1);
    case Formula::Kind::DefPred:
      return false;
  }
  return false;
}

bool formula_closed(const FormulaPtr& f) { return free_vars(f).empty(); }

static void collect_all_vars(const FormulaPtr& f, std::set<Nat>& out) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      collect_term_vars(f->t1, out);
      collect_term_vars(f->t2, out);
      return;
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_all_vars(f->f1, out);
      collect_all_vars(f->f2, out);
      return;
    case Formula::Kind::Not:
      collect_all_vars(f->f1, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out.insert(f->var);
      collect_all_vars(f->f1, out);
      return;
    case Formula::Kind::DefPred:
      for (const auto& t : f->args) collect_term_vars(t, out);
      return;
  }
}

std::optional<Nat> max_var_index(const FormulaPtr& f) {
  std::set<Nat> vs;
  collect_all_vars(f, vs);
  if (vs.empty()) return std::nullopt;
  return *vs.rbegin();
}

// Shared replacement walker. `check_closed` enforces the public contract.
static TermPtr subst_term(const TermPtr& s, const Nat& v, const TermPtr& t) {
  switch (s->kind) {
    case Term::Kind::Zero:
    case Term::Kind::Lit:
      return s;
    case Term::Kind::Var:
      return s->value == v ? t : s;
    case Term::Kind::Succ:
      return mk_succ(subst_term(s->a, v, t));
    case Term::Kind::Add:
      return mk_add(subst_term(s->a, v, t), subst_term(s->b, v, t));
    case Term::Kind::Mul:
      return mk_mul(subst_term(s->a, v, t), subst_term(s->b, v, t));
  }
  return s;
}

static FormulaPtr subst_formula(const FormulaPtr& f, const Nat& v, const TermPtr& t) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return mk_eq(subst_term(f->t1, v, t), subst_term(f->t2, v, t));
    case Formula::Kind::Bottom:
      return f;
    case Formula::Kind::Implies:
      return mk_implies(subst_formula(f->f1, v, t), subst_formula(f->f2, v, t));
    case Formula::Kind::And:
      return mk_and(subst_formula(f->f1, v, t), subst_formula(f->f2, v, t));
    case Formula::Kind::Or:
      return mk_or(subst_formula(f->f1, v, t), subst_formula(f->f2, v, t));
    case Formula::Kind::Not:
      return mk_not(subst_formula(f->f1, v, t));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (f->var == v) return f;  // v bound here, nothing free below
      return mk_quant(f->kind, f->var, subst_formula(f->f1, v, t));
    case Formula::Kind::DefPred: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& x : f->args) args.push_back(subst_term(x, v, t));
      return mk_defpred(f->pred, std::move(args));
    }
  }
  return f;
}

TermPtr substitute(const TermPtr& s, const Nat& v, const TermPtr& t) {
  if (!term_closed(t)) throw error("substitute: replacement term must be closed");
  return subst_term(s, v, t);
}

FormulaPtr substitute(const FormulaPtr& f, const Nat& v, const TermPtr& t) {
  if (!term_closed(t)) throw error("substitute: replacement term must be closed");
  return subst_formula(f, v, t);
}

FormulaPtr rename_free_var(const FormulaPtr& f, const Nat& v, const Nat& w) {
  return subst_formula(f, v, mk_var(w));
}

FormulaPtr replace_var_unchecked(const FormulaPtr& f, const Nat& v, const TermPtr& t) {
  return subst_formula(f, v, t);
}

static TermPtr unary_numeral(const Nat& n) {
  TermPtr t = mk_zero();
  for (Nat i = 0; i < n; ++i) t = mk_succ(t);
  return t;
}

ExpandResult expand_numeral(const TermPtr& t, const Nat& cap) {
  switch (t->kind) {
    case Term::Kind::Zero:
    case Term::Kind::Var:
      return {t, true};
    case Term::Kind::Lit:
      if (t->value <= cap) return {unary_numeral(t->value), true};
      return {t, false};
    case Term::Kind::Succ: {
      auto r = expand_numeral(t->a, cap);
      return {mk_succ(r.term), r.complete};
    }
    case Term::Kind::Add: {
      auto ra = expand_numeral(t->a, cap);
      auto rb = expand_numeral(t->b, cap);
      return {mk_add(ra.term, rb.term), ra.complete && rb.complete};
    }
    case Term::Kind::Mul: {
      auto ra = expand_numeral(t->a, cap);
      auto rb = expand_numeral(t->b, cap);
      return {mk_mul(ra.term, rb.term), ra.complete && rb.complete};
    }
  }
  return {t, true};
}

ExpandFormulaResult expand_numeral(const FormulaPtr& f, const Nat& cap) {
  switch (f->kind) {
    case Formula::Kind::Eq: {
      auto a = expand_numeral(f->t1, cap);
      auto b = expand_numeral(f->t2, cap);
      return {mk_eq(a.term, b.term), a.complete && b.complete};
    }
    case Formula::Kind::Bottom:
      return {f, true};
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      auto a = expand_numeral(f->f1, cap);
      auto b = expand_numeral(f->f2, cap);
      return {mk_binary(f->kind, a.formula, b.formula), a.complete && b.complete};
    }
    case Formula::Kind::Not: {
      auto a = expand_numeral(f->f1, cap);
      return {mk_not(a.formula), a.complete};
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto a = expand_numeral(f->f1, cap);
      return {mk_quant(f->kind, f->var, a.formula), a.complete};
    }
    case Formula::Kind::DefPred: {
      bool complete = true;
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& t : f->args) {
        auto r = expand_numeral(t, cap);
        args.push_back(r.term);
        complete = complete && r.complete;
      }
      return {mk_defpred(f->pred, std::move(args)), complete};
    }
  }
  return {f, true};
}

bool art_equal(const ArtTree& a, const ArtTree& b) {
  if (a.label != b.label || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!art_equal(a.children[i], b.children[i])) return false;
  return true;
}

static ArtTree leaf(Sym s) { return ArtTree{Nat(static_cast<unsigned>(s)), {}}; }
static ArtTree node(Sym s, std::vector<ArtTree> kids) {
  return ArtTree{Nat(static_cast<unsigned>(s)), std::move(kids)};
}

ArtTree to_articulated(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return leaf(Sym::Zero);
    case Term::Kind::Succ:
      return node(Sym::Succ, {to_articulated(t->a)});
    case Term::Kind::Add:
      return node(Sym::Add, {to_articulated(t->a), to_articulated(t->b)});
    case Term::Kind::Mul:
      return node(Sym::Mul, {to_articulated(t->a), to_articulated(t->b)});
    case Term::Kind::Var:
      return ArtTree{var_label(t->value), {}};
    case Term::Kind::Lit:
      return ArtTree{lit_label(t->value), {}};
  }
  throw error("to_articulated: bad term");
}

// Quantifier children are ordered [body, variable] and defined-predicate
// children [args..., id]: putting the heavyweight subtree first keeps the
// code of deeply nested formulas as small as the pairing scheme allows.
ArtTree to_articulated(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return node(Sym::Eq, {to_articulated(f->t1), to_articulated(f->t2)});
    case Formula::Kind::Bottom:
      return leaf(Sym::Bottom);
    case Formula::Kind::Implies:
      return node(Sym::Implies, {to_articulated(f->f1), to_articulated(f->f2)});
    case Formula::Kind::And:
      return node(Sym::And, {to_articulated(f->f1), to_articulated(f->f2)});
    case Formula::Kind::Or:
      return node(Sym::Or, {to_articulated(f->f1), to_articulated(f->f2)});
    case Formula::Kind::Not:
      return node(Sym::Not, {to_articulated(f->f1)});
    case Formula::Kind::Forall:
      return node(Sym::Forall, {to_articulated(f->f1), ArtTree{var_label(f->var), {}}});
    case Formula::Kind::Exists:
      return node(Sym::Exists, {to_articulated(f->f1), ArtTree{var_label(f->var), {}}});
    case Formula::Kind::DefPred: {
      std::vector<ArtTree> kids;
      kids.reserve(f->args.size() + 1);
      for (const auto& t : f->args) kids.push_back(to_articulated(t));
      kids.push_back(ArtTree{lit_label(f->pred), {}});
      return node(Sym::DefPred, std::move(kids));
    }
  }
  throw error("to_articulated: bad formula");
}

// Label classification for decoding.
struct LabelInfo {
  enum class Kind { Symbol, Var, Lit } kind;
  Sym sym{};
  Nat payload;
};

static std::optional<LabelInfo> classify_label(const Nat& label) {
  if (label < 0) return std::nullopt;
  if (label < kSymbolCount)
    return LabelInfo{LabelInfo::Kind::Symbol, static_cast<Sym>(label.get_ui()), Nat(0)};
  Nat off = label - kSymbolCount;
  if (off % 2 == 0) return LabelInfo{LabelInfo::Kind::Var, Sym::Zero, off / 2};
  return LabelInfo{LabelInfo::Kind::Lit, Sym::Zero, (off - 1) / 2};
}

std::optional<TermPtr> term_from_articulated(const ArtTree& t) {
  auto info = classify_label(t.label);
  if (!info) return std::nullopt;
  if (info->kind == LabelInfo::Kind::Var) {
    if (!t.children.empty()) return std::nullopt;
    return mk_var(info->payload);
  }
  if (info->kind == LabelInfo::Kind::Lit) {
    if (!t.children.empty()) return std::nullopt;
    return mk_lit(info->payload);
  }
  switch (info->sym) {
    case Sym::Zero:
      if (!t.children.empty()) return std::nullopt;
      return mk_zero();
    case Sym::Succ: {
      if (t.children.size() != 1) return std::nullopt;
      auto a = term_from_articulated(t.children[0]);
      if (!a) return std::nullopt;
      return mk_succ(*a);
    }
    case Sym::Add:
    case Sym::Mul: {
      if (t.children.size() != 2) return std::nullopt;
      auto a = term_from_articulated(t.children[0]);
      auto b = term_from_articulated(t.children[1]);
      if (!a || !b) return std::nullopt;
      return info->sym == Sym::Add ? mk_add(*a, *b) : mk_mul(*a, *b);
    }
    default:
      return std::nullopt;
  }
}

static std::optional<Nat> var_leaf_index(const ArtTree& t) {
  auto info = classify_label(t.label);
  if (!info || info->kind != LabelInfo::Kind::Var || !t.children.empty()) return std::nullopt;
  return info->payload;
}

static std::optional<Nat> lit_leaf_value(const ArtTree& t) {
  auto info = classify_label(t.label);
  if (!info || info->kind != LabelInfo::Kind::Lit || !t.children.empty()) return std::nullopt;
  return info->payload;
}

std::optional<FormulaPtr> formula_from_articulated(const ArtTree& t) {
  auto info = classify_label(t.label);
  if (!info || info->kind != LabelInfo::Kind::Symbol) return std::nullopt;
  switch (info->sym) {
    case Sym::Eq: {
      if (t.children.size() != 2) return std::nullopt;
      auto a = term_from_articulated(t.children[0]);
      auto b = term_from_articulated(t.children[1]);
      if (!a || !b) return std::nullopt;
      return mk_eq(*a, *b);
    }
    case Sym::Bottom:
      if (!t.children.empty()) return std::nullopt;
      return mk_bottom();
    case Sym::Implies:
    case Sym::And:
    case Sym::Or: {
      if (t.children.size() != 2) return std::nullopt;
      auto a = formula_from_articulated(t.children[0]);
      auto b = formula_from_articulated(t.children[1]);
      if (!a || !b) return std::nullopt;
      if (info->sym == Sym::Implies) return mk_implies(*a, *b);
      if (info->sym == Sym::And) return mk_and(*a, *b);
      return mk_or(*a, *b);
    }
    case Sym::Not: {
      if (t.children.size() != 1) return std::nullopt;
      auto a = formula_from_articulated(t.children[0]);
      if (!a) return std::nullopt;
      return mk_not(*a);
    }
    case Sym::Forall:
    case Sym::Exists: {
      if (t.children.size() != 2) return std::nullopt;
      auto body = formula_from_articulated(t.children[0]);
      auto v = var_leaf_index(t.children[1]);
      if (!body || !v) return std::nullopt;
      return info->sym == Sym::Forall ? mk_forall(*v, *body) : mk_exists(*v, *body);
    }
    case Sym::DefPred: {
      if (t.children.empty()) return std::nullopt;
      auto id = lit_leaf_value(t.children.back());
      if (!id) return std::nullopt;
      std::vector<TermPtr> args;
      args.reserve(t.children.size() - 1);
      for (std::size_t i = 0; i + 1 < t.children.size(); ++i) {
        auto a = term_from_articulated(t.children[i]);
        if (!a) return std::nullopt;
        args.push_back(*a);
      }
      return mk_defpred(*id, std::move(args));
    }
    default:
      return std::nullopt;
  }
}

}  // namespace godelkit
