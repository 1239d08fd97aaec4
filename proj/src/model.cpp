#include "godelkit/model.hpp"

#include <algorithm>

namespace godelkit {

TriBool tri_not(TriBool a) {
  if (a == TriBool::True) return TriBool::False;
  if (a == TriBool::False) return TriBool::True;
  return TriBool::Unknown;
}

TriBool tri_and(TriBool a, TriBool b) {
  if (a == TriBool::False || b == TriBool::False) return TriBool::False;
  if (a == TriBool::True && b == TriBool::True) return TriBool::True;
  return TriBool::Unknown;
}

TriBool tri_or(TriBool a, TriBool b) {
  if (a == TriBool::True || b == TriBool::True) return TriBool::True;
  if (a == TriBool::False && b == TriBool::False) return TriBool::False;
  return TriBool::Unknown;
}

TriBool tri_implies(TriBool a, TriBool b) { return tri_or(tri_not(a), b); }

const char* tri_name(TriBool a) {
  switch (a) {
    case TriBool::True:
      return "true";
    case TriBool::False:
      return "false";
    case TriBool::Unknown:
      return "unknown";
  }
  return "unknown";
}

Nat eval_term(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return Nat(0);
    case Term::Kind::Lit:
      return t->value;
    case Term::Kind::Var: {
      auto it = env.find(t->value);
      if (it == env.end())
        throw error("eval: variable x" + nat_to_string(t->value) + " is not assigned");
      return it->second;
    }
    case Term::Kind::Succ:
      return eval_term(t->a, env) + 1;
    case Term::Kind::Add:
      return eval_term(t->a, env) + eval_term(t->b, env);
    case Term::Kind::Mul:
      return eval_term(t->a, env) * eval_term(t->b, env);
  }
  throw error("eval: bad term");
}

std::optional<Nat> try_eval_term(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return Nat(0);
    case Term::Kind::Lit:
      return t->value;
    case Term::Kind::Var: {
      auto it = env.find(t->value);
      if (it == env.end()) return std::nullopt;
      return it->second;
    }
    case Term::Kind::Succ: {
      auto a = try_eval_term(t->a, env);
      if (!a) return std::nullopt;
      return *a + 1;
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      auto a = try_eval_term(t->a, env);
      auto b = try_eval_term(t->b, env);
      if (!a || !b) return std::nullopt;
      return t->kind == Term::Kind::Add ? Nat(*a + *b) : Nat(*a * *b);
    }
  }
  return std::nullopt;
}

namespace {

// t viewed as a*w + b with every other variable read from env.
struct LinearForm {
  Nat a, b;
};

std::optional<LinearForm> linearize(const TermPtr& t, const Nat& w, const Env& env) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return LinearForm{Nat(0), Nat(0)};
    case Term::Kind::Lit:
      return LinearForm{Nat(0), t->value};
    case Term::Kind::Var: {
      if (t->value == w) return LinearForm{Nat(1), Nat(0)};
      auto it = env.find(t->value);
      if (it == env.end()) return std::nullopt;
      return LinearForm{Nat(0), it->second};
    }
    case Term::Kind::Succ: {
      auto f = linearize(t->a, w, env);
      if (!f) return std::nullopt;
      return LinearForm{f->a, f->b + 1};
    }
    case Term::Kind::Add: {
      auto f = linearize(t->a, w, env);
      auto g = linearize(t->b, w, env);
      if (!f || !g) return std::nullopt;
      return LinearForm{f->a + g->a, f->b + g->b};
    }
    case Term::Kind::Mul: {
      auto f = linearize(t->a, w, env);
      auto g = linearize(t->b, w, env);
      if (!f || !g) return std::nullopt;
      if (f->a != 0 && g->a != 0) return std::nullopt;  // quadratic in w
      return LinearForm{f->a * g->b + g->a * f->b, f->b * g->b};
    }
  }
  return std::nullopt;
}

// Solutions over N of a1*w + b1 = a2*w + b2; nullopt when the equation holds
// for every w (no finite description).
std::optional<std::vector<Nat>> solve_linear_eq(const LinearForm& l, const LinearForm& r) {
  if (l.a == r.a) {
    if (l.b == r.b) return std::nullopt;  // all w
    return std::vector<Nat>{};
  }
  const LinearForm& hi = l.a > r.a ? l : r;
  const LinearForm& lo = l.a > r.a ? r : l;
  Nat da = hi.a - lo.a;
  if (lo.b < hi.b) return std::vector<Nat>{};
  Nat db = lo.b - hi.b;
  if (db % da != 0) return std::vector<Nat>{};
  return std::vector<Nat>{db / da};
}

// A complete candidate set for the witness w of f: outside the returned set
// f is false under env, whatever the value of w. nullopt means no finite set
// was derived.
std::optional<std::vector<Nat>> pin_candidates(const FormulaPtr& f, const Nat& w, const Env& env,
                                               const OracleTable& oracles) {
  switch (f->kind) {
    case Formula::Kind::Bottom:
      return std::vector<Nat>{};
    case Formula::Kind::Eq: {
      auto l = linearize(f->t1, w, env);
      auto r = linearize(f->t2, w, env);
      if (!l || !r) return std::nullopt;
      return solve_linear_eq(*l, *r);
    }
    case Formula::Kind::DefPred: {
      auto it = oracles.find(f->pred);
      if (it == oracles.end() || !it->second.functional_slot) return std::nullopt;
      std::size_t slot = *it->second.functional_slot;
      if (slot >= f->args.size()) return std::nullopt;
      const TermPtr& s = f->args[slot];
      if (s->kind != Term::Kind::Var || s->value != w) return std::nullopt;
      std::vector<Nat> vals(f->args.size(), Nat(0));
      for (std::size_t j = 0; j < f->args.size(); ++j) {
        if (j == slot) continue;
        auto v = try_eval_term(f->args[j], env);
        if (!v) return std::nullopt;
        vals[j] = std::move(*v);
      }
      auto solved = it->second.solve(vals);
      if (!solved) return std::vector<Nat>{};
      return std::vector<Nat>{std::move(*solved)};
    }
    case Formula::Kind::And: {
      auto s = pin_candidates(f->f1, w, env, oracles);
      if (s) return s;
      return pin_candidates(f->f2, w, env, oracles);
    }
    case Formula::Kind::Or: {
      auto s1 = pin_candidates(f->f1, w, env, oracles);
      if (!s1) return std::nullopt;
      auto s2 = pin_candidates(f->f2, w, env, oracles);
      if (!s2) return std::nullopt;
      for (auto& v : *s2)
        if (std::find(s1->begin(), s1->end(), v) == s1->end()) s1->push_back(std::move(v));
      return s1;
    }
    case Formula::Kind::Exists: {
      if (f->var == w) return std::nullopt;  // w shadowed: no free occurrence
      auto direct = pin_candidates(f->f1, w, env, oracles);
      if (direct) return direct;
      // Pin the inner witness first, then w under each extension.
      auto inner = pin_candidates(f->f1, f->var, env, oracles);
      if (!inner) return std::nullopt;
      std::vector<Nat> out;
      Env ext(env);
      for (const auto& v0 : *inner) {
        ext[f->var] = v0;
        auto s = pin_candidates(f->f1, w, ext, oracles);
        if (!s) return std::nullopt;
        for (auto& v : *s)
          if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
      }
      return out;
    }
    default:
      return std::nullopt;
  }
}

// Recognizes the desugared comparison shapes used by bounded quantifiers:
//   v <  t : exists u (u + S(v) = t)
//   v <= t : exists u (u + v = t)
// Returns the number of values v ranges over (exclusive count) when the
// shape matches and t is evaluable under env without v or u.
std::optional<Nat> match_range_count(const FormulaPtr& p, const Nat& v, const Env& env) {
  if (p->kind != Formula::Kind::Exists) return std::nullopt;
  const Nat& u = p->var;
  if (u == v) return std::nullopt;
  const FormulaPtr& body = p->f1;
  if (body->kind != Formula::Kind::Eq) return std::nullopt;
  const TermPtr& lhs = body->t1;
  if (lhs->kind != Term::Kind::Add) return std::nullopt;
  if (lhs->a->kind != Term::Kind::Var || lhs->a->value != u) return std::nullopt;
  bool strict;
  if (lhs->b->kind == Term::Kind::Var && lhs->b->value == v) {
    strict = false;
  } else if (lhs->b->kind == Term::Kind::Succ && lhs->b->a->kind == Term::Kind::Var &&
             lhs->b->a->value == v) {
    strict = true;
  } else {
    return std::nullopt;
  }
  std::set<Nat> tvars;
  collect_term_vars(body->t2, tvars);
  if (tvars.count(v) || tvars.count(u)) return std::nullopt;
  auto bound = try_eval_term(body->t2, env);
  if (!bound) return std::nullopt;
  return strict ? *bound : *bound + 1;
}

struct Evaluator {
  const Nat& cap;
  const OracleTable& oracles;

  TriBool eval_f(const FormulaPtr& f, Env& env) {
    switch (f->kind) {
      case Formula::Kind::Eq:
        return eval_term(f->t1, env) == eval_term(f->t2, env) ? TriBool::True : TriBool::False;
      case Formula::Kind::Bottom:
        return TriBool::False;
      case Formula::Kind::Implies: {
        TriBool a = eval_f(f->f1, env);
        if (a == TriBool::False) return TriBool::True;
        TriBool b = eval_f(f->f2, env);
        return tri_implies(a, b);
      }
      case Formula::Kind::And: {
        TriBool a = eval_f(f->f1, env);
        if (a == TriBool::False) return TriBool::False;
        return tri_and(a, eval_f(f->f2, env));
      }
      case Formula::Kind::Or: {
        TriBool a = eval_f(f->f1, env);
        if (a == TriBool::True) return TriBool::True;
        return tri_or(a, eval_f(f->f2, env));
      }
      case Formula::Kind::Not:
        return tri_not(eval_f(f->f1, env));
      case Formula::Kind::DefPred: {
        auto it = oracles.find(f->pred);
        if (it == oracles.end())
          throw error("eval: no oracle registered for defined predicate p" +
                      nat_to_string(f->pred));
        std::vector<Nat> vals;
        vals.reserve(f->args.size());
        for (const auto& t : f->args) vals.push_back(eval_term(t, env));
        return it->second.holds(vals) ? TriBool::True : TriBool::False;
      }
      case Formula::Kind::Exists:
        return eval_exists(f, env);
      case Formula::Kind::Forall:
        return eval_forall(f, env);
    }
    throw error("eval: bad formula");
  }

  TriBool eval_at(const FormulaPtr& body, Env& env, const Nat& v, const Nat& value) {
    auto it = env.find(v);
    std::optional<Nat> saved;
    if (it != env.end()) saved = it->second;
    env[v] = value;
    TriBool r = eval_f(body, env);
    if (saved)
      env[v] = *saved;
    else
      env.erase(v);
    return r;
  }

  TriBool eval_exists(const FormulaPtr& f, Env& env) {
    const Nat& v = f->var;
    const FormulaPtr& body = f->f1;

    // exists v (v <= t /\ B): a finite range, decided exactly modulo B.
    if (body->kind == Formula::Kind::And) {
      if (auto count = match_range_count(body->f1, v, env)) {
        TriBool acc = TriBool::False;
        for (Nat i = 0; i < *count; ++i) {
          TriBool r = eval_at(body, env, v, i);
          if (r == TriBool::True) return TriBool::True;
          acc = tri_or(acc, r);
        }
        return acc;
      }
    }

    if (auto cands = pin_candidates(body, v, env, oracles)) {
      TriBool acc = TriBool::False;
      for (const auto& c : *cands) {
        TriBool r = eval_at(body, env, v, c);
        if (r == TriBool::True) return TriBool::True;
        acc = tri_or(acc, r);
      }
      return acc;
    }

    for (Nat i = 0; i <= cap; ++i)
      if (eval_at(body, env, v, i) == TriBool::True) return TriBool::True;
    return TriBool::Unknown;
  }

  TriBool eval_forall(const FormulaPtr& f, Env& env) {
    const Nat& v = f->var;
    const FormulaPtr& body = f->f1;

    // forall v (v < t => B) and forall v (v <= t => B)
    if (body->kind == Formula::Kind::Implies) {
      if (auto count = match_range_count(body->f1, v, env)) {
        TriBool acc = TriBool::True;
        for (Nat i = 0; i < *count; ++i) {
          TriBool r = eval_at(body, env, v, i);
          if (r == TriBool::False) return TriBool::False;
          acc = tri_and(acc, r);
        }
        return acc;
      }
      // Hypothesis pinned: outside the candidates the implication is vacuous.
      if (auto cands = pin_candidates(body->f1, v, env, oracles)) {
        TriBool acc = TriBool::True;
        for (const auto& c : *cands) {
          TriBool r = eval_at(body, env, v, c);
          if (r == TriBool::False) return TriBool::False;
          acc = tri_and(acc, r);
        }
        return acc;
      }
    }

    // Whole body pinned: some value outside the finite set falsifies it.
    if (auto cands = pin_candidates(body, v, env, oracles)) {
      (void)cands;
      return TriBool::False;
    }

    for (Nat i = 0; i <= cap; ++i)
      if (eval_at(body, env, v, i) == TriBool::False) return TriBool::False;
    return TriBool::Unknown;
  }
};

}  // namespace

TriBool eval(const FormulaPtr& f, const Env& env, const Nat& cap, const OracleTable& oracles) {
  Env scratch(env);
  Evaluator ev{cap, oracles};
  return ev.eval_f(f, scratch);
}

FormulaPtr expand_bounded(const FormulaPtr& f, BoundKind which) {
  if (f->kind != Formula::Kind::Forall || f->f1->kind != Formula::Kind::Implies)
    throw error("expand_bounded: expected forall v (bound => body)");
  const Nat& v = f->var;
  const FormulaPtr& hyp = f->f1->f1;
  const FormulaPtr& body = f->f1->f2;

  // Re-use the comparison recognizer, then insist on the requested kind.
  if (hyp->kind != Formula::Kind::Exists || hyp->f1->kind != Formula::Kind::Eq)
    throw error("expand_bounded: hypothesis is not a comparison");
  const TermPtr& lhs = hyp->f1->t1;
  if (lhs->kind != Term::Kind::Add || lhs->a->kind != Term::Kind::Var ||
      lhs->a->value != hyp->var)
    throw error("expand_bounded: hypothesis is not a comparison");
  bool strict;
  if (lhs->b->kind == Term::Kind::Var && lhs->b->value == v) {
    strict = false;
  } else if (lhs->b->kind == Term::Kind::Succ && lhs->b->a->kind == Term::Kind::Var &&
             lhs->b->a->value == v) {
    strict = true;
  } else {
    throw error("expand_bounded: hypothesis does not compare the bound variable");
  }
  if ((which == BoundKind::Strict) != strict)
    throw error("expand_bounded: comparison kind does not match");
  if (!term_closed(hyp->f1->t2)) throw error("expand_bounded: bound must be a closed term");
  Nat bound = eval_term(hyp->f1->t2, Env{});

  Nat upper;  // exclusive
  if (strict)
    upper = bound;
  else
    upper = bound + 1;

  if (upper == 0) return mk_top();
  FormulaPtr acc;
  for (Nat i = 0; i < upper; ++i) {
    FormulaPtr inst = substitute(body, v, mk_lit(i));
    acc = acc ? mk_and(acc, inst) : inst;
  }
  return acc;
}

}  // namespace godelkit
