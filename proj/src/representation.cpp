#include "godelkit/representation.hpp"

namespace godelkit {

namespace {

Nat max_index_of(const FormulaPtr& f, const Nat& at_least) {
  auto m = max_var_index(f);
  if (!m || *m < at_least) return at_least;
  return *m;
}

FormulaPtr compile_formula(const ProgramPtr& p) {
  const TermPtr y = mk_var(0);
  switch (p->kind) {
    case Program::Kind::Proj:
      return mk_eq(y, mk_var(Nat(p->i)));
    case Program::Kind::Zero:
      return mk_eq(y, mk_zero());
    case Program::Kind::Succ:
      return mk_eq(y, mk_succ(mk_var(1)));
    case Program::Kind::Add:
      return mk_eq(y, mk_add(mk_var(1), mk_var(2)));
    case Program::Kind::Mul:
      return mk_eq(y, mk_mul(mk_var(1), mk_var(2)));
    case Program::Kind::ChiLeq:
      // (x1 <= x2 /\ y = 1) \/ (x2 < x1 /\ y = 0)
      return mk_or(mk_and(mk_le(mk_var(1), mk_var(2)), mk_eq(y, mk_lit(1))),
                   mk_and(mk_lt(mk_var(2), mk_var(1)), mk_eq(y, mk_lit(0))));
    case Program::Kind::Comp: {
      // exists w1..wm (B1[x,w1] /\ ... /\ Bm[x,wm] /\ C[w,y])
      FormulaPtr c = compile_formula(p->h);
      std::vector<FormulaPtr> bs;
      bs.reserve(p->gs.size());
      Nat top = max_index_of(c, Nat(std::max<std::uint64_t>(p->n, p->m)));
      for (const auto& g : p->gs) {
        bs.push_back(compile_formula(g));
        top = max_index_of(bs.back(), top);
      }
      Nat w1 = top + 1;
      std::vector<FormulaPtr> parts;
      parts.reserve(bs.size() + 1);
      for (std::size_t i = 0; i < bs.size(); ++i)
        parts.push_back(rename_free_var(bs[i], Nat(0), w1 + Nat(static_cast<unsigned long>(i))));
      for (std::size_t j = p->m; j >= 1; --j)
        c = rename_free_var(c, Nat(static_cast<unsigned long>(j)),
                            w1 + Nat(static_cast<unsigned long>(j - 1)));
      parts.push_back(c);
      FormulaPtr body = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) body = mk_and(body, parts[i]);
      for (std::size_t i = bs.size(); i >= 1; --i)
        body = mk_exists(w1 + Nat(static_cast<unsigned long>(i - 1)), body);
      return body;
    }
    case Program::Kind::Mu: {
      // forall z (z < y => exists w B[x, z, S(w)]) /\ B[x, y, 0]
      FormulaPtr b = compile_formula(p->h);
      Nat top = max_index_of(b, Nat(p->n + 1));
      Nat z = top + 1, w = top + 2;
      FormulaPtr b1 = replace_var_unchecked(b, Nat(0), mk_succ(mk_var(w)));
      b1 = rename_free_var(b1, Nat(p->n + 1), z);
      FormulaPtr clause1 = mk_forall(z, mk_implies(mk_lt(mk_var(z), mk_var(0)),
                                                   mk_exists(w, b1)));
      FormulaPtr b2 = replace_var_unchecked(b, Nat(0), mk_zero());
      b2 = rename_free_var(b2, Nat(p->n + 1), Nat(0));
      return mk_and(clause1, b2);
    }
    case Program::Kind::Rec:
      throw error("compile: definitions by induction are not representable directly; "
                  "call eliminate_rec first");
  }
  throw error("compile: bad program");
}

}  // namespace

RepFormula compile(const ProgramPtr& p) {
  arity(p);  // validate
  if (contains_rec(p))
    throw error("compile: definitions by induction are not representable directly; "
                "call eliminate_rec first");
  return RepFormula{p, compile_formula(p)};
}

TriBool check_weak_representation(const ProgramPtr& p, const std::vector<Nat>& args, const Nat& q,
                                  const Nat& cap) {
  if (args.size() != arity(p)) throw error("check_weak_representation: wrong argument count");
  FormulaPtr a = compile(p).formula;
  for (std::size_t i = 0; i < args.size(); ++i)
    a = substitute(a, Nat(static_cast<unsigned long>(i + 1)), mk_lit(args[i]));
  a = substitute(a, Nat(0), mk_lit(q));
  return eval(a, Env{}, cap, OracleTable{});
}

FormulaPtr strong_rep_formula(const ProgramPtr& p, const std::vector<Nat>& args, const Nat& fuel) {
  if (args.size() != arity(p)) throw error("strong_rep_formula: wrong argument count");
  RunOutcome out = run(p, args, fuel);
  if (out.exhausted())
    throw error("strong_rep_formula: program exhausted its fuel without a value");
  FormulaPtr a = compile(p).formula;
  for (std::size_t i = 0; i < args.size(); ++i)
    a = substitute(a, Nat(static_cast<unsigned long>(i + 1)), mk_lit(args[i]));
  FormulaPtr rhs = mk_eq(mk_var(0), mk_lit(*out.value));
  return mk_forall(0, mk_and(mk_implies(a, rhs), mk_implies(rhs, a)));
}

FormulaPtr to_halting_formula(const ProgramPtr& p, const std::vector<Nat>& args) {
  if (args.size() != arity(p)) throw error("to_halting_formula: wrong argument count");
  FormulaPtr a = compile(p).formula;
  for (std::size_t i = 0; i < args.size(); ++i)
    a = substitute(a, Nat(static_cast<unsigned long>(i + 1)), mk_lit(args[i]));
  return mk_exists(0, a);
}

}  // namespace godelkit
