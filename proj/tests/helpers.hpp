#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "godelkit/calculus.hpp"
#include "godelkit/numbering.hpp"
#include "godelkit/syntax.hpp"

namespace godelkit::testing {

// Every term whose tree has at most `max_size` nodes, over a small leaf pool.
inline std::vector<TermPtr> enumerate_terms(std::size_t max_size) {
  std::vector<std::vector<TermPtr>> by_size(max_size + 1);
  if (max_size >= 1)
    by_size[1] = {mk_zero(), mk_var(0), mk_var(1), mk_lit(0), mk_lit(2)};
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const auto& t : by_size[s - 1]) by_size[s].push_back(mk_succ(t));
    for (std::size_t l = 1; l + 1 < s; ++l)
      for (const auto& a : by_size[l])
        for (const auto& b : by_size[s - 1 - l]) {
          by_size[s].push_back(mk_add(a, b));
          by_size[s].push_back(mk_mul(a, b));
        }
  }
  std::vector<TermPtr> all;
  for (auto& v : by_size)
    for (auto& t : v) all.push_back(std::move(t));
  return all;
}

// Every formula with at most `max_size` nodes, counting terms into the size.
inline std::vector<FormulaPtr> enumerate_formulas(std::size_t max_size) {
  auto terms = enumerate_terms(max_size >= 3 ? max_size - 1 : 2);
  std::vector<std::vector<FormulaPtr>> by_size(max_size + 1);
  auto term_size = [](const TermPtr& t) {
    std::size_t n = 0;
    auto rec = [&](auto&& self, const TermPtr& x) -> void {
      ++n;
      if (x->a) self(self, x->a);
      if (x->b) self(self, x->b);
    };
    rec(rec, t);
    return n;
  };
  if (max_size >= 1) by_size[1] = {mk_bottom()};
  for (const auto& a : terms)
    for (const auto& b : terms) {
      std::size_t s = 1 + term_size(a) + term_size(b);
      if (s <= max_size) by_size[s].push_back(mk_eq(a, b));
    }
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const auto& f : by_size[s - 1]) {
      by_size[s].push_back(mk_not(f));
      by_size[s].push_back(mk_forall(0, f));
      by_size[s].push_back(mk_exists(1, f));
    }
    for (std::size_t l = 1; l + 1 < s; ++l)
      for (const auto& a : by_size[l])
        for (const auto& b : by_size[s - 1 - l]) {
          by_size[s].push_back(mk_implies(a, b));
          by_size[s].push_back(mk_and(a, b));
          by_size[s].push_back(mk_or(a, b));
        }
  }
  std::vector<FormulaPtr> all;
  for (auto& v : by_size)
    for (auto& f : v) all.push_back(std::move(f));
  return all;
}

// Random terms/formulas of bounded size and depth; depth stays shallow so the
// codes remain cheap to materialize.
struct RandomSyntax {
  std::mt19937 rng;
  explicit RandomSyntax(std::uint32_t seed) : rng(seed) {}

  std::uint64_t pick(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }

  TermPtr term(std::size_t budget, std::size_t depth) {
    if (budget <= 1 || depth == 0) {
      switch (pick(4)) {
        case 0: return mk_zero();
        case 1: return mk_var(pick(6));
        case 2: return mk_lit(pick(50));
        default: return mk_var(pick(3));
      }
    }
    switch (pick(3)) {
      case 0: return mk_succ(term(budget - 1, depth - 1));
      case 1: {
        std::size_t left = 1 + pick(budget - 1);
        return mk_add(term(left, depth - 1), term(budget - left, depth - 1));
      }
      default: {
        std::size_t left = 1 + pick(budget - 1);
        return mk_mul(term(left, depth - 1), term(budget - left, depth - 1));
      }
    }
  }

  FormulaPtr formula(std::size_t budget, std::size_t depth) {
    if (budget <= 3 || depth == 0) {
      if (pick(8) == 0) return mk_bottom();
      return mk_eq(term(2, 1), term(2, 1));
    }
    switch (pick(8)) {
      case 0: return mk_not(formula(budget - 1, depth - 1));
      case 1: return mk_forall(pick(4), formula(budget - 1, depth - 1));
      case 2: return mk_exists(pick(4), formula(budget - 1, depth - 1));
      case 3: {
        std::vector<TermPtr> args;
        std::size_t n = 1 + pick(3);
        for (std::size_t i = 0; i < n; ++i) args.push_back(term(2, 1));
        return mk_defpred(pick(3), std::move(args));
      }
      case 4: {
        std::size_t left = 3 + pick(budget - 4);
        return mk_and(formula(left, depth - 1), formula(budget - left > 3 ? budget - left : 3, depth - 1));
      }
      case 5: {
        std::size_t left = 3 + pick(budget - 4);
        return mk_or(formula(left, depth - 1), formula(budget - left > 3 ? budget - left : 3, depth - 1));
      }
      case 6: {
        std::size_t left = 3 + pick(budget - 4);
        return mk_implies(formula(left, depth - 1), formula(budget - left > 3 ? budget - left : 3, depth - 1));
      }
      default:
        return mk_eq(term(budget / 2 + 1, depth - 1), term(budget / 2 + 1, depth - 1));
    }
  }
};

// Random formula whose code stays cheap to materialize: deep spines double
// the code's bit length per level, so resample until the bound is modest.
inline FormulaPtr sampled_formula(RandomSyntax& gen, std::size_t budget, std::size_t depth,
                                  unsigned long max_bits = 1 << 18) {
  for (;;) {
    FormulaPtr f = gen.formula(budget, depth);
    if (encoded_bits_bound(to_articulated(f)) <= max_bits) return f;
  }
}

inline TermPtr sampled_term(RandomSyntax& gen, std::size_t budget, std::size_t depth,
                            unsigned long max_bits = 1 << 18) {
  for (;;) {
    TermPtr t = gen.term(budget, depth);
    if (encoded_bits_bound(to_articulated(t)) <= max_bits) return t;
  }
}

// A pool of valid proofs grown from axiom instances by modus ponens and
// generalization, plus mutated (mostly invalid) variants.
struct ProofPool {
  std::mt19937 rng;
  std::vector<ProofPtr> valid;
  std::vector<ProofPtr> corrupted;

  explicit ProofPool(std::uint32_t seed, std::size_t target = 100) : rng(seed) { grow(target); }

  std::uint64_t pick(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }

  TermPtr closed_term() {
    switch (pick(5)) {
      case 0: return mk_zero();
      case 1: return mk_lit(pick(9));
      case 2: return mk_succ(mk_zero());
      case 3: return mk_add(mk_lit(pick(4)), mk_zero());
      default: return mk_succ(mk_lit(pick(5)));
    }
  }

  FormulaPtr small_formula() {
    switch (pick(5)) {
      case 0: return mk_eq(closed_term(), closed_term());
      case 1: return mk_bottom();
      case 2: return mk_not(mk_bottom());
      case 3: return mk_eq(mk_var(pick(2)), closed_term());
      default: return mk_eq(mk_var(0), mk_var(0));
    }
  }

  ProofPtr axiom_instance() {
    FormulaPtr a = small_formula();
    FormulaPtr b = small_formula();
    TermPtr t = closed_term();
    TermPtr u = closed_term();
    switch (pick(10)) {
      case 0: return mk_proof(mk_implies(a, mk_implies(b, a)), RuleTag::ImpK, {});
      case 1: return mk_proof(mk_implies(mk_bottom(), a), RuleTag::Efq, {});
      case 2: return mk_proof(mk_eq(t, t), RuleTag::EqRefl, {});
      case 3: return mk_proof(mk_implies(mk_eq(t, u), mk_eq(u, t)), RuleTag::EqSym, {});
      case 4: return mk_proof(mk_eq(mk_add(t, mk_zero()), t), RuleTag::Q3, {});
      case 5: return mk_proof(mk_eq(mk_mul(t, mk_zero()), mk_zero()), RuleTag::Q5, {});
      case 6: return mk_proof(mk_not(mk_eq(mk_succ(t), mk_zero())), RuleTag::Q1, {});
      case 7: return mk_proof(mk_not(mk_bottom()), RuleTag::TruthIntro, {});
      case 8: {
        Nat n = Nat(1 + pick(9));
        return mk_proof(mk_eq(mk_lit(n), mk_succ(mk_lit(n - 1))), RuleTag::LitSucc, {});
      }
      default:
        return mk_proof(mk_implies(a, mk_implies(b, mk_and(a, b))), RuleTag::AndIntro, {});
    }
  }

  void grow(std::size_t target) {
    for (int i = 0; i < 12; ++i) valid.push_back(axiom_instance());
    while (valid.size() < target) {
      switch (pick(3)) {
        case 0:
          valid.push_back(axiom_instance());
          break;
        case 1: {  // gen
          const ProofPtr& p = valid[pick(valid.size())];
          valid.push_back(mk_proof(mk_forall(pick(3), p->conclusion), RuleTag::Gen, {p}));
          break;
        }
        default: {  // a => (b => a), then mp with a proof of a
          const ProofPtr& pa = valid[pick(valid.size())];
          FormulaPtr b = small_formula();
          FormulaPtr k = mk_implies(pa->conclusion, mk_implies(b, pa->conclusion));
          ProofPtr pk = mk_proof(k, RuleTag::ImpK, {});
          valid.push_back(
              mk_proof(mk_implies(b, pa->conclusion), RuleTag::Mp, {pk, pa}));
          break;
        }
      }
    }
    for (const auto& p : valid) corrupted.push_back(mutate(p));
  }

  ProofPtr mutate(const ProofPtr& p) {
    switch (pick(4)) {
      case 0: {  // damage the conclusion
        return mk_proof(mk_and(p->conclusion, mk_bottom()), p->tag, p->premises);
      }
      case 1: {  // swap the rule tag
        RuleTag t = p->tag == RuleTag::EqRefl ? RuleTag::Q3 : RuleTag::EqRefl;
        return mk_proof(p->conclusion, t, p->premises);
      }
      case 2: {  // drop a premise, or damage a leaf conclusion
        if (!p->premises.empty()) {
          auto prem = p->premises;
          prem.pop_back();
          return mk_proof(p->conclusion, p->tag, std::move(prem));
        }
        return mk_proof(mk_eq(mk_zero(), mk_succ(mk_zero())), p->tag, {});
      }
      default: {  // corrupt a premise subtree or reverse premise order
        if (p->premises.size() >= 2) {
          auto prem = p->premises;
          std::reverse(prem.begin(), prem.end());
          return mk_proof(p->conclusion, p->tag, std::move(prem));
        }
        if (!p->premises.empty()) {
          auto prem = p->premises;
          prem[0] = mutate(prem[0]);
          return mk_proof(p->conclusion, p->tag, std::move(prem));
        }
        return mk_proof(mk_implies(p->conclusion, mk_bottom()), p->tag, {});
      }
    }
  }
};

}  // namespace godelkit::testing
