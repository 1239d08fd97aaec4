#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "godelkit/model.hpp"
#include "godelkit/text.hpp"
#include "helpers.hpp"

using namespace godelkit;
using godelkit::testing::RandomSyntax;

namespace {
const OracleTable kNoOracles{};

TriBool ev(const char* text, unsigned long cap = 10) {
  return eval(parse_formula(text), Env{}, cap, kNoOracles);
}
}  // namespace

TEST_CASE("strong Kleene tables") {
  using T = TriBool;
  CHECK(tri_not(T::True) == T::False);
  CHECK(tri_not(T::Unknown) == T::Unknown);
  CHECK(tri_and(T::False, T::Unknown) == T::False);
  CHECK(tri_and(T::Unknown, T::False) == T::False);
  CHECK(tri_and(T::True, T::Unknown) == T::Unknown);
  CHECK(tri_or(T::True, T::Unknown) == T::True);
  CHECK(tri_or(T::Unknown, T::False) == T::Unknown);
  CHECK(tri_implies(T::False, T::Unknown) == T::True);
  CHECK(tri_implies(T::Unknown, T::True) == T::True);
  CHECK(tri_implies(T::True, T::Unknown) == T::Unknown);
}

TEST_CASE("term evaluation") {
  CHECK(eval_term(mk_add(mk_lit(2), mk_lit(3)), Env{}) == 5);
  CHECK(eval_term(mk_mul(mk_zero(), mk_lit(9)), Env{}) == 0);
  Env env;
  env[Nat(0)] = 7;
  CHECK(eval_term(mk_var(0), env) == 7);
  CHECK_THROWS_AS(eval_term(mk_var(1), env), error);
}

TEST_CASE("witness search and pinned equations") {
  CHECK(ev("(exists x0 (= (+ x0 (lit 2)) (lit 5)))") == TriBool::True);
  // linear equations decide negatives exactly, with no witness cap
  CHECK(ev("(exists x0 (= (+ x0 (lit 7)) (lit 5)))") == TriBool::False);
  CHECK(ev("(exists x0 (= (S x0) 0))") == TriBool::False);
  CHECK(ev("(exists x0 (= (+ x0 x0) (lit 17)))") == TriBool::False);
  CHECK(ev("(exists x0 (= (+ x0 x0) (lit 18)))") == TriBool::True);
  // quadratic witnesses come from the scan and respect the cap
  CHECK(ev("(exists x0 (= (* x0 x0) (lit 49)))", 10) == TriBool::True);
  CHECK(ev("(exists x0 (= (* x0 x0) (lit 50)))", 10) == TriBool::Unknown);
}

TEST_CASE("bounded quantifier shapes are decided exactly") {
  // forall z (z < 3 => z <= 2)
  auto f = mk_forall(0, mk_implies(mk_lt(mk_var(0), mk_lit(3)), mk_le(mk_var(0), mk_lit(2))));
  CHECK(eval(f, Env{}, 0, kNoOracles) == TriBool::True);
  auto g = mk_forall(0, mk_implies(mk_lt(mk_var(0), mk_lit(3)), mk_le(mk_var(0), mk_lit(1))));
  CHECK(eval(g, Env{}, 0, kNoOracles) == TriBool::False);
  auto e = mk_exists(0, mk_and(mk_le(mk_var(0), mk_lit(4)), mk_eq(mk_var(0), mk_lit(4))));
  CHECK(eval(e, Env{}, 0, kNoOracles) == TriBool::True);
  auto e2 = mk_exists(0, mk_and(mk_lt(mk_var(0), mk_lit(4)), mk_eq(mk_var(0), mk_lit(4))));
  CHECK(eval(e2, Env{}, 0, kNoOracles) == TriBool::False);
}

TEST_CASE("unbounded universal quantifiers stay unknown") {
  CHECK(ev("(forall x0 (= x0 x0))") == TriBool::Unknown);
  CHECK(ev("(forall x0 (= x0 (lit 3)))") == TriBool::False);  // counterexample found
}

TEST_CASE("expand_bounded") {
  auto f = mk_forall(0, mk_implies(mk_lt(mk_var(0), mk_lit(2)), mk_eq(mk_var(0), mk_var(0))));
  auto e = expand_bounded(f, BoundKind::Strict);
  CHECK(formula_equal(e, mk_and(mk_eq(mk_lit(0), mk_lit(0)), mk_eq(mk_lit(1), mk_lit(1)))));

  auto empty = mk_forall(0, mk_implies(mk_lt(mk_var(0), mk_lit(0)), mk_bottom()));
  CHECK(formula_equal(expand_bounded(empty, BoundKind::Strict), mk_top()));

  CHECK_THROWS_AS(expand_bounded(mk_bottom(), BoundKind::Strict), error);
  CHECK_THROWS_AS(expand_bounded(f, BoundKind::Inclusive), error);
}

TEST_CASE("expand_bounded preserves verdicts") {
  RandomSyntax gen(17);
  int checked = 0;
  while (checked < 50) {
    FormulaPtr body = gen.formula(8, 3);
    // closed pure instances only: no oracles are registered here
    bool usable = is_pure(body);
    for (const auto& v : free_vars(body))
      if (v != 0) usable = false;
    if (!usable) continue;
    unsigned long bound = gen.pick(5);
    auto f = mk_forall(0, mk_implies(mk_lt(mk_var(0), mk_lit(bound)), body));
    auto e = expand_bounded(f, BoundKind::Strict);
    TriBool a = eval(f, Env{}, 20, kNoOracles);
    TriBool b = eval(e, Env{}, 20, kNoOracles);
    CHECK(a == b);
    ++checked;
  }
}

TEST_CASE("verdicts are monotone in the cap") {
  RandomSyntax gen(19);
  for (int i = 0; i < 150; ++i) {
    FormulaPtr f = gen.formula(10, 4);
    if (!free_vars(f).empty() || !is_pure(f)) continue;
    TriBool small = eval(f, Env{}, 5, kNoOracles);
    TriBool big = eval(f, Env{}, 40, kNoOracles);
    if (small != TriBool::Unknown) CHECK(small == big);
  }
}

TEST_CASE("negation is classical on decided formulas") {
  RandomSyntax gen(29);
  for (int i = 0; i < 150; ++i) {
    FormulaPtr f = gen.formula(10, 4);
    if (!free_vars(f).empty() || !is_pure(f)) continue;
    TriBool v = eval(f, Env{}, 15, kNoOracles);
    TriBool nv = eval(mk_not(f), Env{}, 15, kNoOracles);
    if (v != TriBool::Unknown) CHECK(nv == tri_not(v));
  }
}

TEST_CASE("oracles") {
  auto f = mk_defpred(9, {mk_lit(4)});
  CHECK_THROWS_AS(eval(f, Env{}, 10, kNoOracles), error);

  OracleTable t;
  Oracle even;
  even.holds = [](const std::vector<Nat>& a) { return a.size() == 1 && a[0] % 2 == 0; };
  t.emplace(Nat(9), std::move(even));
  CHECK(eval(f, Env{}, 10, t) == TriBool::True);
  CHECK(eval(mk_defpred(9, {mk_lit(5)}), Env{}, 10, t) == TriBool::False);

  // functional slot: the witness is read off instead of searched
  Oracle doubler;
  doubler.holds = [](const std::vector<Nat>& a) { return a.size() == 2 && a[1] == 2 * a[0]; };
  doubler.functional_slot = 1;
  doubler.solve = [](const std::vector<Nat>& a) -> std::optional<Nat> { return 2 * a[0]; };
  t.emplace(Nat(10), std::move(doubler));
  Nat huge = Nat(1) << 100;
  auto g = mk_exists(0, mk_and(mk_defpred(10, {numeral(huge), mk_var(0)}),
                               mk_eq(mk_var(0), numeral(2 * huge))));
  CHECK(eval(g, Env{}, 10, t) == TriBool::True);
  auto gwrong = mk_exists(0, mk_and(mk_defpred(10, {numeral(huge), mk_var(0)}),
                                    mk_eq(mk_var(0), numeral(2 * huge + 1))));
  CHECK(eval(gwrong, Env{}, 10, t) == TriBool::False);
}
