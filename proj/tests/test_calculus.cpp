#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "godelkit/calculus.hpp"
#include "godelkit/diagonal.hpp"
#include "godelkit/text.hpp"
#include "helpers.hpp"

using namespace godelkit;
using godelkit::testing::ProofPool;

namespace {

ProofPtr refl_proof(const TermPtr& t) { return mk_proof(mk_eq(t, t), RuleTag::EqRefl, {}); }

// b => a, from a proof of a: mp over the weakening axiom.
ProofPtr mp_example(const ProofPtr& pa, const FormulaPtr& b) {
  FormulaPtr k = mk_implies(pa->conclusion, mk_implies(b, pa->conclusion));
  return mk_proof(mk_implies(b, pa->conclusion), RuleTag::Mp,
                  {mk_proof(k, RuleTag::ImpK, {}), pa});
}

}  // namespace

TEST_CASE("axiom instances, including universal generalizations") {
  auto p = mk_proof(mk_forall(0, mk_eq(mk_var(0), mk_var(0))), RuleTag::EqRefl, {});
  CHECK(check_direct(p, Theory::Q) == 1);

  auto bad = mk_proof(mk_eq(mk_lit(0), mk_succ(mk_lit(0))), RuleTag::EqRefl, {});
  CHECK(check_direct(bad, Theory::Q) == 0);

  auto q3 = mk_proof(mk_forall(1, mk_eq(mk_add(mk_var(1), mk_zero()), mk_var(1))), RuleTag::Q3, {});
  CHECK(check_direct(q3, Theory::Q) == 1);

  auto litstep = mk_proof(mk_eq(mk_lit(7), mk_succ(mk_lit(6))), RuleTag::LitSucc, {});
  CHECK(check_direct(litstep, Theory::Q) == 1);
  auto litbad = mk_proof(mk_eq(mk_lit(7), mk_succ(mk_lit(5))), RuleTag::LitSucc, {});
  CHECK(check_direct(litbad, Theory::Q) == 0);
  CHECK(check_direct(mk_proof(mk_eq(mk_lit(0), mk_zero()), RuleTag::LitZero, {}), Theory::Q) == 1);
}

TEST_CASE("quantifier schemas infer their closed instance term") {
  // forall x0 (x0 = x0) => (lit 4 = lit 4)
  auto inst = mk_proof(mk_implies(mk_forall(0, mk_eq(mk_var(0), mk_var(0))),
                                  mk_eq(mk_lit(4), mk_lit(4))),
                       RuleTag::ForallInst, {});
  CHECK(check_direct(inst, Theory::Q) == 1);

  // mismatched instance
  auto bad = mk_proof(mk_implies(mk_forall(0, mk_eq(mk_var(0), mk_var(0))),
                                 mk_eq(mk_lit(4), mk_lit(5))),
                      RuleTag::ForallInst, {});
  CHECK(check_direct(bad, Theory::Q) == 0);

  // open instance terms are rejected
  auto open = mk_proof(mk_implies(mk_forall(0, mk_eq(mk_var(0), mk_var(0))),
                                  mk_eq(mk_var(1), mk_var(1))),
                       RuleTag::ForallInst, {});
  CHECK(check_direct(open, Theory::Q) == 0);

  auto exi = mk_proof(mk_implies(mk_eq(mk_lit(2), mk_lit(2)),
                                 mk_exists(0, mk_eq(mk_var(0), mk_var(0)))),
                      RuleTag::ExistsIntro, {});
  CHECK(check_direct(exi, Theory::Q) == 1);
}

TEST_CASE("modus ponens and generalization are node-local") {
  auto pa = refl_proof(mk_zero());
  auto mp = mp_example(pa, mk_bottom());
  CHECK(check_direct(mp, Theory::Q) == 1);

  // swapped premises no longer match
  auto swapped = mk_proof(mp->conclusion, RuleTag::Mp, {mp->premises[1], mp->premises[0]});
  CHECK(check_direct(swapped, Theory::Q) == 0);

  auto gen = mk_proof(mk_forall(3, pa->conclusion), RuleTag::Gen, {pa});
  CHECK(check_direct(gen, Theory::Q) == 1);
}

TEST_CASE("induction is an axiom of PA but not of Q") {
  // A := x0 + 0 = x0
  auto a = mk_eq(mk_add(mk_var(0), mk_zero()), mk_var(0));
  auto base = substitute(a, 0, mk_zero());
  auto step = replace_var_unchecked(a, 0, mk_succ(mk_var(0)));
  auto ind = mk_proof(
      mk_implies(base, mk_implies(mk_forall(0, mk_implies(a, step)), mk_forall(0, a))),
      RuleTag::Induction, {});
  CHECK(check_direct(ind, Theory::PA) == 1);
  CHECK(check_direct(ind, Theory::Q) == 0);
}

TEST_CASE("machine reduction of the examples") {
  Theory th = Theory::Q;
  auto axiom = refl_proof(mk_zero());

  // a licensed leaf with no premises reduces to 1 in one step
  auto t = machine_step(mt_leaf(axiom), th);
  CHECK(mt_irreducible(t));
  CHECK(t->bit == 1);

  // (1 and (0 and 1)) -> (1 and 0) -> 0, leftmost redex each time
  auto u = mt_and(mt_bit(1), mt_and(mt_bit(0), mt_bit(1)));
  auto u1 = machine_step(u, th);
  CHECK(mt_equal(u1, mt_and(mt_bit(1), mt_bit(0))));
  auto u2 = machine_step(u1, th);
  CHECK(mt_equal(u2, mt_bit(0)));
  CHECK_THROWS_AS(machine_step(u2, th), error);

  // an mp leaf unfolds into the left-nested tree of its premises
  auto mp = mp_example(axiom, mk_bottom());
  auto v = machine_step(mt_leaf(mp), th);
  CHECK(mt_equal(v, mt_and(mt_leaf(mp->premises[0]), mt_leaf(mp->premises[1]))));
}

TEST_CASE("the two checkers agree on generated proofs") {
  ProofPool pool(101, 120);
  int valid_seen = 0, invalid_seen = 0;
  for (const auto& p : pool.valid) {
    CHECK(machine_check(p, Theory::Q) == check_direct(p, Theory::Q));
    if (check_direct(p, Theory::Q) == 1) ++valid_seen;
  }
  for (const auto& p : pool.corrupted) {
    CHECK(machine_check(p, Theory::Q) == check_direct(p, Theory::Q));
    if (check_direct(p, Theory::Q) == 0) ++invalid_seen;
  }
  CHECK(valid_seen >= 100);
  CHECK(invalid_seen >= 80);
}

TEST_CASE("corruption propagates through the machine") {
  auto axiom = refl_proof(mk_zero());
  auto mp = mp_example(axiom, mk_bottom());
  auto bad = mk_proof(mp->conclusion, RuleTag::Mp,
                      {mp->premises[0], mk_proof(mk_eq(mk_zero(), mk_succ(mk_zero())),
                                                 RuleTag::EqRefl, {})});
  CHECK(machine_check(bad, Theory::Q) == 0);
  CHECK(check_direct(bad, Theory::Q) == 0);
}

TEST_CASE("mp reduction length is premise lengths plus two") {
  ProofPool pool(211, 60);
  int instances = 0;
  for (const auto& pa : pool.valid) {
    if (check_direct(pa, Theory::Q) != 1) continue;
    auto mp = mp_example(pa, mk_eq(mk_lit(instances), mk_lit(instances)));
    REQUIRE(check_direct(mp, Theory::Q) == 1);
    auto n = machine_reduction_length(mp->premises[0], Theory::Q);
    auto p = machine_reduction_length(mp->premises[1], Theory::Q);
    CHECK(machine_reduction_length(mp, Theory::Q) == n + p + 2);
    if (++instances >= 25) break;
  }
  CHECK(instances >= 25);
}

TEST_CASE("step commutes with left and right contexts") {
  ProofPool pool(331, 40);
  Theory th = Theory::Q;
  int sampled = 0;
  for (std::size_t i = 0; i + 1 < pool.valid.size() && sampled < 12; i += 2, ++sampled) {
    const auto& p1 = pool.valid[i];
    const auto& p2 = pool.valid[i + 1];

    // step^n(p1 and p2) = (step^n p1) and p2 while p1 reduces
    MTreePtr lhs = mt_and(mt_leaf(p1), mt_leaf(p2));
    MTreePtr t1 = mt_leaf(p1);
    while (!mt_irreducible(t1)) {
      t1 = machine_step(t1, th);
      lhs = machine_step(lhs, th);
      CHECK(mt_equal(lhs, mt_and(t1, mt_leaf(p2))));
    }

    // step^n(1 and p2) = 1 and (step^n p2) while p2 reduces
    MTreePtr rhs = mt_and(mt_bit(1), mt_leaf(p2));
    MTreePtr t2 = mt_leaf(p2);
    while (!mt_irreducible(t2)) {
      t2 = machine_step(t2, th);
      rhs = machine_step(rhs, th);
      CHECK(mt_equal(rhs, mt_and(mt_bit(1), t2)));
    }
  }
  CHECK(sampled == 12);
}

TEST_CASE("proof predicate composes decode, machine and root check") {
  auto axiom = refl_proof(mk_zero());
  Code n = godel_number(axiom);
  Code p = godel_number(axiom->conclusion);
  CHECK(proof_predicate(n, p, Theory::Q) == 1);
  CHECK(proof_predicate(n, godel_number(mk_bottom()), Theory::Q) == 0);
  CHECK(proof_predicate(17, p, Theory::Q) == 0);
  CHECK(proof_predicate(0, p, Theory::Q) == 0);

  // proof codes round-trip
  auto mp = mp_example(axiom, mk_bottom());
  auto back = decode_proof(godel_number(mp));
  REQUIRE(back.has_value());
  CHECK(proof_equal(*back, mp));
}

TEST_CASE("search finds the one-node proof and nothing smaller") {
  auto a = mk_eq(mk_zero(), mk_zero());
  Code expected = godel_number(refl_proof(mk_zero()));
  auto found = search_proof(a, expected + 1000, Theory::Q);
  REQUIRE(found.has_value());
  CHECK(*found == expected);

  // nothing below the family of root-matching codes can be a proof of a;
  // the reference scan agrees on a small prefix
  CHECK_FALSE(search_proof(a, 20000, Theory::Q).has_value());
  CHECK_FALSE(search_proof_naive(a, 20000, Theory::Q).has_value());

  CHECK_FALSE(search_proof(mk_bottom(), 100000, Theory::Q).has_value());
}

TEST_CASE("decide_both returns the winning side") {
  auto a = mk_eq(mk_zero(), mk_zero());
  Code expected = godel_number(refl_proof(mk_zero()));
  auto r = decide_both(a, expected * 2, Theory::Q);
  CHECK(r.kind == DecideResult::Kind::ProvedA);
  CHECK(r.code == expected);

  auto not_a = mk_not(mk_bottom());
  Code t = godel_number(mk_proof(not_a, RuleTag::TruthIntro, {}));
  auto r2 = decide_both(mk_bottom(), t * 2, Theory::Q);
  CHECK(r2.kind == DecideResult::Kind::ProvedNegA);
  CHECK(r2.code == t);

  auto r3 = decide_both(mk_bottom(), 100000, Theory::Q);
  CHECK(r3.kind == DecideResult::Kind::NotFound);
}

TEST_CASE("bounded provability on refutable bounds") {
  CHECK(bounded_provable(mk_bottom(), 10000, Theory::Q) == 0);
  auto a = mk_eq(mk_zero(), mk_zero());
  CHECK(bounded_provable(a, 10000, Theory::Q) == 0);  // the proof code is larger
}

TEST_CASE("bew and box") {
  auto bew = bew_formula();
  CHECK(free_vars(bew) == std::set<Nat>{Nat(0)});

  auto a = mk_eq(mk_zero(), mk_zero());
  auto boxed = box(a);
  CHECK(formula_closed(boxed));
  CHECK(formula_equal(
      boxed, mk_exists(1, mk_defpred(kOracleProof, {mk_var(1), reflect(a), mk_lit(1)}))));

  auto oracles = standard_oracles(Theory::Q);
  CHECK(eval(box(mk_bottom()), Env{}, 300, oracles) == TriBool::Unknown);
}

TEST_CASE("necessitation evidence") {
  auto oracles = standard_oracles(Theory::Q);
  auto axiom = refl_proof(mk_zero());
  auto ev = necessitation_check(axiom, Theory::Q, oracles);
  CHECK(ev.witness == godel_number(axiom));
  CHECK(ev.instance_true);
  CHECK(formula_equal(ev.box_formula, box(axiom->conclusion)));

  auto mp = mp_example(axiom, mk_bottom());
  auto ev2 = necessitation_check(mp, Theory::Q, oracles);
  CHECK(ev2.instance_true);

  auto bad = mk_proof(mk_eq(mk_zero(), mk_succ(mk_zero())), RuleTag::EqRefl, {});
  CHECK_THROWS_AS(necessitation_check(bad, Theory::Q, oracles), error);
}

TEST_CASE("proof text round-trips") {
  auto mp = mp_example(refl_proof(mk_lit(3)), mk_bottom());
  auto printed = print_proof(mp);
  CHECK(proof_equal(parse_proof(printed), mp));
  CHECK(print_proof(parse_proof(printed)) == printed);
}
