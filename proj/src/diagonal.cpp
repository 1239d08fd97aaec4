#include "godelkit/diagonal.hpp"

namespace godelkit {

std::optional<Code> try_sub_on_codes(const Code& n, const Code& p) {
  auto f = decode_formula(n);
  if (!f) return std::nullopt;
  auto fv = free_vars(*f);
  if (fv.empty()) return n;
  if (fv.size() != 1) return std::nullopt;
  return godel_number(substitute(*f, *fv.begin(), numeral(p)));
}

Code sub_on_codes(const Code& n, const Code& p) {
  auto r = try_sub_on_codes(n, p);
  if (!r)
    throw error("sub_on_codes: input does not code a formula with one designated free variable");
  return *r;
}

std::optional<Code> try_neg_on_codes(const Code& n) {
  auto f = decode_formula(n);
  if (!f) return std::nullopt;
  return godel_number(mk_not(*f));
}

Code neg_on_codes(const Code& n) {
  auto r = try_neg_on_codes(n);
  if (!r) throw error("neg_on_codes: input does not code a formula");
  return *r;
}

OracleTable standard_oracles(Theory theory) {
  OracleTable t;
  {
    Oracle proof;
    proof.holds = [theory](const std::vector<Nat>& args) {
      if (args.size() != 3 || args[2] > 1) return false;
      return Nat(proof_predicate(args[0], args[1], theory)) == args[2];
    };
    proof.functional_slot = 2;
    proof.solve = [theory](const std::vector<Nat>& args) -> std::optional<Nat> {
      if (args.size() != 3) return std::nullopt;
      return Nat(proof_predicate(args[0], args[1], theory));
    };
    t.emplace(kOracleProof, std::move(proof));
  }
  {
    Oracle sub;
    sub.holds = [](const std::vector<Nat>& args) {
      if (args.size() != 3) return false;
      auto r = try_sub_on_codes(args[0], args[1]);
      return r && *r == args[2];
    };
    sub.functional_slot = 2;
    sub.solve = [](const std::vector<Nat>& args) -> std::optional<Nat> {
      if (args.size() != 3) return std::nullopt;
      return try_sub_on_codes(args[0], args[1]);
    };
    t.emplace(kOracleSub, std::move(sub));
  }
  {
    Oracle neg;
    neg.holds = [](const std::vector<Nat>& args) {
      if (args.size() != 2) return false;
      auto r = try_neg_on_codes(args[0]);
      return r && *r == args[1];
    };
    neg.functional_slot = 1;
    neg.solve = [](const std::vector<Nat>& args) -> std::optional<Nat> {
      if (args.size() != 2) return std::nullopt;
      return try_neg_on_codes(args[0]);
    };
    t.emplace(kOracleNeg, std::move(neg));
  }
  return t;
}

namespace {

Nat pair_bits_bound(const Nat& a, const Nat& b) {
  Nat m = a > b ? a : b;
  return 2 * m + 2;
}

// Bound on bit_length(encode(t)) when every leaf labeled `wlabel` will be
// replaced by a numeral literal of at most `numeral_bits` payload bits.
Nat bits_bound_after_sub(const ArtTree& t, const Nat& wlabel, const Nat& numeral_bits) {
  Nat tail = 1;
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it)
    tail = pair_bits_bound(bits_bound_after_sub(*it, wlabel, numeral_bits), tail);
  Nat lab = (t.children.empty() && t.label == wlabel) ? numeral_bits
                                                      : Nat(bit_length(t.label));
  return pair_bits_bound(lab, tail);
}

}  // namespace

FixpointResult fixpoint(const FormulaPtr& c, const FixpointOptions& options) {
  auto fv = free_vars(c);
  if (fv.size() != 1)
    throw error("fixpoint: C must have exactly one free variable, found " +
                std::to_string(fv.size()));
  Nat x = *fv.begin();

  auto mx = max_var_index(c);
  Nat top = mx ? *mx : Nat(0);
  Nat z = top + 1, x1 = top + 2, x2 = top + 3;

  // D = exists z (C[z] /\ S[x1, x2, z])
  FormulaPtr cz = rename_free_var(c, x, z);
  FormulaPtr d =
      mk_exists(z, mk_and(cz, mk_defpred(kOracleSub, {mk_var(x1), mk_var(x2), mk_var(z)})));

  // w: the smallest index free in neither C nor the freshly chosen z.
  Nat w = 0;
  while (w == z || fv.count(w)) w += 1;

  FormulaPtr e = rename_free_var(rename_free_var(d, x1, w), x2, w);
  FixpointResult result;
  result.c = c;
  result.c_var = x;
  result.d = d;
  result.e = e;
  result.e_var = w;

  if (options.verify) {
    ArtTree art_e = to_articulated(e);
    Nat bound_e = encoded_bits_bound(art_e);
    if (bound_e > options.max_code_bits)
      throw error("fixpoint: the code of E would exceed the size limit");
    // The literal plugged into G carries the full code of E in its label;
    // predict G's size before materializing anything.
    Nat bound_g = bits_bound_after_sub(art_e, var_label(w), bound_e + 2);
    if (bound_g > options.max_code_bits)
      throw error("fixpoint: the code of G would exceed the size limit");
  }
  Code code_e = encode(to_articulated(e));
  FormulaPtr g = substitute(e, w, numeral(code_e));
  result.g = g;
  result.code_e = code_e;

  if (options.verify) {
    if (encoded_bits_bound(to_articulated(g)) > options.max_code_bits)
      throw error("fixpoint: the code of G would exceed the size limit");
    Code code_g = godel_number(g);
    Code diag = sub_on_codes(code_e, code_e);
    if (code_g != diag) throw error("fixpoint: diagonal identity failed");
    result.code_g = std::move(code_g);
    result.identity_checked = true;
  }
  return result;
}

FixpointResult godel_sentence(const FixpointOptions& options) {
  return fixpoint(mk_not(bew_formula()), options);
}

FixpointResult henkin_sentence(const FixpointOptions& options) {
  return fixpoint(bew_formula(), options);
}

FixpointResult loeb_sentence(const FormulaPtr& p, const FixpointOptions& options) {
  if (!formula_closed(p)) throw error("loeb_sentence: P must be closed");
  return fixpoint(mk_implies(bew_formula(), p), options);
}

FixpointResult rosser_sentence(const FixpointOptions& options) {
  // forall y (Proof[y, x, 1] => exists z (z <= y /\ exists w (Neg[x, w] /\ Proof[z, w, 1])))
  const Nat x = 0, y = 1, z = 2, w = 4;
  FormulaPtr proof_y = mk_defpred(kOracleProof, {mk_var(y), mk_var(x), mk_lit(1)});
  FormulaPtr proof_z = mk_defpred(kOracleProof, {mk_var(z), mk_var(w), mk_lit(1)});
  FormulaPtr neg_xw = mk_defpred(kOracleNeg, {mk_var(x), mk_var(w)});
  FormulaPtr guard = mk_exists(
      z, mk_and(mk_le(mk_var(z), mk_var(y)), mk_exists(w, mk_and(neg_xw, proof_z))));
  FormulaPtr c = mk_forall(y, mk_implies(proof_y, guard));
  return fixpoint(c, options);
}

FormulaPtr equiv_unfold(const FixpointResult& r, const FixpointOptions& options) {
  Code code_g;
  if (r.code_g) {
    code_g = *r.code_g;
  } else {
    if (encoded_bits_bound(to_articulated(r.g)) > options.max_code_bits)
      throw error("equiv_unfold: the code of G would exceed the size limit");
    code_g = godel_number(r.g);
  }
  return substitute(r.c, r.c_var, numeral(code_g));
}

}  // namespace godelkit
