#include "godelkit/program.hpp"

#include <algorithm>
#include <string>

namespace godelkit {

ProgramPtr p_proj(std::uint64_t n, std::uint64_t i) {
  auto p = std::make_shared<Program>(Program::Kind::Proj);
  p->n = n;
  p->i = i;
  return p;
}

ProgramPtr p_zero(std::uint64_t n) {
  auto p = std::make_shared<Program>(Program::Kind::Zero);
  p->n = n;
  return p;
}

static ProgramPtr leaf_program(Program::Kind k) { return std::make_shared<Program>(k); }

ProgramPtr p_succ() {
  static const ProgramPtr p = leaf_program(Program::Kind::Succ);
  return p;
}
ProgramPtr p_add() {
  static const ProgramPtr p = leaf_program(Program::Kind::Add);
  return p;
}
ProgramPtr p_mul() {
  static const ProgramPtr p = leaf_program(Program::Kind::Mul);
  return p;
}
ProgramPtr p_chileq() {
  static const ProgramPtr p = leaf_program(Program::Kind::ChiLeq);
  return p;
}

ProgramPtr p_comp(std::uint64_t n, std::uint64_t m, ProgramPtr h, std::vector<ProgramPtr> gs) {
  auto p = std::make_shared<Program>(Program::Kind::Comp);
  p->n = n;
  p->m = m;
  p->h = std::move(h);
  p->gs = std::move(gs);
  return p;
}

ProgramPtr p_mu(std::uint64_t n, ProgramPtr g) {
  auto p = std::make_shared<Program>(Program::Kind::Mu);
  p->n = n;
  p->h = std::move(g);
  return p;
}

ProgramPtr p_rec(std::uint64_t n, ProgramPtr base, ProgramPtr step) {
  auto p = std::make_shared<Program>(Program::Kind::Rec);
  p->n = n;
  p->h = std::move(base);
  p->r = std::move(step);
  return p;
}

bool program_equal(const ProgramPtr& a, const ProgramPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Program::Kind::Proj:
      return a->n == b->n && a->i == b->i;
    case Program::Kind::Zero:
      return a->n == b->n;
    case Program::Kind::Succ:
    case Program::Kind::Add:
    case Program::Kind::Mul:
    case Program::Kind::ChiLeq:
      return true;
    case Program::Kind::Comp: {
      if (a->n != b->n || a->m != b->m || !program_equal(a->h, b->h)) return false;
      if (a->gs.size() != b->gs.size()) return false;
      for (std::size_t i = 0; i < a->gs.size(); ++i)
        if (!program_equal(a->gs[i], b->gs[i])) return false;
      return true;
    }
    case Program::Kind::Mu:
      return a->n == b->n && program_equal(a->h, b->h);
    case Program::Kind::Rec:
      return a->n == b->n && program_equal(a->h, b->h) && program_equal(a->r, b->r);
  }
  return false;
}

bool contains_rec(const ProgramPtr& p) {
  switch (p->kind) {
    case Program::Kind::Rec:
      return true;
    case Program::Kind::Comp:
      if (contains_rec(p->h)) return true;
      for (const auto& g : p->gs)
        if (contains_rec(g)) return true;
      return false;
    case Program::Kind::Mu:
      return contains_rec(p->h);
    default:
      return false;
  }
}

std::uint64_t arity(const ProgramPtr& p) {
  switch (p->kind) {
    case Program::Kind::Proj:
      if (p->i < 1 || p->i > p->n)
        throw error("malformed program: projection index " + std::to_string(p->i) +
                    " out of range for arity " + std::to_string(p->n));
      return p->n;
    case Program::Kind::Zero:
      return p->n;
    case Program::Kind::Succ:
      return 1;
    case Program::Kind::Add:
    case Program::Kind::Mul:
    case Program::Kind::ChiLeq:
      return 2;
    case Program::Kind::Comp: {
      if (arity(p->h) != p->m)
        throw error("malformed program: composition head must have arity " +
                    std::to_string(p->m));
      if (p->gs.size() != p->m)
        throw error("malformed program: composition expects " + std::to_string(p->m) +
                    " inner programs, got " + std::to_string(p->gs.size()));
      for (const auto& g : p->gs)
        if (arity(g) != p->n)
          throw error("malformed program: composition inner program must have arity " +
                      std::to_string(p->n));
      return p->n;
    }
    case Program::Kind::Mu:
      if (arity(p->h) != p->n + 1)
        throw error("malformed program: mu body must have arity " + std::to_string(p->n + 1));
      return p->n;
    case Program::Kind::Rec:
      if (arity(p->h) != p->n)
        throw error("malformed program: rec base must have arity " + std::to_string(p->n));
      if (arity(p->r) != p->n + 2)
        throw error("malformed program: rec step must have arity " + std::to_string(p->n + 2));
      return p->n + 1;
  }
  throw error("malformed program");
}

namespace {

struct Budget {
  Nat left;
  bool spend() {
    if (left == 0) return false;
    left -= 1;
    return true;
  }
};

std::optional<Nat> eval(const ProgramPtr& p, const std::vector<Nat>& args, Budget& budget) {
  switch (p->kind) {
    case Program::Kind::Proj:
      return args[p->i - 1];
    case Program::Kind::Zero:
      return Nat(0);
    case Program::Kind::Succ:
      return args[0] + 1;
    case Program::Kind::Add:
      return args[0] + args[1];
    case Program::Kind::Mul:
      return args[0] * args[1];
    case Program::Kind::ChiLeq:
      return Nat(args[0] <= args[1] ? 1 : 0);
    case Program::Kind::Comp: {
      std::vector<Nat> ws;
      ws.reserve(p->gs.size());
      for (const auto& g : p->gs) {
        auto w = eval(g, args, budget);
        if (!w) return std::nullopt;
        ws.push_back(std::move(*w));
      }
      return eval(p->h, ws, budget);
    }
    case Program::Kind::Mu: {
      std::vector<Nat> inner(args);
      inner.emplace_back(0);
      for (Nat y = 0;; ++y) {
        if (!budget.spend()) return std::nullopt;
        inner.back() = y;
        auto v = eval(p->h, inner, budget);
        if (!v) return std::nullopt;
        if (*v == 0) return y;
      }
    }
    case Program::Kind::Rec: {
      // f(xs, 0) = base(xs); f(xs, k+1) = step(xs, k, f(xs, k))
      std::vector<Nat> xs(args.begin(), args.end() - 1);
      const Nat& k = args.back();
      auto acc = eval(p->h, xs, budget);
      if (!acc) return std::nullopt;
      std::vector<Nat> inner(xs);
      inner.emplace_back(0);
      inner.emplace_back(0);
      for (Nat j = 0; j < k; ++j) {
        if (!budget.spend()) return std::nullopt;
        inner[inner.size() - 2] = j;
        inner[inner.size() - 1] = std::move(*acc);
        acc = eval(p->r, inner, budget);
        if (!acc) return std::nullopt;
      }
      return acc;
    }
  }
  return std::nullopt;
}

}  // namespace

RunOutcome run(const ProgramPtr& p, const std::vector<Nat>& args, const Nat& fuel) {
  if (args.size() != arity(p))
    throw error("run: expected " + std::to_string(arity(p)) + " arguments, got " +
                std::to_string(args.size()));
  Budget budget{fuel};
  return RunOutcome{eval(p, args, budget)};
}

Nat beta(const Nat& a, const Nat& b, const Nat& i) { return a % (1 + (i + 1) * b); }

std::pair<Nat, Nat> beta_encode(const std::vector<Nat>& seq) {
  Nat m = Nat(static_cast<unsigned long>(seq.size()));
  for (const auto& v : seq)
    if (v > m) m = v;
  m += 1;
  Nat b = factorial(m);
  std::vector<Nat> moduli;
  moduli.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    moduli.push_back(1 + Nat(static_cast<unsigned long>(i + 1)) * b);
  Nat a = crt_solve(seq, moduli);
  return {a, b};
}

// ---------------------------------------------------------------------------
// Rec elimination.
//
// A definition by induction becomes a search for the beta-code of its own
// course-of-values sequence: f(xs, k) = beta(a, b, k) for the least Cantor
// pair (a, b) whose decoded prefix satisfies the base and step equations up
// to k. All helpers below are programs of the Rec-free fragment.
// ---------------------------------------------------------------------------

namespace {

using P = ProgramPtr;

// Pads g (arity from) to arity `to` by ignoring the extra trailing arguments.
P lift(const P& g, std::uint64_t from, std::uint64_t to) {
  if (from == to) return g;
  std::vector<P> projs;
  projs.reserve(from);
  for (std::uint64_t j = 1; j <= from; ++j) projs.push_back(p_proj(to, j));
  return p_comp(to, from, g, std::move(projs));
}

P c_comp1(std::uint64_t n, const P& h, P g) { return p_comp(n, 1, h, {std::move(g)}); }
P c_comp2(std::uint64_t n, const P& h, P g1, P g2) {
  return p_comp(n, 2, h, {std::move(g1), std::move(g2)});
}
P c_comp3(std::uint64_t n, const P& h, P g1, P g2, P g3) {
  return p_comp(n, 3, h, {std::move(g1), std::move(g2), std::move(g3)});
}

P c_succ(std::uint64_t n, P g) { return c_comp1(n, p_succ(), std::move(g)); }
P c_add(std::uint64_t n, P g1, P g2) { return c_comp2(n, p_add(), std::move(g1), std::move(g2)); }
P c_mul(std::uint64_t n, P g1, P g2) { return c_comp2(n, p_mul(), std::move(g1), std::move(g2)); }
P c_chileq(std::uint64_t n, P g1, P g2) {
  return c_comp2(n, p_chileq(), std::move(g1), std::move(g2));
}
P c_const(std::uint64_t n, std::uint64_t k) {
  P v = p_zero(n);
  for (std::uint64_t j = 0; j < k; ++j) v = c_succ(n, std::move(v));
  return v;
}

// not(x) = chi_leq(x, 0): 1 iff x = 0
P c_not(std::uint64_t n, P g) { return c_chileq(n, std::move(g), p_zero(n)); }
// sgn(x) = not(not(x))
P c_sgn(std::uint64_t n, P g) { return c_not(n, c_not(n, std::move(g))); }

// The interpreter evaluates composition arguments once and passes values, so
// every helper below is a fixed-arity program applied through c_comp*; inlining
// argument programs into a mu body would re-run them at each search step.

// eq(x, y), arity 2
const P& prim_eq() {
  static const P p = c_mul(2, c_chileq(2, p_proj(2, 1), p_proj(2, 2)),
                           c_chileq(2, p_proj(2, 2), p_proj(2, 1)));
  return p;
}
P c_eq(std::uint64_t n, P g1, P g2) {
  return c_comp2(n, prim_eq(), std::move(g1), std::move(g2));
}

// x - y (truncated): least z with x <= y + z; arity 2
const P& prim_sub() {
  static const P p = p_mu(
      2, c_not(3, c_chileq(3, p_proj(3, 1), c_add(3, p_proj(3, 2), p_proj(3, 3)))));
  return p;
}
P c_sub(std::uint64_t n, P gx, P gy) {
  return c_comp2(n, prim_sub(), std::move(gx), std::move(gy));
}

// floor(x / d) for d >= 1: least q with d*(q+1) > x; arity 2
const P& prim_div() {
  static const P p = p_mu(
      2, c_chileq(3, c_mul(3, p_proj(3, 2), c_succ(3, p_proj(3, 3))), p_proj(3, 1)));
  return p;
}
P c_div(std::uint64_t n, P gx, P gd) {
  return c_comp2(n, prim_div(), std::move(gx), std::move(gd));
}

// x mod d = x - d * (x / d), for d >= 1; arity 2
const P& prim_mod() {
  static const P p = [] {
    P q = c_comp2(2, prim_div(), p_proj(2, 1), p_proj(2, 2));
    return c_comp2(2, prim_sub(), p_proj(2, 1), c_mul(2, p_proj(2, 2), std::move(q)));
  }();
  return p;
}

// beta(a, b, i) = a mod (1 + (i+1)*b); arity 3
const P& prim_beta() {
  static const P p = [] {
    P modulus = c_succ(3, c_mul(3, c_succ(3, p_proj(3, 3)), p_proj(3, 2)));
    return c_comp2(3, prim_mod(), p_proj(3, 1), std::move(modulus));
  }();
  return p;
}
P c_beta(std::uint64_t n, P ga, P gb, P gi) {
  return c_comp3(n, prim_beta(), std::move(ga), std::move(gb), std::move(gi));
}

// Cantor unpairing. diag(c) = least w with (w+1)(w+2) + 2 > 2c; then
// left(c) = c - w(w+1)/2 - 1 and right(c) = w - left(c). Both yield 0 at
// c = 0, which no valid pair encodes.
const P& prim_diag() {  // arity 1
  static const P p = [] {
    P w = p_proj(2, 2);
    P prod = c_mul(2, c_succ(2, w), c_succ(2, c_succ(2, w)));
    P lhs = c_succ(2, c_succ(2, std::move(prod)));
    P c2 = c_add(2, p_proj(2, 1), p_proj(2, 1));
    return p_mu(1, c_chileq(2, std::move(lhs), std::move(c2)));
  }();
  return p;
}
const P& prim_tri() {  // w(w+1)/2, exact division; arity 1
  static const P p = c_comp2(1, prim_div(), c_mul(1, p_proj(1, 1), c_succ(1, p_proj(1, 1))),
                             c_const(1, 2));
  return p;
}
const P& prim_left() {  // arity 1
  static const P p = [] {
    P tri_of_diag = c_comp1(1, prim_tri(), c_comp1(1, prim_diag(), p_proj(1, 1)));
    return c_comp2(1, prim_sub(), p_proj(1, 1), c_succ(1, std::move(tri_of_diag)));
  }();
  return p;
}
const P& prim_right() {  // arity 1
  static const P p = c_comp2(1, prim_sub(), c_comp1(1, prim_diag(), p_proj(1, 1)),
                             c_comp1(1, prim_left(), p_proj(1, 1)));
  return p;
}
P c_left(std::uint64_t n, P gc) { return c_comp1(n, prim_left(), std::move(gc)); }
P c_right(std::uint64_t n, P gc) { return c_comp1(n, prim_right(), std::move(gc)); }

// Bounded check: scans i = 0..k+1 and stops at the first violation of
// ok(i) or at i = k+1; every scan is total. Returns 1 iff no i <= k fails.
// `ok` has arity n+1 reading i as its last argument; result arity n (with k
// as argument `karg`).
P c_forall_upto(std::uint64_t n, std::uint64_t karg, const P& ok) {
  P i = p_proj(n + 1, n + 1);
  P k = p_proj(n + 1, karg);
  // The gate is 1 while i <= k and ok(i) holds; mu finds its first zero,
  // which is k+1 exactly when no i <= k fails.
  P gate = c_mul(n + 1, c_chileq(n + 1, i, std::move(k)), ok);
  P first_stop = p_mu(n, std::move(gate));
  return c_chileq(n, c_succ(n, p_proj(n, karg)), std::move(first_stop));
}

// Rec-free equivalent of Rec(n, base, step); arity n+1.
//
// The language has no sharing, but composition passes values: the expensive
// pieces (the mu-search for the witness pair and its unpairing) are threaded
// through compositions so each evaluates once per call.
P eliminate_one_rec(std::uint64_t n, const P& base, const P& step) {
  const std::uint64_t N = n + 1;   // result: x1..xn, k
  const std::uint64_t V = n + 2;   // validity: x1..xn, k, c
  const std::uint64_t VC = n + 4;  // validity core: x1..xn, k, c, a, b
  const std::uint64_t W = n + 5;   // check: x1..xn, k, c, a, b, i

  // ok(x, k, c, a, b, i): i = 0 -> beta(a,b,0) = base(x); i >= 1 ->
  // beta(a,b,i) = step(x, i-1, beta(a,b,i-1))
  P a = p_proj(W, n + 3);
  P b = p_proj(W, n + 4);
  P i = p_proj(W, n + 5);
  P beta_i = c_beta(W, a, b, i);
  P im1 = c_sub(W, i, c_const(W, 1));
  P beta_prev = c_beta(W, a, b, im1);

  std::vector<P> base_args;
  for (std::uint64_t j = 1; j <= n; ++j) base_args.push_back(p_proj(W, j));
  P base_v = n == 0 ? lift(base, 0, W) : p_comp(W, n, base, std::move(base_args));

  std::vector<P> step_args;
  for (std::uint64_t j = 1; j <= n; ++j) step_args.push_back(p_proj(W, j));
  step_args.push_back(im1);
  // At i = 0 the step's result is discarded but still computed; zeroing its
  // value argument keeps arbitrary beta readings of bad candidates out of
  // step programs that are themselves eliminated recursions. For i >= 1 the
  // previous round already pinned beta(a,b,i-1) to the true history value.
  step_args.push_back(c_mul(W, c_sgn(W, i), beta_prev));
  P step_v = p_comp(W, n + 2, step, std::move(step_args));

  P ok_base = c_mul(W, c_eq(W, i, p_zero(W)), c_eq(W, c_beta(W, a, b, p_zero(W)), std::move(base_v)));
  P ok_step = c_mul(W, c_sgn(W, i), c_eq(W, std::move(beta_i), std::move(step_v)));
  P ok = c_add(W, std::move(ok_base), std::move(ok_step));

  P valid_core = c_forall_upto(VC, n + 1, std::move(ok));
  std::vector<P> vc_args;
  for (std::uint64_t j = 1; j <= n + 2; ++j) vc_args.push_back(p_proj(V, j));
  P c_arg = p_proj(V, n + 2);
  vc_args.push_back(c_left(V, c_arg));
  vc_args.push_back(c_right(V, c_arg));
  P valid = p_comp(V, VC, std::move(valid_core), std::move(vc_args));
  P cstar = p_mu(N, c_not(V, std::move(valid)));

  // extract(x.., k, c) = beta(left c, right c, k)
  P ek = p_proj(N + 1, n + 1);
  P ec = p_proj(N + 1, n + 2);
  P extract = c_beta(N + 1, c_left(N + 1, ec), c_right(N + 1, ec), std::move(ek));
  std::vector<P> ex_args;
  for (std::uint64_t j = 1; j <= n + 1; ++j) ex_args.push_back(p_proj(N, j));
  ex_args.push_back(std::move(cstar));
  return p_comp(N, N + 1, std::move(extract), std::move(ex_args));
}

}  // namespace

ProgramPtr eliminate_rec(const ProgramPtr& p) {
  arity(p);  // reject malformed programs up front
  switch (p->kind) {
    case Program::Kind::Proj:
    case Program::Kind::Zero:
    case Program::Kind::Succ:
    case Program::Kind::Add:
    case Program::Kind::Mul:
    case Program::Kind::ChiLeq:
      return p;
    case Program::Kind::Comp: {
      std::vector<ProgramPtr> gs;
      gs.reserve(p->gs.size());
      for (const auto& g : p->gs) gs.push_back(eliminate_rec(g));
      return p_comp(p->n, p->m, eliminate_rec(p->h), std::move(gs));
    }
    case Program::Kind::Mu:
      return p_mu(p->n, eliminate_rec(p->h));
    case Program::Kind::Rec:
      return eliminate_one_rec(p->n, eliminate_rec(p->h), eliminate_rec(p->r));
  }
  throw error("eliminate_rec: bad program");
}

// ---------------------------------------------------------------------------
// Articulated view. Arity fields ride along as literal leaves so the
// conversion is lossless on the stored construction.
// ---------------------------------------------------------------------------

static ArtTree lit_leaf(std::uint64_t v) { return ArtTree{lit_label(Nat(v)), {}}; }

ArtTree to_articulated(const ProgramPtr& p) {
  auto sym = [](Sym s) { return Nat(static_cast<unsigned>(s)); };
  switch (p->kind) {
    case Program::Kind::Proj:
      return ArtTree{sym(Sym::PProj), {lit_leaf(p->n), lit_leaf(p->i)}};
    case Program::Kind::Zero:
      return ArtTree{sym(Sym::PZero), {lit_leaf(p->n)}};
    case Program::Kind::Succ:
      return ArtTree{sym(Sym::PSucc), {}};
    case Program::Kind::Add:
      return ArtTree{sym(Sym::PAdd), {}};
    case Program::Kind::Mul:
      return ArtTree{sym(Sym::PMul), {}};
    case Program::Kind::ChiLeq:
      return ArtTree{sym(Sym::PChiLeq), {}};
    case Program::Kind::Comp: {
      std::vector<ArtTree> kids{lit_leaf(p->n), lit_leaf(p->m), to_articulated(p->h)};
      for (const auto& g : p->gs) kids.push_back(to_articulated(g));
      return ArtTree{sym(Sym::PComp), std::move(kids)};
    }
    case Program::Kind::Mu:
      return ArtTree{sym(Sym::PMu), {lit_leaf(p->n), to_articulated(p->h)}};
    case Program::Kind::Rec:
      return ArtTree{sym(Sym::PRec),
                     {lit_leaf(p->n), to_articulated(p->h), to_articulated(p->r)}};
  }
  throw error("to_articulated: bad program");
}

static std::optional<std::uint64_t> lit_leaf_u64(const ArtTree& t) {
  if (!t.children.empty()) return std::nullopt;
  if (t.label < kSymbolCount) return std::nullopt;
  Nat off = t.label - kSymbolCount;
  if (off % 2 != 1) return std::nullopt;
  Nat v = (off - 1) / 2;
  if (!v.fits_ulong_p()) return std::nullopt;
  return v.get_ui();
}

std::optional<ProgramPtr> program_from_articulated(const ArtTree& t) {
  if (t.label >= kSymbolCount || t.label < 0) return std::nullopt;
  switch (static_cast<Sym>(t.label.get_ui())) {
    case Sym::PProj: {
      if (t.children.size() != 2) return std::nullopt;
      auto n = lit_leaf_u64(t.children[0]);
      auto i = lit_leaf_u64(t.children[1]);
      if (!n || !i) return std::nullopt;
      return p_proj(*n, *i);
    }
    case Sym::PZero: {
      if (t.children.size() != 1) return std::nullopt;
      auto n = lit_leaf_u64(t.children[0]);
      if (!n) return std::nullopt;
      return p_zero(*n);
    }
    case Sym::PSucc:
      return t.children.empty() ? std::optional<ProgramPtr>(p_succ()) : std::nullopt;
    case Sym::PAdd:
      return t.children.empty() ? std::optional<ProgramPtr>(p_add()) : std::nullopt;
    case Sym::PMul:
      return t.children.empty() ? std::optional<ProgramPtr>(p_mul()) : std::nullopt;
    case Sym::PChiLeq:
      return t.children.empty() ? std::optional<ProgramPtr>(p_chileq()) : std::nullopt;
    case Sym::PComp: {
      if (t.children.size() < 3) return std::nullopt;
      auto n = lit_leaf_u64(t.children[0]);
      auto m = lit_leaf_u64(t.children[1]);
      auto h = program_from_articulated(t.children[2]);
      if (!n || !m || !h) return std::nullopt;
      if (t.children.size() != 3 + *m) return std::nullopt;
      std::vector<ProgramPtr> gs;
      for (std::size_t j = 3; j < t.children.size(); ++j) {
        auto g = program_from_articulated(t.children[j]);
        if (!g) return std::nullopt;
        gs.push_back(*g);
      }
      return p_comp(*n, *m, *h, std::move(gs));
    }
    case Sym::PMu: {
      if (t.children.size() != 2) return std::nullopt;
      auto n = lit_leaf_u64(t.children[0]);
      auto g = program_from_articulated(t.children[1]);
      if (!n || !g) return std::nullopt;
      return p_mu(*n, *g);
    }
    case Sym::PRec: {
      if (t.children.size() != 3) return std::nullopt;
      auto n = lit_leaf_u64(t.children[0]);
      auto base = program_from_articulated(t.children[1]);
      auto step = program_from_articulated(t.children[2]);
      if (!n || !base || !step) return std::nullopt;
      return p_rec(*n, *base, *step);
    }
    default:
      return std::nullopt;
  }
}

std::optional<ProgramPtr> decode_program(const Code& c) {
  auto t = decode_tree(c);
  if (!t) return std::nullopt;
  return program_from_articulated(*t);
}

Code godel_number(const ProgramPtr& p) { return encode(to_articulated(p)); }

}  // namespace godelkit
