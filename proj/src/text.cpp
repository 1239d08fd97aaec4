#include "godelkit/text.hpp"

#include <cctype>
#include <memory>
#include <sstream>
#include <variant>
#include <vector>

namespace godelkit {

namespace {

struct Sexp {
  std::string atom;
  std::vector<Sexp> list;
  bool is_atom = false;
};

struct Reader {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  Sexp read() {
    skip_ws();
    if (pos >= text.size()) throw parse_error("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      Sexp s;
      while (true) {
        skip_ws();
        if (pos >= text.size()) throw parse_error("missing ')'");
        if (text[pos] == ')') {
          ++pos;
          return s;
        }
        s.list.push_back(read());
      }
    }
    if (text[pos] == ')') throw parse_error("unexpected ')'");
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    Sexp s;
    s.is_atom = true;
    s.atom = text.substr(start, pos - start);
    return s;
  }
};

Sexp read_single(const std::string& text, const char* what) {
  Reader r{text};
  Sexp s = r.read();
  if (!r.at_end()) throw parse_error(std::string("trailing input after ") + what);
  return s;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Nat parse_nat_atom(const Sexp& s, const char* what) {
  if (!s.is_atom || !all_digits(s.atom))
    throw parse_error(std::string("expected a number for ") + what);
  return nat_from_string(s.atom);
}

std::optional<Nat> var_index_of(const std::string& atom) {
  if (atom.size() < 2 || atom[0] != 'x') return std::nullopt;
  std::string digits = atom.substr(1);
  if (!all_digits(digits)) return std::nullopt;
  return nat_from_string(digits);
}

TermPtr term_of(const Sexp& s) {
  if (s.is_atom) {
    if (s.atom == "0") return mk_zero();
    if (auto v = var_index_of(s.atom)) return mk_var(*v);
    throw parse_error("unknown term atom '" + s.atom + "'");
  }
  if (s.list.empty() || !s.list[0].is_atom) throw parse_error("bad term");
  const std::string& head = s.list[0].atom;
  if (head == "S") {
    if (s.list.size() != 2) throw parse_error("S takes one argument");
    return mk_succ(term_of(s.list[1]));
  }
  if (head == "+" || head == "*") {
    if (s.list.size() != 3) throw parse_error(head + " takes two arguments");
    auto a = term_of(s.list[1]);
    auto b = term_of(s.list[2]);
    return head == "+" ? mk_add(std::move(a), std::move(b)) : mk_mul(std::move(a), std::move(b));
  }
  if (head == "lit") {
    if (s.list.size() != 2) throw parse_error("lit takes one argument");
    return mk_lit(parse_nat_atom(s.list[1], "lit"));
  }
  throw parse_error("unknown term form '" + head + "'");
}

Nat pred_id_of(const std::string& name) {
  if (name == "Proof") return kOracleProof;
  if (name == "S") return kOracleSub;
  if (name == "Neg") return kOracleNeg;
  if (name.size() >= 2 && name[0] == 'p' && all_digits(name.substr(1)))
    return nat_from_string(name.substr(1));
  throw parse_error("unknown predicate name '" + name + "'");
}

std::string pred_name_of(const Nat& id) {
  if (id == kOracleProof) return "Proof";
  if (id == kOracleSub) return "S";
  if (id == kOracleNeg) return "Neg";
  return "p" + nat_to_string(id);
}

FormulaPtr formula_of(const Sexp& s) {
  if (s.is_atom) {
    if (s.atom == "bot") return mk_bottom();
    throw parse_error("unknown formula atom '" + s.atom + "'");
  }
  if (s.list.empty() || !s.list[0].is_atom) throw parse_error("bad formula");
  const std::string& head = s.list[0].atom;
  if (head == "=") {
    if (s.list.size() != 3) throw parse_error("= takes two arguments");
    return mk_eq(term_of(s.list[1]), term_of(s.list[2]));
  }
  if (head == "=>" || head == "and" || head == "or") {
    if (s.list.size() != 3) throw parse_error(head + " takes two arguments");
    auto a = formula_of(s.list[1]);
    auto b = formula_of(s.list[2]);
    if (head == "=>") return mk_implies(std::move(a), std::move(b));
    if (head == "and") return mk_and(std::move(a), std::move(b));
    return mk_or(std::move(a), std::move(b));
  }
  if (head == "not") {
    if (s.list.size() != 2) throw parse_error("not takes one argument");
    return mk_not(formula_of(s.list[1]));
  }
  if (head == "forall" || head == "exists") {
    if (s.list.size() != 3 || !s.list[1].is_atom) throw parse_error(head + " takes x<k> and a body");
    auto v = var_index_of(s.list[1].atom);
    if (!v) throw parse_error("bad quantifier variable '" + s.list[1].atom + "'");
    auto body = formula_of(s.list[2]);
    return head == "forall" ? mk_forall(*v, std::move(body)) : mk_exists(*v, std::move(body));
  }
  if (head == "defpred") {
    if (s.list.size() < 2 || !s.list[1].is_atom) throw parse_error("defpred needs a name");
    Nat id = pred_id_of(s.list[1].atom);
    std::vector<TermPtr> args;
    for (std::size_t i = 2; i < s.list.size(); ++i) args.push_back(term_of(s.list[i]));
    return mk_defpred(std::move(id), std::move(args));
  }
  throw parse_error("unknown formula form '" + head + "'");
}

std::uint64_t parse_u64_atom(const Sexp& s, const char* what) {
  Nat n = parse_nat_atom(s, what);
  if (!n.fits_ulong_p()) throw parse_error(std::string("number too large for ") + what);
  return n.get_ui();
}

ProgramPtr program_of(const Sexp& s) {
  if (s.is_atom) {
    if (s.atom == "succ") return p_succ();
    if (s.atom == "add") return p_add();
    if (s.atom == "mul") return p_mul();
    if (s.atom == "chileq") return p_chileq();
    throw parse_error("unknown program atom '" + s.atom + "'");
  }
  if (s.list.empty() || !s.list[0].is_atom) throw parse_error("bad program");
  const std::string& head = s.list[0].atom;
  if (head == "z") {
    if (s.list.size() != 2) throw parse_error("z takes the arity");
    return p_zero(parse_u64_atom(s.list[1], "z"));
  }
  if (head == "proj") {
    if (s.list.size() != 3) throw parse_error("proj takes arity and index");
    return p_proj(parse_u64_atom(s.list[1], "proj"), parse_u64_atom(s.list[2], "proj"));
  }
  if (head == "comp") {
    if (s.list.size() != 5 || s.list[4].is_atom)
      throw parse_error("comp takes n, m, a program and a program list");
    std::uint64_t n = parse_u64_atom(s.list[1], "comp");
    std::uint64_t m = parse_u64_atom(s.list[2], "comp");
    auto h = program_of(s.list[3]);
    std::vector<ProgramPtr> gs;
    for (const auto& g : s.list[4].list) gs.push_back(program_of(g));
    return p_comp(n, m, std::move(h), std::move(gs));
  }
  if (head == "mu") {
    if (s.list.size() != 3) throw parse_error("mu takes the arity and a program");
    return p_mu(parse_u64_atom(s.list[1], "mu"), program_of(s.list[2]));
  }
  if (head == "rec") {
    if (s.list.size() != 4) throw parse_error("rec takes the arity, base and step");
    std::uint64_t n = parse_u64_atom(s.list[1], "rec");
    auto base = program_of(s.list[2]);
    auto step = program_of(s.list[3]);
    return p_rec(n, std::move(base), std::move(step));
  }
  throw parse_error("unknown program form '" + head + "'");
}

ProofPtr proof_of(const Sexp& s) {
  if (s.is_atom || s.list.size() != 4 || !s.list[0].is_atom || s.list[0].atom != "node" ||
      !s.list[2].is_atom || s.list[3].is_atom)
    throw parse_error("proof nodes look like (node <formula> <rule-tag> (<subproofs>))");
  auto conclusion = formula_of(s.list[1]);
  auto tag = rule_tag_from_name(s.list[2].atom);
  if (!tag) throw parse_error("unknown rule tag '" + s.list[2].atom + "'");
  std::vector<ProofPtr> premises;
  for (const auto& q : s.list[3].list) premises.push_back(proof_of(q));
  return mk_proof(std::move(conclusion), *tag, std::move(premises));
}

}  // namespace

std::string print_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return "0";
    case Term::Kind::Succ:
      return "(S " + print_term(t->a) + ")";
    case Term::Kind::Add:
      return "(+ " + print_term(t->a) + " " + print_term(t->b) + ")";
    case Term::Kind::Mul:
      return "(* " + print_term(t->a) + " " + print_term(t->b) + ")";
    case Term::Kind::Var:
      return "x" + nat_to_string(t->value);
    case Term::Kind::Lit:
      return "(lit " + nat_to_string(t->value) + ")";
  }
  throw error("print_term: bad term");
}

std::string print_formula(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return "(= " + print_term(f->t1) + " " + print_term(f->t2) + ")";
    case Formula::Kind::Bottom:
      return "bot";
    case Formula::Kind::Implies:
      return "(=> " + print_formula(f->f1) + " " + print_formula(f->f2) + ")";
    case Formula::Kind::And:
      return "(and " + print_formula(f->f1) + " " + print_formula(f->f2) + ")";
    case Formula::Kind::Or:
      return "(or " + print_formula(f->f1) + " " + print_formula(f->f2) + ")";
    case Formula::Kind::Not:
      return "(not " + print_formula(f->f1) + ")";
    case Formula::Kind::Forall:
      return "(forall x" + nat_to_string(f->var) + " " + print_formula(f->f1) + ")";
    case Formula::Kind::Exists:
      return "(exists x" + nat_to_string(f->var) + " " + print_formula(f->f1) + ")";
    case Formula::Kind::DefPred: {
      std::string out = "(defpred " + pred_name_of(f->pred);
      for (const auto& t : f->args) out += " " + print_term(t);
      return out + ")";
    }
  }
  throw error("print_formula: bad formula");
}

std::string print_program(const ProgramPtr& p) {
  switch (p->kind) {
    case Program::Kind::Proj:
      return "(proj " + std::to_string(p->n) + " " + std::to_string(p->i) + ")";
    case Program::Kind::Zero:
      return "(z " + std::to_string(p->n) + ")";
    case Program::Kind::Succ:
      return "succ";
    case Program::Kind::Add:
      return "add";
    case Program::Kind::Mul:
      return "mul";
    case Program::Kind::ChiLeq:
      return "chileq";
    case Program::Kind::Comp: {
      std::string out =
          "(comp " + std::to_string(p->n) + " " + std::to_string(p->m) + " " + print_program(p->h) + " (";
      for (std::size_t i = 0; i < p->gs.size(); ++i) {
        if (i) out += " ";
        out += print_program(p->gs[i]);
      }
      return out + "))";
    }
    case Program::Kind::Mu:
      return "(mu " + std::to_string(p->n) + " " + print_program(p->h) + ")";
    case Program::Kind::Rec:
      return "(rec " + std::to_string(p->n) + " " + print_program(p->h) + " " +
             print_program(p->r) + ")";
  }
  throw error("print_program: bad program");
}

std::string print_proof(const ProofPtr& p) {
  std::string out = "(node " + print_formula(p->conclusion) + " " + rule_tag_name(p->tag) + " (";
  for (std::size_t i = 0; i < p->premises.size(); ++i) {
    if (i) out += " ";
    out += print_proof(p->premises[i]);
  }
  return out + "))";
}

TermPtr parse_term(const std::string& text) { return term_of(read_single(text, "term")); }
FormulaPtr parse_formula(const std::string& text) {
  return formula_of(read_single(text, "formula"));
}
ProgramPtr parse_program(const std::string& text) {
  return program_of(read_single(text, "program"));
}
ProofPtr parse_proof(const std::string& text) { return proof_of(read_single(text, "proof")); }

}  // namespace godelkit
