#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "godelkit/calculus.hpp"
#include "godelkit/diagonal.hpp"
#include "godelkit/model.hpp"
#include "godelkit/numbering.hpp"
#include "godelkit/program.hpp"
#include "godelkit/representation.hpp"
#include "godelkit/text.hpp"

using namespace godelkit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string show_code(const Code& c, bool hex) { return hex ? c.get_str(16) : c.get_str(10); }

Theory theory_of(const std::string& name) {
  if (name == "q") return Theory::Q;
  if (name == "pa") return Theory::PA;
  throw error("theory must be q or pa");
}

Env parse_assignments(const std::vector<std::string>& sets) {
  Env env;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || s.size() < 4 || s[0] != 'x')
      throw error("assignments look like x0=5");
    env[nat_from_string(s.substr(1, eq - 1))] = nat_from_string(s.substr(eq + 1));
  }
  return env;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable constructions around provability and self-reference in arithmetic"};
  app.require_subcommand(1);
  bool hex = false;
  app.add_flag("--hex", hex, "print codes in hexadecimal");

  std::string category = "formula", file, theory_name = "pa";
  std::string code_str, kind, c_file, p_file;
  std::vector<std::string> args_strs, set_flags;
  std::string cap_str = "1000", fuel_str = "100000", bound_str = "1000";
  bool no_verify = false;

  auto* enc = app.add_subcommand("encode", "print the code of a syntactic object");
  enc->add_option("--category", category, "term|formula|proof|program");
  enc->add_option("file", file)->required();

  auto* dec = app.add_subcommand("decode", "print the object a code stands for");
  dec->add_option("--category", category, "term|formula|proof|program");
  dec->add_option("code", code_str)->required();

  auto* run_cmd = app.add_subcommand("run", "run a program on arguments");
  run_cmd->add_option("file", file)->required();
  run_cmd->add_option("args", args_strs, "decimal arguments");
  run_cmd->add_option("--fuel", fuel_str);

  auto* comp = app.add_subcommand("compile", "translate a Rec-free program into a formula");
  comp->add_option("file", file)->required();

  auto* ev = app.add_subcommand("eval", "evaluate a formula in the standard model");
  ev->add_option("file", file)->required();
  ev->add_option("--cap", cap_str, "witness search bound");
  ev->add_option("--set", set_flags, "variable assignment, e.g. --set x0=5");
  ev->add_option("--theory", theory_name, "q|pa (oracle semantics)");

  auto* chk = app.add_subcommand("check", "check a proof");
  chk->add_option("file", file)->required();
  chk->add_option("--theory", theory_name, "q|pa");

  auto* srch = app.add_subcommand("search", "generate-and-test proof search");
  srch->add_option("file", file)->required();
  srch->add_option("--fuel", fuel_str);
  srch->add_option("--theory", theory_name, "q|pa");

  auto* bnd = app.add_subcommand("bounded-provable", "scan proof codes up to a bound");
  bnd->add_option("file", file)->required();
  bnd->add_option("--bound", bound_str);
  bnd->add_option("--theory", theory_name, "q|pa");

  auto* halt = app.add_subcommand("halting-formula", "formula expressing that a program halts");
  halt->add_option("file", file)->required();
  halt->add_option("args", args_strs, "decimal arguments");

  auto* fix = app.add_subcommand("fixpoint", "construct a self-referential sentence");
  fix->add_option("--kind", kind, "godel|henkin|loeb|rosser|custom")->required();
  fix->add_option("--c", c_file, "formula file for --kind custom");
  fix->add_option("--p", p_file, "formula file for --kind loeb (default bot)");
  fix->add_flag("--no-verify", no_verify, "skip the diagonal identity check");

  for (auto* sub : {enc, dec, run_cmd, comp, ev, chk, srch, bnd, halt, fix}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enc) {
      const std::string text = read_file(file);
      Code c;
      if (category == "term")
        c = godel_number(parse_term(text));
      else if (category == "formula")
        c = godel_number(parse_formula(text));
      else if (category == "proof")
        c = godel_number(parse_proof(text));
      else if (category == "program")
        c = godel_number(parse_program(text));
      else
        throw error("category must be term|formula|proof|program");
      std::cout << show_code(c, hex) << "\n";
      return 0;
    }

    if (*dec) {
      Code c = nat_from_string(code_str, hex ? 16 : 10);
      std::string out;
      bool ok = false;
      if (category == "term") {
        if (auto t = decode_term(c)) out = print_term(*t), ok = true;
      } else if (category == "formula") {
        if (auto f = decode_formula(c)) out = print_formula(*f), ok = true;
      } else if (category == "proof") {
        if (auto p = decode_proof(c)) out = print_proof(*p), ok = true;
      } else if (category == "program") {
        if (auto p = decode_program(c)) out = print_program(*p), ok = true;
      } else {
        throw error("category must be term|formula|proof|program");
      }
      if (!ok) {
        std::cout << "decode-failure\n";
        return 1;
      }
      std::cout << out << "\n";
      return 0;
    }

    if (*run_cmd) {
      ProgramPtr p = parse_program(read_file(file));
      std::vector<Nat> args;
      for (const auto& s : args_strs) args.push_back(nat_from_string(s));
      RunOutcome out = run(p, args, nat_from_string(fuel_str));
      if (out.exhausted()) {
        std::cout << "fuel-exhausted\n";
        return 1;
      }
      std::cout << nat_to_string(*out.value) << "\n";
      return 0;
    }

    if (*comp) {
      std::cout << print_formula(compile(parse_program(read_file(file))).formula) << "\n";
      return 0;
    }

    if (*ev) {
      FormulaPtr f = parse_formula(read_file(file));
      TriBool v = eval(f, parse_assignments(set_flags), nat_from_string(cap_str),
                       standard_oracles(theory_of(theory_name)));
      std::cout << tri_name(v) << "\n";
      return v == TriBool::True ? 0 : 1;
    }

    if (*chk) {
      ProofPtr p = parse_proof(read_file(file));
      int ok = check_direct(p, theory_of(theory_name));
      std::cout << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    }

    if (*srch) {
      FormulaPtr f = parse_formula(read_file(file));
      auto r = search_proof(f, nat_from_string(fuel_str), theory_of(theory_name));
      if (!r) {
        std::cout << "not-found\n";
        return 1;
      }
      std::cout << show_code(*r, hex) << "\n";
      return 0;
    }

    if (*bnd) {
      FormulaPtr f = parse_formula(read_file(file));
      int r = bounded_provable(f, nat_from_string(bound_str), theory_of(theory_name));
      std::cout << r << "\n";
      return r ? 0 : 1;
    }

    if (*halt) {
      ProgramPtr p = parse_program(read_file(file));
      std::vector<Nat> args;
      for (const auto& s : args_strs) args.push_back(nat_from_string(s));
      std::cout << print_formula(to_halting_formula(p, args)) << "\n";
      return 0;
    }

    if (*fix) {
      FixpointOptions options;
      options.verify = !no_verify;
      FixpointResult r;
      if (kind == "godel")
        r = godel_sentence(options);
      else if (kind == "henkin")
        r = henkin_sentence(options);
      else if (kind == "loeb")
        r = loeb_sentence(p_file.empty() ? mk_bottom() : parse_formula(read_file(p_file)), options);
      else if (kind == "rosser")
        r = rosser_sentence(options);
      else if (kind == "custom")
        r = fixpoint(parse_formula(read_file(c_file)), options);
      else
        throw error("kind must be godel|henkin|loeb|rosser|custom");
      std::cout << "D: " << print_formula(r.d) << "\n";
      std::cout << "E: " << print_formula(r.e) << "\n";
      std::cout << "G: " << print_formula(r.g) << "\n";
      std::cout << "code(E): " << (r.code_e ? show_code(*r.code_e, hex) : "-") << "\n";
      std::cout << "code(G): " << (r.code_g ? show_code(*r.code_g, hex) : "-") << "\n";
      std::cout << "diagonal identity: " << (r.identity_checked ? "OK" : "not checked") << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
