#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "godelkit/calculus.hpp"
#include "godelkit/diagonal.hpp"
#include "godelkit/model.hpp"
#include "godelkit/numbering.hpp"
#include "godelkit/program.hpp"
#include "godelkit/representation.hpp"
#include "godelkit/text.hpp"

namespace py = pybind11;
using namespace godelkit;

namespace {

py::object nat_to_py(const Nat& n) {
  PyObject* v = PyLong_FromString(n.get_str(10).c_str(), nullptr, 10);
  if (!v) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(v);
}

Nat py_to_nat(py::handle h) { return nat_from_string(py::cast<std::string>(py::str(h))); }

std::vector<Nat> py_to_nats(const py::sequence& seq) {
  std::vector<Nat> out;
  out.reserve(seq.size());
  for (auto item : seq) out.push_back(py_to_nat(item));
  return out;
}

Theory theory_of(const std::string& name) {
  if (name == "q") return Theory::Q;
  if (name == "pa") return Theory::PA;
  throw error("theory must be 'q' or 'pa'");
}

Code encode_any(const std::string& text, const std::string& category) {
  if (category == "term") return godel_number(parse_term(text));
  if (category == "formula") return godel_number(parse_formula(text));
  if (category == "proof") return godel_number(parse_proof(text));
  if (category == "program") return godel_number(parse_program(text));
  throw error("category must be term|formula|proof|program");
}

py::object decode_any(py::handle code, const std::string& category) {
  Code c = py_to_nat(code);
  if (category == "term") {
    if (auto t = decode_term(c)) return py::str(print_term(*t));
  } else if (category == "formula") {
    if (auto f = decode_formula(c)) return py::str(print_formula(*f));
  } else if (category == "proof") {
    if (auto p = decode_proof(c)) return py::str(print_proof(*p));
  } else if (category == "program") {
    if (auto p = decode_program(c)) return py::str(print_program(*p));
  } else {
    throw error("category must be term|formula|proof|program");
  }
  return py::none();
}

py::dict fixpoint_to_dict(const FixpointResult& r) {
  py::dict d;
  d["c"] = print_formula(r.c);
  d["d"] = print_formula(r.d);
  d["e"] = print_formula(r.e);
  d["g"] = print_formula(r.g);
  d["e_var"] = nat_to_py(r.e_var);
  d["code_e"] = r.code_e ? nat_to_py(*r.code_e) : py::object(py::none());
  d["code_g"] = r.code_g ? nat_to_py(*r.code_g) : py::object(py::none());
  d["identity_checked"] = r.identity_checked;
  return d;
}

FixpointOptions options_of(bool verify) {
  FixpointOptions o;
  o.verify = verify;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Godel numbering, computable-function representation, proof checking and "
            "fixed-point sentences over first-order arithmetic";

  m.def("cantor_pair",
        [](py::handle n, py::handle p) { return nat_to_py(cantor_pair(py_to_nat(n), py_to_nat(p))); },
        py::arg("n"), py::arg("p"));
  m.def("cantor_unpair",
        [](py::handle c) {
          auto [n, p] = cantor_unpair(py_to_nat(c));
          return py::make_tuple(nat_to_py(n), nat_to_py(p));
        },
        py::arg("c"));

  m.def("godel_number", &encode_any, py::arg("text"), py::arg("category") = "formula");
  m.def("decode", &decode_any, py::arg("code"), py::arg("category") = "formula");

  m.def("substitute",
        [](const std::string& f, py::handle var, const std::string& t) {
          return print_formula(substitute(parse_formula(f), py_to_nat(var), parse_term(t)));
        },
        py::arg("formula"), py::arg("var"), py::arg("term"));

  m.def("numeral", [](py::handle n) { return print_term(numeral(py_to_nat(n))); }, py::arg("n"));

  m.def("expand_numeral",
        [](const std::string& t, py::handle cap) {
          auto r = expand_numeral(parse_term(t), py_to_nat(cap));
          return py::make_tuple(print_term(r.term), r.complete);
        },
        py::arg("term"), py::arg("cap"));

  m.def("reflect",
        [](const std::string& f) { return print_term(reflect(parse_formula(f))); },
        py::arg("formula"));

  m.def("arity", [](const std::string& p) { return arity(parse_program(p)); }, py::arg("program"));

  m.def("run",
        [](const std::string& p, const py::sequence& args, py::handle fuel) -> py::object {
          RunOutcome out = run(parse_program(p), py_to_nats(args), py_to_nat(fuel));
          if (out.exhausted()) return py::none();
          return nat_to_py(*out.value);
        },
        py::arg("program"), py::arg("args"), py::arg("fuel") = 100000);

  m.def("beta",
        [](py::handle a, py::handle b, py::handle i) {
          return nat_to_py(beta(py_to_nat(a), py_to_nat(b), py_to_nat(i)));
        },
        py::arg("a"), py::arg("b"), py::arg("i"));
  m.def("beta_encode",
        [](const py::sequence& seq) {
          auto [a, b] = beta_encode(py_to_nats(seq));
          return py::make_tuple(nat_to_py(a), nat_to_py(b));
        },
        py::arg("sequence"));

  m.def("eliminate_rec",
        [](const std::string& p) { return print_program(eliminate_rec(parse_program(p))); },
        py::arg("program"));

  m.def("compile_program",
        [](const std::string& p) { return print_formula(compile(parse_program(p)).formula); },
        py::arg("program"));

  m.def("check_weak_representation",
        [](const std::string& p, const py::sequence& args, py::handle q, py::handle cap) {
          return tri_name(
              check_weak_representation(parse_program(p), py_to_nats(args), py_to_nat(q), py_to_nat(cap)));
        },
        py::arg("program"), py::arg("args"), py::arg("q"), py::arg("cap") = 10000);

  m.def("strong_rep_formula",
        [](const std::string& p, const py::sequence& args, py::handle fuel) {
          return print_formula(strong_rep_formula(parse_program(p), py_to_nats(args), py_to_nat(fuel)));
        },
        py::arg("program"), py::arg("args"), py::arg("fuel") = 100000);

  m.def("halting_formula",
        [](const std::string& p, const py::sequence& args) {
          return print_formula(to_halting_formula(parse_program(p), py_to_nats(args)));
        },
        py::arg("program"), py::arg("args"));

  m.def("eval_formula",
        [](const std::string& f, py::handle cap, const py::dict& assignment,
           const std::string& theory) {
          Env env;
          for (auto item : assignment) env[py_to_nat(item.first)] = py_to_nat(item.second);
          return tri_name(
              eval(parse_formula(f), env, py_to_nat(cap), standard_oracles(theory_of(theory))));
        },
        py::arg("formula"), py::arg("cap") = 1000, py::arg("assignment") = py::dict(),
        py::arg("theory") = "pa");

  m.def("expand_bounded",
        [](const std::string& f, const std::string& which) {
          BoundKind k;
          if (which == "strict")
            k = BoundKind::Strict;
          else if (which == "inclusive")
            k = BoundKind::Inclusive;
          else
            throw error("which must be 'strict' or 'inclusive'");
          return print_formula(expand_bounded(parse_formula(f), k));
        },
        py::arg("formula"), py::arg("which") = "strict");

  m.def("check_proof",
        [](const std::string& p, const std::string& theory) {
          return check_direct(parse_proof(p), theory_of(theory)) == 1;
        },
        py::arg("proof"), py::arg("theory") = "pa");
  m.def("machine_check_proof",
        [](const std::string& p, const std::string& theory) {
          return machine_check(parse_proof(p), theory_of(theory)) == 1;
        },
        py::arg("proof"), py::arg("theory") = "pa");

  m.def("proof_predicate",
        [](py::handle n, py::handle p, const std::string& theory) {
          return proof_predicate(py_to_nat(n), py_to_nat(p), theory_of(theory));
        },
        py::arg("n"), py::arg("p"), py::arg("theory") = "pa");

  m.def("search_proof",
        [](const std::string& f, py::handle fuel, const std::string& theory) -> py::object {
          auto r = search_proof(parse_formula(f), py_to_nat(fuel), theory_of(theory));
          if (!r) return py::none();
          return nat_to_py(*r);
        },
        py::arg("formula"), py::arg("fuel"), py::arg("theory") = "pa");

  m.def("decide_both",
        [](const std::string& f, py::handle fuel, const std::string& theory) {
          DecideResult r = decide_both(parse_formula(f), py_to_nat(fuel), theory_of(theory));
          const char* kind = r.kind == DecideResult::Kind::ProvedA        ? "proved"
                             : r.kind == DecideResult::Kind::ProvedNegA  ? "refuted"
                                                                          : "not-found";
          return py::make_tuple(kind, r.kind == DecideResult::Kind::NotFound
                                          ? py::object(py::none())
                                          : nat_to_py(r.code));
        },
        py::arg("formula"), py::arg("fuel"), py::arg("theory") = "pa");

  m.def("bounded_provable",
        [](const std::string& f, py::handle bound, const std::string& theory) {
          return bounded_provable(parse_formula(f), py_to_nat(bound), theory_of(theory)) == 1;
        },
        py::arg("formula"), py::arg("bound"), py::arg("theory") = "pa");

  m.def("bew_formula", [] { return print_formula(bew_formula()); });
  m.def("box", [](const std::string& f) { return print_formula(box(parse_formula(f))); },
        py::arg("formula"));

  m.def("sub_on_codes",
        [](py::handle n, py::handle p) { return nat_to_py(sub_on_codes(py_to_nat(n), py_to_nat(p))); },
        py::arg("n"), py::arg("p"));
  m.def("neg_on_codes", [](py::handle n) { return nat_to_py(neg_on_codes(py_to_nat(n))); },
        py::arg("n"));

  m.def("fixpoint",
        [](const std::string& c, bool verify) {
          return fixpoint_to_dict(fixpoint(parse_formula(c), options_of(verify)));
        },
        py::arg("c"), py::arg("verify") = true);
  m.def("godel_sentence", [](bool verify) { return fixpoint_to_dict(godel_sentence(options_of(verify))); },
        py::arg("verify") = true);
  m.def("henkin_sentence",
        [](bool verify) { return fixpoint_to_dict(henkin_sentence(options_of(verify))); },
        py::arg("verify") = true);
  m.def("loeb_sentence",
        [](const std::string& p, bool verify) {
          return fixpoint_to_dict(loeb_sentence(parse_formula(p), options_of(verify)));
        },
        py::arg("p") = "bot", py::arg("verify") = true);
  m.def("rosser_sentence",
        [](bool verify) { return fixpoint_to_dict(rosser_sentence(options_of(verify))); },
        py::arg("verify") = false);
}
