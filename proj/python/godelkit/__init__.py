"""Executable constructions around provability and self-reference in arithmetic.

The heavy lifting lives in the compiled extension; this package re-exports it.
Syntactic objects cross the boundary in the same textual format the CLI uses,
codes as plain Python integers.
"""

from godelkit._core import (  # noqa: F401
    arity,
    beta,
    beta_encode,
    bew_formula,
    bounded_provable,
    box,
    cantor_pair,
    cantor_unpair,
    check_proof,
    check_weak_representation,
    compile_program,
    decide_both,
    decode,
    eliminate_rec,
    eval_formula,
    expand_bounded,
    expand_numeral,
    fixpoint,
    godel_number,
    godel_sentence,
    halting_formula,
    henkin_sentence,
    loeb_sentence,
    machine_check_proof,
    neg_on_codes,
    numeral,
    proof_predicate,
    reflect,
    rosser_sentence,
    run,
    search_proof,
    strong_rep_formula,
    sub_on_codes,
    substitute,
)

__all__ = [name for name in dir() if not name.startswith("_")]
