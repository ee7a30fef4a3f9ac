"""Reduction compiler and verification lab for diophantine equations over Z[i]."""

from ._core import (
    BudgetExceeded,
    NoAdmissibleT,
    SearchExhausted,
    UsageError,
    box,
    canon_poly,
    check_rational,
    flatten,
    integer_witness,
    is_square,
    lift,
    norm,
    pell_is_y,
    pell_pairs,
    reduce_poly,
    run_suite,
    suite_names,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "NoAdmissibleT",
    "SearchExhausted",
    "UsageError",
    "box",
    "canon_poly",
    "check_rational",
    "flatten",
    "integer_witness",
    "is_square",
    "lift",
    "norm",
    "pell_is_y",
    "pell_pairs",
    "reduce_poly",
    "run_suite",
    "suite_names",
    "verify",
]

__version__ = "0.1.0"
