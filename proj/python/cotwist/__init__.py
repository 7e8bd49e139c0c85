"""Exact computations with twistings of module coalgebras, crossed coproducts
and Hopf-Galois coextensions."""

from cotwist._core import (
    Bundle,
    CotwistError,
    FieldSpec,
    Report,
    builtin,
    builtin_names,
    check,
    cocycle_lift,
    cocycle_restrict,
    crossed_build,
    crossed_to_twisting,
    eval_equations,
    invert_twisting,
    theorem_ids,
    transpose,
    twist,
    verify_suite,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "Bundle",
    "CotwistError",
    "FieldSpec",
    "Report",
    "builtin",
    "builtin_names",
    "check",
    "cocycle_lift",
    "cocycle_restrict",
    "crossed_build",
    "crossed_to_twisting",
    "eval_equations",
    "invert_twisting",
    "theorem_ids",
    "transpose",
    "twist",
    "verify_suite",
    "verify_theorem",
]
