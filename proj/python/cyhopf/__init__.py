"""Calabi-Yau decisions for pointed Hopf algebras U(D, lambda) of finite
Cartan type and their Nichols algebras.

Reports come back as plain dicts with the same field names as the JSON
output of the command line tool.
"""

from ._core import (
    ArithmeticError,
    CartanError,
    Datum,
    Error,
    Monomial,
    ParseError,
    UnsupportedError,
    ValidationError,
    canonicalize_group_data,
    classify,
    classify_group_algebra,
    coeff_identity_check,
    find_isomorphism,
    gldim,
    integral_character,
    is_cy_nichols,
    is_cy_U,
    roots,
    run_cli,
    s2_inner,
    violations,
)

__all__ = [
    "ArithmeticError",
    "CartanError",
    "Datum",
    "Error",
    "Monomial",
    "ParseError",
    "UnsupportedError",
    "ValidationError",
    "canonicalize_group_data",
    "classify",
    "classify_group_algebra",
    "coeff_identity_check",
    "find_isomorphism",
    "gldim",
    "integral_character",
    "is_cy_nichols",
    "is_cy_U",
    "load",
    "roots",
    "run_cli",
    "s2_inner",
    "violations",
]


def load(path):
    """Reads and validates a datum file."""
    return Datum.from_file(str(path))
