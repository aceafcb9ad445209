"""Exact q-series and modular-form identity toolkit.

All exact values are returned as strings (integers, "p/q" rationals, or
"a+b*w" field elements); fractions.Fraction reconstitutes the rational
ones losslessly.
"""

from ._qmf import (
    CatalogError,
    UnknownFormError,
    counts,
    crosscheck,
    expand,
    form_info,
    form_names,
    pf_check,
    sigma,
    verify,
)

__all__ = [
    "CatalogError",
    "UnknownFormError",
    "counts",
    "crosscheck",
    "expand",
    "form_info",
    "form_names",
    "pf_check",
    "sigma",
    "verify",
]
