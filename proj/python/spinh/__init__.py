"""Clifford homomorphisms and invariant operators on sections over R^n."""

from ._core import (
    NumericalError,
    conformal_weight,
    decompose,
    e_matrix,
    kernel,
    quotient_dimensions,
    spectrum,
    verify,
    weyl_dim,
)

__all__ = [
    "NumericalError",
    "conformal_weight",
    "decompose",
    "e_matrix",
    "kernel",
    "quotient_dimensions",
    "spectrum",
    "verify",
    "weyl_dim",
]
