"""Exact Poisson differential algebras."""

from ._core import (
    Chart,
    Constants,
    DomainError,
    Error,
    InputError,
    ParseError,
    Report,
    SamplePlan,
    Structure,
    canonical_expr,
    canonical_form,
    onedim,
    run,
)

__all__ = [
    "Chart",
    "Constants",
    "DomainError",
    "Error",
    "InputError",
    "ParseError",
    "Report",
    "SamplePlan",
    "Structure",
    "canonical_expr",
    "canonical_form",
    "onedim",
    "run",
]
