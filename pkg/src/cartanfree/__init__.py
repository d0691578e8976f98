"""Exact verification of rank-one free modules over Virasoro-type algebras.

Polynomials and scalars are exact (``fractions.Fraction``); every identity is
checked symbolically or on explicit bases, never numerically.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    CartanFreeError,
    ConfigError,
    InvalidGenerator,
    InvalidParam,
    NotInFamily,
    PreconditionViolated,
)
from .exactpoly import ParamSet, Poly1, Poly2, Scalar, scalar
from .liealg import AlgebraKind, Generator, LieElement, bracket
from .modules import Family, HCoeffs, ModuleSpec, act, omega_big, omega_hv, omega_vir, omega_w22
from .verify import CheckReport, check_module_axioms, simplicity_evidence

__all__ = [
    "AlgebraKind", "BudgetExceeded", "CartanFreeError", "CheckReport", "ConfigError", "Family",
    "Generator", "HCoeffs", "InvalidGenerator", "InvalidParam", "LieElement", "ModuleSpec",
    "NotInFamily", "ParamSet", "Poly1", "Poly2", "PreconditionViolated", "Scalar", "act",
    "bracket", "check_module_axioms", "omega_big", "omega_hv", "omega_vir", "omega_w22", "scalar",
    "simplicity_evidence",
]
