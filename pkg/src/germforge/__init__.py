"""Exact computations for reflected graph map germs f = (w, h)."""

from __future__ import annotations

from .cyclotomic import CyclotomicNumber, zeta
from .errors import (
    GermforgeError,
    InexactDivisionError,
    InvalidGermError,
    MathematicalInconsistency,
    NoSolutionError,
    NotInvariantError,
    NotReflectionGroupError,
    OrderCapExceeded,
    ParseError,
    UsageError,
    VariableMismatchError,
)
from .groups import GroupElement, Hyperplane, ReflectionGroup, builtin_family, degrees_of, generate_closure
from .germ import ReflectedGraphGerm, make_germ
from .matrix import PolyMatrix
from .parser import parse_polynomial
from .polynomial import Polynomial, exact_divide

__version__ = "0.1.0"
