"""Defining equation of the image of a reflected graph germ."""

from __future__ import annotations

from dataclasses import dataclass

from .action import orbit_functions
from .germ import ReflectedGraphGerm
from .groups import ReflectionGroup
from .polynomial import Polynomial, poly_sum
from .rewrite import InvariantExpression, pull_back, rewrite_invariant

Z = "Z"


@dataclass(frozen=True)
class ImageEquation:
    F: Polynomial
    coefficients: tuple[InvariantExpression, ...]  # Q_0 .. Q_{d-1}

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def Q(self, j: int) -> Polynomial:
        return self.coefficients[j].polynomial


def _orbit_product_coefficients(orbit: list[Polynomial]) -> list[Polynomial]:
    """Z-coefficients c_0..c_d of prod (Z - h_k)."""
    variables = orbit[0].variables
    coeffs = [Polynomial.constant(1, variables)]
    for h in orbit:
        nxt = [Polynomial.zero(variables) for _ in range(len(coeffs) + 1)]
        for j, c in enumerate(coeffs):
            nxt[j + 1] = nxt[j + 1] + c
            if h and c:
                nxt[j] = nxt[j] - c * h
        coeffs = nxt
    return coeffs


def elementary_symmetric_orbit(group: ReflectionGroup, h: Polynomial) -> list[Polynomial]:
    """[q_0, ..., q_{d-1}] where q_{d-k} is the k-th elementary symmetric function of the orbit."""
    orbit = orbit_functions(group, h)
    d = len(orbit)
    c = _orbit_product_coefficients(orbit)
    return [c[j] if (d - j) % 2 == 0 else -c[j] for j in range(d)]


def orbit_product(group: ReflectionGroup, h: Polynomial) -> Polynomial:
    """prod_k (Z - g_k.h) expanded, over h's variables plus Z."""
    orbit = orbit_functions(group, h)
    variables = orbit[0].variables + (Z,)
    c = _orbit_product_coefficients(orbit)
    zpow = lambda j: Polynomial.monomial([0] * (len(variables) - 1) + [j], variables)
    return poly_sum((cj.with_variables(variables) * zpow(j) for j, cj in enumerate(c) if cj), variables)


def assemble_F(coefficients: list[InvariantExpression], variables: tuple[str, ...]) -> Polynomial:
    d = len(coefficients)
    variables = tuple(v for v in variables if v != Z) + (Z,)
    n = len(variables)
    zpow = lambda j: Polynomial.monomial([0] * (n - 1) + [j], variables)
    terms = [zpow(d)]
    for k in range(1, d + 1):
        Q = coefficients[d - k].polynomial
        if Q:
            t = Q.with_variables(variables) * zpow(d - k)
            terms.append(t if k % 2 == 0 else -t)
    return poly_sum(terms, variables)


def image_equation(germ: ReflectedGraphGerm) -> ImageEquation:
    g = germ.group
    h = germ.h.with_variables(germ.source_variables)
    qs = elementary_symmetric_orbit(g, h)
    Qs = []
    for q in qs:
        expr = rewrite_invariant(q, g)
        Qs.append(InvariantExpression(expr.polynomial.with_variables(germ.target_variables), expr.source_degree))
    F = assemble_F(Qs, germ.target_variables)
    return ImageEquation(F, tuple(Qs))


def verify_pullback_factorization(eq: ImageEquation, germ: ReflectedGraphGerm) -> bool:
    g = germ.group
    variables = germ.source_variables + (Z,)
    lhs = pull_back(eq.F, g, variables)
    rhs = orbit_product(g, germ.h.with_variables(germ.source_variables))
    return lhs == rhs.with_variables(variables)
