"""Source double-point equations from the group-theoretic product formula."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .action import act, demazure
from .cyclotomic import CyclotomicNumber
from .germ import ReflectedGraphGerm
from .polynomial import Polynomial, product


@dataclass(frozen=True)
class DoublePointEquation:
    reflection_factors: tuple[Polynomial, ...]
    non_reflection_factors: tuple[Polynomial, ...]
    variables: tuple[str, ...] = field(default=())

    @cached_property
    def equation(self) -> Polynomial:
        return product(self.reflection_factors + self.non_reflection_factors, self.variables)

    @property
    def constant(self) -> CyclotomicNumber | None:
        """Leading (graded-lex) coefficient of the product; None when it vanishes."""
        eq = self.equation
        return eq.leading_coefficient() if eq else None

    @property
    def degenerate(self) -> bool:
        return self.equation.is_zero()

    def factors(self) -> tuple[Polynomial, ...]:
        return self.reflection_factors + self.non_reflection_factors


def double_point_equation(germ: ReflectedGraphGerm) -> DoublePointEquation:
    """Demazure factors over reflections times h - g.h over the other non-identity elements."""
    g = germ.group
    h = germ.h.with_variables(germ.source_variables)
    refl = tuple(demazure(g, i, h) for i in g.reflections)
    other = tuple(h - act(g, i, h) for i in g.non_reflections())
    return DoublePointEquation(refl, other, germ.source_variables)


def linear_part(germ: ReflectedGraphGerm) -> Polynomial:
    h = germ.h.with_variables(germ.source_variables)
    parts = dict(h.homogeneous_parts())
    return parts.get(1, Polynomial.zero(h.variables))


def double_point_regular_case(germ: ReflectedGraphGerm) -> DoublePointEquation | None:
    """Shortcut for h with a linear part off every reflecting hyperplane; None if not applicable."""
    g = germ.group
    lin = linear_part(germ)
    if not lin:
        return None
    used = set(lin.used_variables())
    if not used <= set(g.variables):
        return None
    form = lin.with_variables(g.variables)
    # normalize like hyperplane forms: first nonzero coefficient in variable order is 1
    n = g.dimension
    coeffs = [form.coefficient(tuple(int(j == i) for j in range(n))) for i in range(n)]
    lead = next(c for c in coeffs if c)
    form = form.scale(lead.inverse())
    if any(form == H.form for H in g.hyperplanes):
        return None
    h = germ.h.with_variables(germ.source_variables)
    other = tuple(h - act(g, i, h) for i in g.non_reflections())
    return DoublePointEquation((), other, germ.source_variables)
