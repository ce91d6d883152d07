"""Reflected graph germs f = (w, h)."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InvalidGermError, UsageError
from .groups import ReflectionGroup
from .matrix import PolyMatrix
from .polynomial import Polynomial

_RESERVED = re.compile(r"^(x\d*|y|X\d*|Y|Z|z\d+)$")


def check_parameter_names(names: Sequence[str]) -> None:
    seen = set()
    for n in names:
        if not re.match(r"^[A-Za-z_][A-Za-z0-9_]*$", n):
            raise UsageError(f"invalid parameter name {n!r}")
        if _RESERVED.match(n):
            raise UsageError(f"parameter name {n!r} collides with a reserved variable")
        if n in seen:
            raise UsageError(f"parameter {n!r} declared twice")
        seen.add(n)


@dataclass(frozen=True, eq=False)
class ReflectedGraphGerm:
    """A reflection group, a function h and a coinvariant basis.

    ``params`` are symbolic invariant indeterminates appearing in ``h``.
    """

    group: ReflectionGroup
    h: Polynomial
    basis: tuple[Polynomial, ...]
    params: tuple[str, ...] = ()
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def source_variables(self) -> tuple[str, ...]:
        return self.group.variables + self.params

    @property
    def target_variables(self) -> tuple[str, ...]:
        return self.group.target_variables + self.params

    def eigen_matrix(self) -> PolyMatrix:
        if "E" not in self._cache:
            from .action import act

            g = self.group
            self._cache["E"] = PolyMatrix(
                [[act(g, el, r) for el in g.elements] for r in self.basis], g.variables
            )
        return self._cache["E"]

    def eigen_determinant(self) -> Polynomial:
        key = ("detE", tuple(str(r) for r in self.basis))
        cache = self.group.cache
        if key not in cache:
            cache[key] = self.eigen_matrix().determinant()
        return cache[key]


def make_germ(
    group: ReflectionGroup,
    h: Polynomial,
    basis: Sequence[Polynomial] | None = None,
    params: Sequence[str] = (),
    specialize: Mapping[str, Polynomial] | None = None,
) -> ReflectedGraphGerm:
    """Validate and bundle a germ.

    ``specialize`` maps some parameters to polynomials in the target
    variables; those are pulled back through w and substituted into h.
    """
    params = tuple(params)
    check_parameter_names(params)
    specialize = dict(specialize or {})
    unknown = [p for p in specialize if p not in params]
    if unknown:
        raise UsageError(f"specialized parameters {unknown} are not declared")
    symbolic = tuple(p for p in params if p not in specialize)
    src = group.variables + params
    h = h.with_variables(src)
    if specialize:
        from .rewrite import pull_back

        bindings = {}
        for name, expr in specialize.items():
            expr = expr.with_variables(group.target_variables + symbolic)
            bindings[name] = pull_back(expr, group, group.variables + symbolic)
        h = h.substitute(bindings, group.variables + symbolic)
    src = group.variables + symbolic
    h = h.with_variables(src)
    n = group.dimension
    for mono, c in h.terms.items():
        if not any(mono[:n]):
            raise InvalidGermError(f"h must vanish at the origin; found the term {Polynomial(src, {mono: c})}")

    if basis is None:
        if group.default_basis is None:
            raise UsageError(f"group {group.name} has no default coinvariant basis; supply one")
        basis = group.default_basis
    basis = tuple(r.with_variables(group.variables) for r in basis)
    if len(basis) != group.order:
        raise InvalidGermError(f"basis has {len(basis)} elements but the group has order {group.order}")
    if basis[0] != 1:
        raise InvalidGermError("the first basis element must be 1")
    for r in basis:
        if not r or not r.is_homogeneous():
            raise InvalidGermError(f"basis element {r} must be a nonzero homogeneous polynomial")
    germ = ReflectedGraphGerm(group, h, basis, symbolic)
    if not germ.eigen_determinant():
        raise InvalidGermError("the eigen-matrix of the basis is singular; the basis does not span the coinvariants")
    return germ
