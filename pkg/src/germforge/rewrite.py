"""Rewrite invariants in terms of the orbit map by graded linear solves.

Source polynomials live in the group's x-variables plus passive variables
(symbolic parameters p_i and Z), which are treated as invariant
indeterminates.  For each weighted degree D the candidate columns are the
products of orbit-map powers of degree D (times a basis element r_i for the
module decomposition); the coefficient vector is obtained from a cached
pivoted inverse and then checked by reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Sequence

from .cyclotomic import ONE, ZERO, CyclotomicNumber
from .errors import NoSolutionError
from .groups import ReflectionGroup, row_reduce
from .matrix import PolyMatrix
from .polynomial import Polynomial, poly_sum


@dataclass(frozen=True)
class InvariantExpression:
    polynomial: Polynomial
    source_degree: int

    def __str__(self):
        return str(self.polynomial)


def exponent_vectors(degrees: Sequence[int], total: int) -> list[tuple[int, ...]]:
    """All a >= 0 with sum(a_i * degrees_i) == total, lex ascending."""
    if not degrees:
        return [()] if total == 0 else []
    out = []
    d0 = degrees[0]
    for a in range(total // d0 + 1):
        for rest in exponent_vectors(degrees[1:], total - a * d0):
            out.append((a,) + rest)
    return out


class _Decomposer:
    """Solve sum_k c_k * columns[k] = target for columns of one degree."""

    def __init__(self, labels: list, columns: list[Polynomial]):
        self.labels = labels
        self.columns = columns
        rows: dict = {}
        for k, col in enumerate(columns):
            for mono, c in col.terms.items():
                rows.setdefault(mono, {})[k] = c
        self.monomials = set(rows)
        n = len(columns)
        # choose n independent monomial rows by incremental elimination
        chosen: list = []
        basis: list[list[CyclotomicNumber]] = []
        pivots: list[int] = []
        for mono in sorted(rows):
            vec = [rows[mono].get(k, ZERO) for k in range(n)]
            for b, p in zip(basis, pivots):
                if vec[p]:
                    f = vec[p]
                    vec = [a - f * x for a, x in zip(vec, b)]
            piv = next((k for k, v in enumerate(vec) if v), None)
            if piv is None:
                continue
            inv = vec[piv].inverse()
            vec = [v * inv for v in vec]
            basis.append(vec)
            pivots.append(piv)
            chosen.append(mono)
            if len(chosen) == n:
                break
        if len(chosen) != n:
            raise NoSolutionError("candidate columns are linearly dependent; orbit map not algebraically independent")
        square = [[rows[m].get(k, ZERO) for k in range(n)] for m in chosen]
        aug = [r + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(square)]
        red = row_reduce(aug)
        self.rows = chosen
        self.inverse = [r[n:] for r in red]

    def solve(self, target: Polynomial) -> list[CyclotomicNumber]:
        n = len(self.columns)
        if n == 0:
            if target:
                raise NoSolutionError(f"no candidate columns for {target}", target)
            return []
        if any(m not in self.monomials for m in target.terms):
            raise NoSolutionError(f"{target} is outside the span of the candidate columns", target)
        b = [target.coefficient(m) for m in self.rows]
        coeffs = []
        for row in self.inverse:
            s = ZERO
            for a, v in zip(row, b):
                if a and v:
                    s = s + a * v
            coeffs.append(s)
        check = poly_sum((col.scale(c) for col, c in zip(self.columns, coeffs) if c), target.variables)
        if check != target:
            raise NoSolutionError(f"{target} is outside the span of the candidate columns", target)
        return coeffs


def _orbit_powers(group: ReflectionGroup, a: tuple[int, ...]) -> Polynomial:
    key = ("wpow", a)
    cache = group.cache
    if key not in cache:
        variables = group.variables
        result = Polynomial.constant(1, variables)
        for w, e in zip(group.orbit_map, a):
            if e:
                result = result * w.with_variables(variables) ** e
        cache[key] = result
    return cache[key]


def _invariant_decomposer(group: ReflectionGroup, degree: int) -> _Decomposer:
    key = ("inv", degree)
    if key not in group.cache:
        labels = exponent_vectors(group.degrees, degree)
        group.cache[key] = _Decomposer(labels, [_orbit_powers(group, a) for a in labels])
    return group.cache[key]


def _module_decomposer(group: ReflectionGroup, basis: tuple[Polynomial, ...], degree: int) -> _Decomposer:
    key = ("mod", tuple(str(r) for r in basis), degree)
    if key not in group.cache:
        labels, cols = [], []
        for i, r in enumerate(basis):
            dr = r.degree()
            if dr > degree:
                continue
            for a in exponent_vectors(group.degrees, degree - dr):
                labels.append((i, a))
                cols.append(r * _orbit_powers(group, a))
        group.cache[key] = _Decomposer(labels, cols)
    return group.cache[key]


def _split_passive(group: ReflectionGroup, q: Polynomial):
    gv = group.variables
    missing = [v for v in gv if v not in q.variables]
    if missing:
        q = q.with_variables(q.variables + tuple(missing))
    passive = tuple(v for v in q.variables if v not in gv)
    return passive, q.split(gv)


def _target_names(group: ReflectionGroup, passive: tuple[str, ...]) -> tuple[str, ...]:
    return group.target_variables + passive


def rewrite_invariant(q: Polynomial, group: ReflectionGroup) -> InvariantExpression:
    """Return Q with Q(w, passive) == q."""
    passive, pieces = _split_passive(group, q)
    tv = _target_names(group, passive)
    n = group.dimension
    out: dict = {}
    for pexp, xpart in pieces.items():
        for D, part in xpart.homogeneous_parts():
            try:
                coeffs = _invariant_decomposer(group, D).solve(part)
            except NoSolutionError as exc:
                raise NoSolutionError(
                    f"not in the invariant algebra: degree-{D} part {part} does not rewrite in the orbit map",
                    part,
                ) from exc
            for a, c in zip(_invariant_decomposer(group, D).labels, coeffs):
                if c:
                    mono = tuple(a) + tuple(pexp)
                    out[mono] = out[mono] + c if mono in out else c
    poly = Polynomial(tv, out)
    return InvariantExpression(poly, max(0, q.degree_in(group.variables)) if q else 0)


def coinvariant_decompose(
    h: Polynomial, group: ReflectionGroup, basis: Sequence[Polynomial]
) -> list[InvariantExpression]:
    """Coordinates p_1..p_d with h == sum r_i * p_i(w)."""
    basis = tuple(r.with_variables(group.variables) for r in basis)
    passive, pieces = _split_passive(group, h)
    tv = _target_names(group, passive)
    outs: list[dict] = [{} for _ in basis]
    for pexp, xpart in pieces.items():
        for D, part in xpart.homogeneous_parts():
            dec = _module_decomposer(group, basis, D)
            try:
                coeffs = dec.solve(part)
            except NoSolutionError as exc:
                raise NoSolutionError(
                    f"degree-{D} part {part} is not generated by the basis over the invariants",
                    part,
                ) from exc
            for (i, a), c in zip(dec.labels, coeffs):
                if c:
                    mono = tuple(a) + tuple(pexp)
                    d = outs[i]
                    d[mono] = d[mono] + c if mono in d else c
    deg = max(0, h.degree_in(group.variables)) if h else 0
    return [InvariantExpression(Polynomial(tv, d), deg) for d in outs]


def pull_back(Q: Polynomial, group: ReflectionGroup, variables: Sequence[str] | None = None) -> Polynomial:
    """Substitute X_i -> w_i."""
    tv = group.target_variables
    present = [v for v in tv if v in Q.variables]
    passive = tuple(v for v in Q.variables if v not in tv)
    if variables is None:
        variables = group.variables + passive
    bindings = {
        X: w.with_variables(variables) for X, w in zip(tv, group.orbit_map) if X in present
    }
    return Q.substitute(bindings, variables)


def alpha_matrix(group: ReflectionGroup, basis: Sequence[Polynomial], h: Polynomial) -> PolyMatrix:
    """Rows solve r_i * h = sum_j alpha_ij(w) * r_j."""
    rows = []
    for r in basis:
        rows.append([e.polynomial for e in coinvariant_decompose(r * h, group, basis)])
    return PolyMatrix(rows)
