"""Multiplicity, its group-degree bounds, quasihomogeneity, cross-cap parity."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product as iproduct
from math import gcd, lcm, prod
from typing import Sequence

from .errors import InvalidGermError, UsageError
from .germ import ReflectedGraphGerm
from .groups import ReflectionGroup, degrees_of
from .polynomial import Polynomial


@dataclass(frozen=True)
class MultiplicityReport:
    multiplicity: int
    lower_bound: int
    upper_bound: int
    group_order: int

    @property
    def consistent(self) -> bool:
        return self.lower_bound <= self.multiplicity <= self.upper_bound <= self.group_order


@dataclass(frozen=True)
class QuasihomogeneousType:
    weights: tuple[int, ...]
    coordinate_degrees: tuple[int, ...]
    found: bool

    def __str__(self):
        if not self.found:
            return "not quasihomogeneous"
        return f"({', '.join(map(str, self.coordinate_degrees))}; {', '.join(map(str, self.weights))})"


def multiplicity_at_origin(F: Polynomial) -> int:
    if not F:
        raise InvalidGermError("multiplicity of the zero polynomial is undefined")
    if F.constant_term():
        raise InvalidGermError("the equation does not vanish at the origin")
    return F.min_degree()


def multiplicity_bounds(group: ReflectionGroup, mode: str = "reflected-graph") -> tuple[int, int]:
    """(product of all degrees but the largest, product of all but the smallest)."""
    if mode not in ("reflected-graph", "reflection-map"):
        raise UsageError(f"unknown multiplicity mode {mode!r}")
    degs = degrees_of(group, extended=(mode == "reflected-graph"))
    if len(degs) < 2:
        return 1, 1
    return prod(degs[:-1]), prod(degs[1:])


def multiplicity_report(F: Polynomial, group: ReflectionGroup, mode: str = "reflected-graph") -> MultiplicityReport:
    lo, hi = multiplicity_bounds(group, mode)
    return MultiplicityReport(multiplicity_at_origin(F), lo, hi, group.order)


def _nullspace(rows: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    """Rational basis of {v : row . v = 0 for all rows}."""
    pivots: list[int] = []
    red: list[list[Fraction]] = []
    for r in rows:
        r = list(r)
        for pr, pc in zip(red, pivots):
            if r[pc]:
                f = r[pc]
                r = [a - f * b for a, b in zip(r, pr)]
        pc = next((i for i, v in enumerate(r) if v), None)
        if pc is None:
            continue
        inv = 1 / r[pc]
        r = [v * inv for v in r]
        for k, pr in enumerate(red):
            if pr[pc]:
                f = pr[pc]
                red[k] = [a - f * b for a, b in zip(pr, r)]
        red.append(r)
        pivots.append(pc)
    free = [i for i in range(n) if i not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for pr, pc in zip(red, pivots):
            v[pc] = -pr[fcol]
        basis.append(v)
    return basis


def _primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0) or 1
    return tuple(i // g for i in ints)


def find_weights(coordinates: Sequence[Polynomial], variables: Sequence[str]) -> tuple[int, ...] | None:
    """Positive coprime integer weights making every coordinate weighted-homogeneous."""
    n = len(variables)
    rows = []
    for p in coordinates:
        monos = [m[:n] for m in p.with_variables(tuple(variables)).terms]
        for m in monos[1:]:
            rows.append([Fraction(a - b) for a, b in zip(m, monos[0])])
    basis = _nullspace(rows, n)
    if not basis:
        return None
    ones = [Fraction(1)] * n
    if all(sum(r[i] * ones[i] for i in range(n)) == 0 for r in rows):
        return (1,) * n
    if len(basis) == 1:
        v = _primitive(basis[0])
        if all(x > 0 for x in v):
            return v
        if all(x < 0 for x in v):
            return tuple(-x for x in v)
        return None
    # several directions: look for a small positive integer combination
    best = None
    for c in iproduct(range(-4, 5), repeat=len(basis)):
        if not any(c):
            continue
        v = [sum(ci * b[i] for ci, b in zip(c, basis)) for i in range(n)]
        if all(x > 0 for x in v):
            cand = _primitive(v)
            if best is None or (sum(cand), cand) < (sum(best), best):
                best = cand
    return best


def weighted_degree(p: Polynomial, weights: Sequence[int], variables: Sequence[str]) -> int:
    n = len(variables)
    m = next(iter(p.with_variables(tuple(variables)).terms))
    return sum(w * e for w, e in zip(weights, m[:n]))


def quasihomogeneous_type(germ: ReflectedGraphGerm) -> QuasihomogeneousType:
    if germ.params:
        raise UsageError("quasihomogeneity needs a concrete h (no symbolic parameters)")
    g = germ.group
    coords = [w.with_variables(g.variables) for w in g.orbit_map] + [germ.h.with_variables(g.variables)]
    if any(not c for c in coords):
        return QuasihomogeneousType((), (), False)
    weights = find_weights(coords, g.variables)
    if weights is None:
        return QuasihomogeneousType((), (), False)
    degs = tuple(weighted_degree(c, weights, g.variables) for c in coords)
    return QuasihomogeneousType(weights, degs, True)


def verify_quasihomogeneous(coords: Sequence[Polynomial], qt: QuasihomogeneousType, variables: Sequence[str]) -> bool:
    """Check p(t^b x) == t^d p(x) for each coordinate with a fresh variable t."""
    t = "t_"
    vs = tuple(variables) + (t,)
    tp = Polynomial.var(t, vs)
    bindings = {v: Polynomial.var(v, vs) * tp ** b for v, b in zip(variables, qt.weights)}
    for p, d in zip(coords, qt.coordinate_degrees):
        p = p.with_variables(vs)
        if p.substitute(bindings, vs) != p * tp ** d:
            return False
    return True


def crosscap_count(s: int, k: int) -> Fraction:
    """((2s-1)(2k-2) + (2s-1)) / 2 for the r = 2, b = 2, a = 1 case."""
    if s < 2 or k < 1:
        raise ValueError("crosscap_count needs s >= 2 and k >= 1")
    return Fraction((2 * s - 1) * (2 * k - 2) + (2 * s - 1), 2)


def monomial_factor_exponents(factors: Sequence[Polynomial]) -> list[tuple[int, ...] | None]:
    """Exponent vector of each factor that is a single monomial, else None."""
    out = []
    for f in factors:
        if len(f) == 1:
            out.append(next(iter(f.terms)))
        else:
            out.append(None)
    return out
