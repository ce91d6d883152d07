"""Finite complex reflection groups as explicit matrix groups."""

from __future__ import annotations

import os
from functools import lru_cache
from collections import deque
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .cyclotomic import ONE, ZERO, CyclotomicNumber, zeta
from .errors import NotReflectionGroupError, OrderCapExceeded, UsageError
from .polynomial import Polynomial

Matrix = tuple  # tuple[tuple[CyclotomicNumber, ...], ...]

DEFAULT_ORDER_CAP = 10_000


def order_cap() -> int:
    raw = os.environ.get("GERMFORGE_ORDER_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"GERMFORGE_ORDER_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError("GERMFORGE_ORDER_CAP must be positive")
    return cap


def source_variables(n: int) -> tuple[str, ...]:
    return ("x", "y") if n == 2 else tuple(f"x{i + 1}" for i in range(n))


def target_variables(n: int) -> tuple[str, ...]:
    return ("X", "Y") if n == 2 else tuple(f"X{i + 1}" for i in range(n))


# --- small exact linear algebra over cyclotomic entries ---------------------


def as_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return tuple(tuple(CyclotomicNumber.coerce(e) for e in r) for r in rows)


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    out = []
    for r in a:
        row = []
        for c in bt:
            s = ZERO
            for x, y in zip(r, c):
                if x and y:
                    s = s + x * y
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def row_reduce(rows: Sequence[Sequence[CyclotomicNumber]]) -> list[list[CyclotomicNumber]]:
    """Reduced row echelon form; zero rows dropped."""
    work = [list(r) for r in rows]
    out: list[list[CyclotomicNumber]] = []
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        piv = next((r for r in work if r[col]), None)
        if piv is None:
            col += 1
            continue
        work.remove(piv)
        inv = piv[col].inverse()
        piv = [e * inv for e in piv]
        work = [[a - r[col] * b for a, b in zip(r, piv)] if r[col] else r for r in work]
        out = [[a - r[col] * b for a, b in zip(r, piv)] if r[col] else r for r in out]
        out.append(piv)
        work = [r for r in work if any(r)]
        col += 1
    return out


def rank(m: Matrix) -> int:
    return len(row_reduce(m))


def mat_inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m)]
    red = row_reduce(aug)
    if len(red) != n or any(not red[i][i] for i in range(n)):
        raise UsageError("generator matrix is singular")
    return tuple(tuple(r[n:]) for r in red)


def is_monomial_matrix(m: Matrix) -> bool:
    return all(sum(1 for e in r if e) == 1 for r in m) and all(
        sum(1 for e in c if e) == 1 for c in zip(*m)
    )


def matrix_text(m: Matrix) -> str:
    return "; ".join(", ".join(str(e) for e in r) for r in m)


# --- group data -------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    matrix: Matrix
    index: int

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == mat_identity(len(self.matrix))

    def __str__(self):
        return f"g{self.index} = [{matrix_text(self.matrix)}]"


@dataclass(frozen=True)
class Hyperplane:
    form: Polynomial
    stabilizer_order: int
    generator_index: int


@dataclass(frozen=True, eq=False)
class ReflectionGroup:
    dimension: int
    elements: tuple[GroupElement, ...]
    reflections: tuple[int, ...]
    hyperplanes: tuple[Hyperplane, ...]
    orbit_map: tuple[Polynomial, ...]
    degrees: tuple[int, ...]
    name: str = "custom"
    default_basis: tuple[Polynomial, ...] | None = None
    _lookup: dict = field(default=None, compare=False, repr=False)
    _inverses: tuple = field(default=None, compare=False, repr=False)
    _reflection_planes: dict = field(default=None, compare=False, repr=False)
    # memo for derived data (eigen determinants, rewrite decomposers)
    cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def variables(self) -> tuple[str, ...]:
        return source_variables(self.dimension)

    @property
    def target_variables(self) -> tuple[str, ...]:
        return target_variables(self.dimension)

    def element(self, index: int) -> GroupElement:
        return self.elements[index - 1]

    def index_of(self, matrix: Matrix) -> int | None:
        return self._lookup.get(matrix)

    def inverse(self, g: GroupElement | int) -> GroupElement:
        idx = g if isinstance(g, int) else g.index
        return self.elements[self._inverses[idx - 1] - 1]

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.elements[self._lookup[mat_mul(a.matrix, b.matrix)] - 1]

    def is_reflection(self, g: GroupElement | int) -> bool:
        idx = g if isinstance(g, int) else g.index
        return idx in self._reflection_planes

    def hyperplane_of(self, g: GroupElement | int) -> Hyperplane:
        idx = g if isinstance(g, int) else g.index
        try:
            return self.hyperplanes[self._reflection_planes[idx]]
        except KeyError:
            raise ValueError(f"g{idx} is not a reflection") from None

    def non_reflections(self) -> tuple[int, ...]:
        """Ids of non-identity elements that are not reflections."""
        return tuple(
            g.index for g in self.elements[1:] if g.index not in self._reflection_planes
        )

    def conductor(self) -> int:
        from .cyclotomic import lcm

        c = 1
        for g in self.elements:
            for r in g.matrix:
                for e in r:
                    c = lcm(c, e.conductor)
        return c

    def summary(self) -> str:
        return f"{self.name}: order {self.order}, {len(self.reflections)} reflections, degrees {self.degrees}"


def degrees_of(group: ReflectionGroup, extended: bool = False) -> tuple[int, ...]:
    degs = list(group.degrees)
    if extended:
        degs.append(1)
    return tuple(sorted(degs))


# --- classification ---------------------------------------------------------


def _normalized_form(row: Sequence[CyclotomicNumber], variables: tuple[str, ...]) -> Polynomial:
    lead = next(e for e in row if e)
    inv = lead.inverse()
    n = len(row)
    terms = {}
    for i, e in enumerate(row):
        if e:
            mono = tuple(1 if j == i else 0 for j in range(n))
            terms[mono] = e * inv
    return Polynomial(variables, terms)


def classify_reflections(
    elements: Sequence[GroupElement],
) -> tuple[tuple[int, ...], tuple[Hyperplane, ...], dict[int, int]]:
    """Return (reflection ids, hyperplanes, reflection id -> hyperplane slot)."""
    if not elements:
        return (), (), {}
    n = elements[0].dimension
    ident = mat_identity(n)
    variables = source_variables(n)
    diffs = {g.index: mat_sub(g.matrix, ident) for g in elements}
    forms: list[Polynomial] = []
    normals: list[list[CyclotomicNumber]] = []
    plane_of: dict[int, int] = {}
    reflections = []
    for g in elements:
        d = diffs[g.index]
        red = row_reduce(d)
        if len(red) != 1:
            continue
        form = _normalized_form(red[0], variables)
        reflections.append(g.index)
        if form in forms:
            plane_of[g.index] = forms.index(form)
        else:
            plane_of[g.index] = len(forms)
            forms.append(form)
            normals.append(red[0])
    planes = []
    for slot, (form, normal) in enumerate(zip(forms, normals)):
        stab = []
        for g in elements:
            d = diffs[g.index]
            # g fixes ker(normal) pointwise iff every row of g - Id is a multiple of normal
            if all(not any(r) or rank((tuple(r), tuple(normal))) == 1 for r in d):
                stab.append(g)
        e = len(stab)
        gen = None
        for g in stab:
            if g.index in plane_of and _element_order(g.matrix) == e:
                gen = g.index
                break
        if gen is None:
            gen = min(i for i, s in plane_of.items() if s == slot)
        planes.append(Hyperplane(form, e, gen))
    return tuple(reflections), tuple(planes), plane_of


def _element_order(m: Matrix) -> int:
    ident = mat_identity(len(m))
    k, p = 1, m
    while p != ident:
        p = mat_mul(p, m)
        k += 1
    return k


# --- construction -----------------------------------------------------------


def _enumerate(generators: Sequence[Matrix], cap: int) -> list[Matrix]:
    n = len(generators[0]) if generators else 0
    ident = mat_identity(n)
    seen = {ident: 0}
    order = [ident]
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        for g in generators:
            nxt = mat_mul(g, cur)
            if nxt not in seen:
                if len(order) >= cap:
                    raise OrderCapExceeded(
                        f"group closure exceeded the order cap of {cap}; the generators may not generate a finite group"
                    )
                seen[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
    return order


def _assemble(
    matrices: Sequence[Matrix],
    orbit_map: Sequence[Polynomial],
    degrees: Sequence[int],
    name: str,
    default_basis: Sequence[Polynomial] | None,
    check_generation: bool = True,
) -> ReflectionGroup:
    elements = tuple(GroupElement(m, i + 1) for i, m in enumerate(matrices))
    lookup = {g.matrix: g.index for g in elements}
    if len(lookup) != len(elements):
        raise UsageError("duplicate group elements")
    ident = mat_identity(len(matrices[0]))
    if elements[0].matrix != ident:
        raise UsageError("the first group element must be the identity")
    inverses = []
    for g in elements:
        inv = lookup.get(mat_inverse(g.matrix))
        if inv is None:
            raise UsageError(f"element list is not closed under inverses (g{g.index})")
        inverses.append(inv)
    reflections, planes, plane_of = classify_reflections(elements)
    if check_generation:
        sub = _enumerate([elements[i - 1].matrix for i in reflections], len(elements) + 1) if reflections else [ident]
        if len(sub) != len(elements):
            raise NotReflectionGroupError(
                f"the group of order {len(elements)} is not generated by its reflections "
                f"(they generate a subgroup of order {len(sub)})"
            )
    return ReflectionGroup(
        dimension=len(ident),
        elements=elements,
        reflections=reflections,
        hyperplanes=planes,
        orbit_map=tuple(orbit_map),
        degrees=tuple(degrees),
        name=name,
        default_basis=tuple(default_basis) if default_basis is not None else None,
        _lookup=lookup,
        _inverses=tuple(inverses),
        _reflection_planes=plane_of,
    )


def generate_closure(
    generators: Sequence[Sequence[Sequence[object]]],
    orbit_map: Sequence[Polynomial] = (),
    degrees: Sequence[int] = (),
    basis: Sequence[Polynomial] | None = None,
    name: str = "custom",
    cap: int | None = None,
) -> ReflectionGroup:
    """Close ``generators`` under multiplication (breadth-first)."""
    mats = [as_matrix(g) for g in generators]
    if not mats:
        raise UsageError("at least one generator is required")
    n = len(mats[0])
    for m in mats:
        if len(m) != n or any(len(r) != n for r in m):
            raise UsageError("generators must be square matrices of one dimension")
        mat_inverse(m)
    cap = order_cap() if cap is None else cap
    order = _enumerate(mats, cap)
    variables = source_variables(n)
    orbit = tuple(p.with_variables(variables) for p in orbit_map)
    group = _assemble(order, orbit, degrees, name, basis)
    if orbit:
        validate_orbit_map(group)
    return group


def validate_orbit_map(group: ReflectionGroup) -> None:
    from .action import is_invariant

    if len(group.orbit_map) != group.dimension or len(group.degrees) != group.dimension:
        raise UsageError(
            f"expected {group.dimension} orbit-map components and degrees, got "
            f"{len(group.orbit_map)} and {len(group.degrees)}"
        )
    for w, d in zip(group.orbit_map, group.degrees):
        parts = w.homogeneous_parts()
        if len(parts) != 1 or parts[0][0] != d:
            raise UsageError(f"orbit-map component {w} is not homogeneous of degree {d}")
        if not is_invariant(group, w):
            from .errors import NotInvariantError

            raise NotInvariantError(f"orbit-map component {w} is not invariant")
    if prod(group.degrees) != group.order:
        raise UsageError(
            f"product of degrees {group.degrees} does not equal the group order {group.order}"
        )


def _diag(a: CyclotomicNumber, b: CyclotomicNumber) -> Matrix:
    return ((a, ZERO), (ZERO, b))


@lru_cache(maxsize=None)
def product_group(r: int, s: int) -> ReflectionGroup:
    """Z_r x Z_s acting diagonally; element diag(t^i, u^j) with i running fastest.

    The default basis x^i y^j uses the same ordering (1, x, y, xy for 2x2).
    """
    if r < 1 or s < 1:
        raise UsageError("product factors must be positive")
    mats = [_diag(zeta(r, i), zeta(s, j)) for j in range(s) for i in range(r)]
    v = source_variables(2)
    x, y = (Polynomial.var(n, v) for n in v)
    basis = [x ** i * y ** j for j in range(s) for i in range(r)]
    name = f"cyclic:{s}" if r == 1 else f"product:{r}x{s}"
    return _assemble(mats, (x ** r, y ** s), (r, s), name, basis)


def cyclic_group(d: int) -> ReflectionGroup:
    if d < 1:
        raise UsageError("cyclic order must be positive")
    return product_group(1, d)


@lru_cache(maxsize=None)
def dihedral_group(order: int) -> ReflectionGroup:
    if order < 4 or order % 2:
        raise UsageError(f"dihedral order must be even and at least 4, got {order}")
    m = order // 2
    mats = [mat_identity(2), as_matrix([[0, 1], [1, 0]])]
    mats += [_diag(zeta(m, -k), zeta(m, k)) for k in range(1, m)]
    mats += [((ZERO, zeta(m, k)), (zeta(m, -k), ZERO)) for k in range(1, m)]
    v = source_variables(2)
    x, y = (Polynomial.var(n, v) for n in v)
    basis = [x ** i for i in range(m)] + [y ** k for k in range(1, m + 1)]
    return _assemble(mats, (x ** m + y ** m, x * y), (m, 2), f"dihedral:{order}", basis)


def trivial_group(n: int = 2) -> ReflectionGroup:
    v = source_variables(n)
    return _assemble(
        [mat_identity(n)], tuple(Polynomial.var(a, v) for a in v), (1,) * n, "trivial",
        [Polynomial.constant(1, v)],
    )


def builtin_family(family: str, *params: int) -> ReflectionGroup:
    family = family.lower()
    if family == "product":
        if len(params) != 2:
            raise UsageError("product needs two orders r, s")
        return product_group(*params)
    if family == "cyclic":
        if len(params) != 1:
            raise UsageError("cyclic needs one order d")
        return cyclic_group(*params)
    if family == "dihedral":
        if len(params) != 1:
            raise UsageError("dihedral needs the group order 2m")
        return dihedral_group(*params)
    if family == "trivial":
        return trivial_group(*(params or (2,)))
    raise UsageError(f"unknown group family {family!r}")
