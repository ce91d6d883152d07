"""Group action on polynomials and the operators built from it.

Elements act by (g.P)(v) = P(g^-1 v); variables outside the group's
coordinates (parameters, Z) are left fixed.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .cyclotomic import ONE, CyclotomicNumber
from .errors import InexactDivisionError
from .groups import GroupElement, Hyperplane, ReflectionGroup, is_monomial_matrix
from .matrix import PolyMatrix
from .polynomial import Polynomial, exact_divide, poly_sum


def _with_group_vars(group: ReflectionGroup, P: Polynomial) -> Polynomial:
    missing = [v for v in group.variables if v not in P.variables]
    if missing:
        return P.with_variables(P.variables + tuple(missing))
    return P


def act(group: ReflectionGroup, g: GroupElement | int, P: Polynomial) -> Polynomial:
    if isinstance(g, int):
        g = group.element(g)
    if g.index == 1:
        return P
    P = _with_group_vars(group, P)
    ginv = group.inverse(g).matrix
    pos = [P.variables.index(v) for v in group.variables]
    if is_monomial_matrix(ginv):
        # x_i -> c_i * x_sigma(i)
        images = []
        for row in ginv:
            j = next(k for k, e in enumerate(row) if e)
            images.append((pos[j], row[j]))
        out = {}
        for mono, coef in P.terms.items():
            new = list(mono)
            for i in pos:
                new[i] = 0
            c = coef
            for (i, (j, scale)) in zip(pos, images):
                e = mono[i]
                if e:
                    new[j] += e
                    if scale != ONE:
                        c = c * scale ** e
            out[tuple(new)] = c
        return Polynomial(P.variables, out)
    bindings = {}
    for v, row in zip(group.variables, ginv):
        bindings[v] = Polynomial(
            P.variables,
            {tuple(1 if k == pos[j] else 0 for k in range(len(P.variables))): e for j, e in enumerate(row) if e},
        )
    return P.substitute(bindings, P.variables)


def orbit_functions(group: ReflectionGroup, h: Polynomial) -> list[Polynomial]:
    """[g_1.h, ..., g_d.h] in element-id order."""
    return [act(group, g, h) for g in group.elements]


def reynolds(group: ReflectionGroup, P: Polynomial) -> Polynomial:
    total = poly_sum(orbit_functions(group, P))
    return total.scale(CyclotomicNumber.rational(1) / group.order)


def demazure(
    group: ReflectionGroup, g: GroupElement | int, P: Polynomial, H: Hyperplane | None = None
) -> Polynomial:
    """(P - g.P) / L_H with the normalized hyperplane form."""
    if isinstance(g, int):
        g = group.element(g)
    if H is None:
        H = group.hyperplane_of(g)
    P = _with_group_vars(group, P)
    diff = P - act(group, g, P)
    return exact_divide(diff, H.form.with_variables(P.variables))


def is_invariant(group: ReflectionGroup, P: Polynomial) -> bool:
    # a reflection group is generated by its reflections
    gens = group.reflections or tuple(g.index for g in group.elements[1:])
    P = _with_group_vars(group, P)
    return all(act(group, i, P) == P for i in gens)


def jacobian_matrix(polys: Sequence[Polynomial], variables: Sequence[str]) -> PolyMatrix:
    return PolyMatrix([[p.derivative(v) for v in variables] for p in polys])


class JacobianCheck(NamedTuple):
    constant: CyclotomicNumber | None
    ok: bool
    determinant: Polynomial


def jacobian_factorization_check(group: ReflectionGroup) -> JacobianCheck:
    """det(jac w) divided by the product of L_H^(e_H - 1)."""
    variables = group.variables
    orbit = [w.with_variables(variables) for w in group.orbit_map]
    det = jacobian_matrix(orbit, variables).determinant()
    residual = det
    try:
        for H in group.hyperplanes:
            residual = exact_divide(residual, H.form ** (H.stabilizer_order - 1))
    except InexactDivisionError:
        return JacobianCheck(None, False, det)
    if residual.is_constant() and residual:
        return JacobianCheck(residual.constant_term(), True, det)
    return JacobianCheck(None, False, det)
