"""Presentation matrix of f_* O via the eigen-matrix E = (g_j . r_i)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .action import act, is_invariant
from .cyclotomic import CyclotomicNumber
from .errors import InexactDivisionError, NotInvariantError
from .germ import ReflectedGraphGerm
from .image import Z, ImageEquation
from .matrix import PolyMatrix
from .polynomial import Polynomial, exact_divide
from .rewrite import alpha_matrix, rewrite_invariant


@dataclass(frozen=True)
class PresentationResult:
    lambda_: PolyMatrix
    eigen_matrix_det: Polynomial
    det_formula_constant: CyclotomicNumber | None


@dataclass(frozen=True)
class EigenDeterminantCheck:
    det: Polynomial
    constant: CyclotomicNumber | None
    ok: bool


def eigen_matrix(germ: ReflectedGraphGerm) -> tuple[PolyMatrix, PolyMatrix]:
    """E with E[i, j] = g_j . r_i and A_Z = diag(g_k . h - Z)."""
    g = germ.group
    variables = germ.source_variables + (Z,)
    E = germ.eigen_matrix().with_variables(variables)
    zpoly = Polynomial.var(Z, variables)
    h = germ.h.with_variables(variables)
    diag = [act(g, el, h) - zpoly for el in g.elements]
    return E, PolyMatrix.diagonal(diag, variables)


def eigen_adjugate(germ: ReflectedGraphGerm) -> PolyMatrix:
    key = ("adjE", tuple(str(r) for r in germ.basis))
    cache = germ.group.cache
    if key not in cache:
        cache[key] = germ.eigen_matrix().adjugate()
    return cache[key]


def eigen_determinant_check(germ: ReflectedGraphGerm) -> EigenDeterminantCheck:
    """det(E) divided by prod L_H^(|G|(e_H - 1)/2)."""
    det = germ.eigen_determinant()
    residual = det
    d = germ.order
    try:
        for H in germ.group.hyperplanes:
            e = Fraction(d * (H.stabilizer_order - 1), 2)
            if e.denominator != 1:
                return EigenDeterminantCheck(det, None, False)
            residual = exact_divide(residual, H.form ** int(e))
    except InexactDivisionError:
        return EigenDeterminantCheck(det, None, False)
    if residual and residual.is_constant():
        return EigenDeterminantCheck(det, residual.constant_term(), True)
    return EigenDeterminantCheck(det, None, False)


def presentation_matrix(germ: ReflectedGraphGerm) -> PresentationResult:
    """lambda = w_*(E . A_Z . Adj(E) / det E), entries rewritten in X."""
    g = germ.group
    variables = germ.source_variables + (Z,)
    E, A = eigen_matrix(germ)
    adj = eigen_adjugate(germ).with_variables(variables)
    det = germ.eigen_determinant().with_variables(variables)
    product = E * A * adj
    target = germ.target_variables + (Z,)
    rows = []
    for i in range(product.rows):
        row = []
        for j in range(product.cols):
            entry = product[i, j]
            try:
                q = exact_divide(entry, det)
            except InexactDivisionError as exc:
                raise InexactDivisionError(
                    f"entry ({i + 1}, {j + 1}) of E*A_Z*Adj(E) is not divisible by det(E)", exc.remainder
                ) from None
            if not is_invariant(g, q):
                raise NotInvariantError(f"entry ({i + 1}, {j + 1}) of the presentation matrix is not invariant: {q}")
            row.append(rewrite_invariant(q, g).polynomial.with_variables(target))
        rows.append(row)
    check = eigen_determinant_check(germ)
    return PresentationResult(PolyMatrix(rows, target), germ.eigen_determinant(), check.constant)


def presentation_via_alpha(germ: ReflectedGraphGerm) -> PolyMatrix:
    """alpha(X) - Z*Id from the module relation r_i h = sum alpha_ij(w) r_j."""
    target = germ.target_variables + (Z,)
    alpha = alpha_matrix(germ.group, germ.basis, germ.h.with_variables(germ.source_variables))
    alpha = alpha.with_variables(target)
    zpoly = Polynomial.var(Z, target)
    return PolyMatrix(
        [[alpha[i, j] - zpoly if i == j else alpha[i, j] for j in range(alpha.cols)] for i in range(alpha.rows)],
        target,
    )


def verify_det_equals_image(pres: PresentationResult | PolyMatrix, eq: ImageEquation) -> bool:
    lam = pres.lambda_ if isinstance(pres, PresentationResult) else pres
    det = lam.determinant()
    sign = -1 if lam.rows % 2 else 1
    return det == eq.F.scale(sign)
