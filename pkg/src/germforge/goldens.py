"""Frozen reference values and the self-check suite built on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cyclotomic import CyclotomicNumber
from .polynomial import Polynomial

# Image of (x^2, y^2, x^3 + y^3 + x*y)
EQ1 = (
    "X^2*Y^2 - 2*X*Y*Z^2 + Z^4 - 2*X^4*Y - 2*X*Y^4 - 8*X^2*Y^2*Z"
    " - 2*X^3*Z^2 - 2*Y^3*Z^2 + X^6 - 2*X^3*Y^3 + Y^6"
)

INTRO_MATRIX = [
    ["-Z", "X", "Y", "1"],
    ["X^2", "-Z", "X", "Y"],
    ["Y^2", "Y", "-Z", "X"],
    ["X*Y", "Y^2", "X^2", "-Z"],
]

DOUBLE_FOLD_LAMBDA = [
    ["-Z", "p1", "p2", "p3"],
    ["X*p1", "-Z", "X*p3", "p2"],
    ["Y*p2", "Y*p3", "-Z", "p1"],
    ["X*Y*p3", "Y*p2", "X*p1", "-Z"],
]

Z4_LAMBDA = [
    ["-Z", "p1", "p2", "p3"],
    ["Y*p3", "-Z", "p1", "p2"],
    ["Y*p2", "Y*p3", "-Z", "p1"],
    ["Y*p1", "Y*p2", "Y*p3", "-Z"],
]

D6_LAMBDA = [
    ["-Z", "p1", "p2", "p3", "p4", "p5"],
    ["p2*X+p3*Y", "-Z", "p1", "p4*Y", "p5*Y", "-p2"],
    ["p1*X+p4*Y^2", "p2*X+p3*Y", "-Z", "p5*Y^2", "-p2*Y", "-p1"],
    ["p1*Y", "p2*Y", "-p5*Y", "p5*X-Z", "p3", "p4"],
    ["p2*Y^2", "-p5*Y^2", "-p4*Y", "p4*X+p1*Y", "p5*X-Z", "p3"],
    ["-p5*Y^3", "-p4*Y^2", "-p3*Y", "p3*X+p2*Y^2", "p4*X+p1*Y", "p5*X-Z"],
]

DOUBLE_FOLD_DET_E = "16*x^2*y^2"
D6_DET_E = "27*(x^3-y^3)^3"

# Z1 x Z4 with h = y*p1 + y^2*p2 + y^3*p3.  Every term of q2 carries y^4,
# so Q2 has a Y in both terms.
Z4_Q = {
    2: "-4*Y*p1*p3 - 2*Y*p2^2",
    1: "4*Y*p1^2*p2 + 4*Y^2*p2*p3^2",
    0: "Y^2*(p2^4 - 4*p1*p2^2*p3 + 2*p1^2*p3^2) - Y^3*p3^4 - Y*p1^4",
}

D6_Q = {
    5: "3*X*p5",
    4: "-6*Y*p1*p3 - 3*X*p1*p2 - 3*X*p3*p4 - 6*Y^2*p2*p4 + 3*X^2*p5^2 + 3*Y^3*p5^2",
}

DOUBLE_FOLD_DOUBLE_POINTS = "(y*p3+p1)*(x*p3+p2)*(x*p1+y*p2)"
D6_F1 = "-p1+p3-p2*x+p4*x-p2*y+p4*y+p5*x^2+p5*x*y+p5*y^2"
REGULAR_EXAMPLE_H = "x-3*y+y^3"

Z4_PARAMS = ("p1", "p2", "p3")
D6_PARAMS = ("p1", "p2", "p3", "p4", "p5")


def poly(text: str, variables) -> Polynomial:
    from .parser import parse_polynomial

    return parse_polynomial(text, variables)


def matrix_from_strings(rows, variables):
    from .matrix import PolyMatrix

    return PolyMatrix([[poly(e, variables) for e in r] for r in rows], variables)


def equal_up_to_constant(a: Polynomial, b: Polynomial) -> bool:
    """a == c*b for some nonzero constant c."""
    if not a or not b:
        return not a and not b
    c: CyclotomicNumber = a.leading_coefficient() / b.leading_coefficient()
    return a == b.scale(c)


# --- self-check cases ---------------------------------------------------------


@dataclass(frozen=True)
class GoldenCase:
    name: str
    run: Callable[[], tuple[bool, str]]


def _germ(spec: str, h: str, params=(), specialize=None):
    from .cli import parse_group_spec
    from .germ import make_germ

    g = parse_group_spec(spec)
    src = g.variables + tuple(params)
    spec_polys = None
    if specialize:
        spec_polys = {k: poly(v, g.target_variables + tuple(p for p in params if p not in specialize))
                      for k, v in specialize.items()}
    return make_germ(g, poly(h, src), params=params, specialize=spec_polys)


def _image_eq1():
    from .image import image_equation

    germ = _germ("product:2x2", "x^3+y^3+x*y")
    F = image_equation(germ).F
    ok = F == poly(EQ1, ("X", "Y", "Z"))
    return ok, str(F)


def _intro_matrix():
    from .presentation import presentation_matrix

    germ = _germ("product:2x2", "x*p1+y*p2+x*y*p3", ("p1", "p2", "p3"), {"p1": "X", "p2": "Y", "p3": "1"})
    lam = presentation_matrix(germ).lambda_
    expected = matrix_from_strings(INTRO_MATRIX, lam.variables)
    det_ok = lam.determinant() == poly(EQ1, ("X", "Y", "Z"))
    return lam == expected and det_ok, str(lam)


def _symbolic_lambda(spec, h, params, rows):
    from .presentation import presentation_matrix, presentation_via_alpha

    def run():
        germ = _germ(spec, h, params)
        lam = presentation_matrix(germ).lambda_
        expected = matrix_from_strings(rows, lam.variables)
        return lam == expected and presentation_via_alpha(germ) == lam, str(lam)

    return run


def _det_e(spec, expected):
    from .presentation import eigen_determinant_check

    def run():
        g = _germ(spec, "0")
        chk = eigen_determinant_check(g)
        return chk.ok and chk.det == poly(expected, ("x", "y")), str(chk.det)

    return run


def _det_e_formula_all():
    from .presentation import eigen_determinant_check

    specs = ["product:2x2", "product:3x2", "product:2x3", "cyclic:2", "cyclic:3", "cyclic:4",
             "dihedral:4", "dihedral:6", "dihedral:8"]
    bad = [s for s in specs if not eigen_determinant_check(_germ(s, "0")).ok]
    return not bad, "all residuals constant" if not bad else f"failed: {bad}"


def _coefficients(spec, h, params, table):
    from .image import image_equation

    def run():
        germ = _germ(spec, h, params)
        eq = image_equation(germ)
        wrong = [k for k, v in table.items() if eq.Q(k) != poly(v, eq.Q(k).variables)]
        return not wrong, "ok" if not wrong else f"mismatched Q{wrong}"

    return run


def _double_fold_points():
    from .double_point import double_point_equation

    germ = _germ("product:2x2", "x*p1+y*p2+x*y*p3", ("p1", "p2", "p3"))
    dp = double_point_equation(germ)
    ok = equal_up_to_constant(dp.equation, poly(DOUBLE_FOLD_DOUBLE_POINTS, dp.equation.variables))
    return ok, str(dp.equation)


def _d6_f1():
    from .double_point import double_point_equation

    germ = _germ("dihedral:6", "x*p1+x^2*p2+y*p3+y^2*p4+y^3*p5", D6_PARAMS)
    dp = double_point_equation(germ)
    f1 = poly(D6_F1, dp.equation.variables)
    ok = any(equal_up_to_constant(f, f1) for f in dp.reflection_factors)
    return ok, str(dp.reflection_factors[0])


def _regular_case():
    from .double_point import double_point_regular_case

    germ = _germ("product:2x2", REGULAR_EXAMPLE_H)
    dp = double_point_regular_case(germ)
    ok = dp is not None and equal_up_to_constant(dp.equation, poly(REGULAR_EXAMPLE_H, ("x", "y")))
    return ok, str(dp.equation) if dp else "not applicable"


def _multiplicity():
    from .analysis import multiplicity_bounds, multiplicity_report
    from .cli import parse_group_spec

    rep = multiplicity_report(poly(EQ1, ("X", "Y", "Z")), parse_group_spec("product:2x2"))
    d6 = multiplicity_bounds(parse_group_spec("dihedral:6"))
    ok = (rep.multiplicity, rep.lower_bound, rep.upper_bound) == (4, 2, 4) and d6 == (2, 6)
    return ok, f"m={rep.multiplicity} bounds=({rep.lower_bound},{rep.upper_bound}) dihedral:6 bounds={d6}"


def _crosscap():
    from .analysis import crosscap_count, quasihomogeneous_type

    never_int = all(crosscap_count(s, k).denominator != 1 for s in range(2, 11) for k in range(1, 11))
    qt = quasihomogeneous_type(_germ("cyclic:4", "y^6+x*y"))
    ok = never_int and qt.found and qt.weights == (5, 1) and qt.coordinate_degrees == (5, 4, 6)
    return ok, f"type {qt}"


CASES: list[GoldenCase] = [
    GoldenCase("image/double-fold", _image_eq1),
    GoldenCase("presentation/double-fold-specialized", _intro_matrix),
    GoldenCase("presentation/double-fold-symbolic",
               _symbolic_lambda("product:2x2", "x*p1+y*p2+x*y*p3", ("p1", "p2", "p3"), DOUBLE_FOLD_LAMBDA)),
    GoldenCase("presentation/cyclic4-symbolic",
               _symbolic_lambda("cyclic:4", "y*p1+y^2*p2+y^3*p3", Z4_PARAMS, Z4_LAMBDA)),
    GoldenCase("presentation/dihedral6-symbolic",
               _symbolic_lambda("dihedral:6", "x*p1+x^2*p2+y*p3+y^2*p4+y^3*p5", D6_PARAMS, D6_LAMBDA)),
    GoldenCase("eigen-det/double-fold", _det_e("product:2x2", DOUBLE_FOLD_DET_E)),
    GoldenCase("eigen-det/dihedral6", _det_e("dihedral:6", D6_DET_E)),
    GoldenCase("eigen-det/hyperplane-formula", _det_e_formula_all),
    GoldenCase("image-coefficients/cyclic4",
               _coefficients("cyclic:4", "y*p1+y^2*p2+y^3*p3", Z4_PARAMS, Z4_Q)),
    GoldenCase("image-coefficients/dihedral6",
               _coefficients("dihedral:6", "x*p1+x^2*p2+y*p3+y^2*p4+y^3*p5", D6_PARAMS, D6_Q)),
    GoldenCase("double-points/double-fold", _double_fold_points),
    GoldenCase("double-points/dihedral6-f1", _d6_f1),
    GoldenCase("double-points/regular-shortcut", _regular_case),
    GoldenCase("multiplicity/bounds", _multiplicity),
    GoldenCase("analysis/crosscap-and-weights", _crosscap),
]


def run_selfcheck() -> list[tuple[str, bool, str]]:
    out = []
    for case in CASES:
        try:
            ok, detail = case.run()
        except Exception as exc:  # a crash is a failed case, reported with its message
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((case.name, ok, detail))
    return out
