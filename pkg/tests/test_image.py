from __future__ import annotations

import random

import pytest

from germforge.cli import parse_group_spec
from germforge.errors import InvalidGermError, UsageError
from germforge.germ import make_germ
from germforge.image import elementary_symmetric_orbit, image_equation, verify_pullback_factorization
from germforge.parser import parse_polynomial
from germforge.rewrite import pull_back

from helpers import FAMILIES, random_germ, random_point

FOLD = (
    "X^2*Y^2 - 2*X*Y*Z^2 + Z^4 - 2*X^4*Y - 2*X*Y^4 - 8*X^2*Y^2*Z"
    " - 2*X^3*Z^2 - 2*Y^3*Z^2 + X^6 - 2*X^3*Y^3 + Y^6"
)


def germ(spec, h, params=()):
    g = parse_group_spec(spec)
    return make_germ(g, parse_polynomial(h, g.variables + tuple(params)), params=params)


def test_double_fold_image():
    eq = image_equation(germ("product:2x2", "x^3+y^3+x*y"))
    assert eq.F == parse_polynomial(FOLD, ("X", "Y", "Z"))
    assert str(eq.F).startswith("X^2*Y^2 - 2*X*Y*Z^2 + Z^4")
    assert eq.degree == 4


def test_cyclic2_fold():
    eq = image_equation(germ("cyclic:2", "y^3+x*y"))
    assert eq.F == parse_polynomial("Z^2 - Y^3 - 2*X*Y^2 - X^2*Y", ("X", "Y", "Z"))


def test_linear_germ_is_smooth_image():
    eq = image_equation(germ("cyclic:3", "y"))
    assert eq.F == parse_polynomial("Z^3 - Y", ("X", "Y", "Z"))


def test_symbolic_cyclic4_coefficients():
    eq = image_equation(germ("cyclic:4", "y*p1+y^2*p2+y^3*p3", ("p1", "p2", "p3")))
    v = ("X", "Y", "p1", "p2", "p3")
    assert eq.Q(3).is_zero()
    assert eq.Q(2) == parse_polynomial("-4*Y*p1*p3 - 2*Y*p2^2", v)
    assert eq.Q(1) == parse_polynomial("4*Y*p1^2*p2 + 4*Y^2*p2*p3^2", v)


def test_rejects_bad_germs():
    g = parse_group_spec("product:2x2")
    with pytest.raises(InvalidGermError):
        make_germ(g, parse_polynomial("1+x", g.variables))
    with pytest.raises(InvalidGermError):
        make_germ(g, parse_polynomial("x", g.variables), basis=[parse_polynomial(s, g.variables) for s in ["1", "x", "y"]])
    with pytest.raises(InvalidGermError):
        make_germ(g, parse_polynomial("x", g.variables),
                  basis=[parse_polynomial(s, g.variables) for s in ["1", "x", "x", "x*y"]])
    with pytest.raises(UsageError):
        make_germ(g, parse_polynomial("x*Z", g.variables + ("Z",)), params=("Z",))


@pytest.mark.parametrize("spec", FAMILIES)
def test_image_properties(spec):
    rng = random.Random(f"image-{spec}")
    for _ in range(2):
        gm = random_germ(rng, spec)
        eq = image_equation(gm)
        g = gm.group
        assert eq.F.degree_in("Z") == g.order
        assert verify_pullback_factorization(eq, gm)
        # F vanishes on the image of sample points
        pt = random_point(rng)
        vals = dict(zip(g.variables, pt))
        image = {X: w.evaluate(vals) for X, w in zip(g.target_variables, g.orbit_map)}
        image["Z"] = gm.h.evaluate(vals)
        assert eq.F.evaluate(image) == 0
        qs = elementary_symmetric_orbit(g, gm.h)
        for Q, q in zip(eq.coefficients, qs):
            assert pull_back(Q.polynomial, g, g.variables) == q
