from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from germforge.action import is_invariant, reynolds
from germforge.cli import parse_group_spec
from germforge.germ import make_germ
from germforge.image import image_equation, verify_pullback_factorization
from germforge.parser import parse_polynomial
from germforge.polynomial import Polynomial
from germforge.presentation import presentation_matrix, presentation_via_alpha, verify_det_equals_image
from germforge.rewrite import pull_back, rewrite_invariant

from helpers import FAMILIES

coefficients = st.builds(Fraction, st.integers(-5, 5).filter(bool), st.integers(1, 3))


@st.composite
def germs(draw, families=tuple(FAMILIES), max_degree=4):
    g = parse_group_spec(draw(st.sampled_from(families)))
    monos = [(a, d - a) for d in range(1, max_degree + 1) for a in range(d + 1)]
    picked = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=4, unique=True))
    h = Polynomial(g.variables, {m: draw(coefficients) for m in picked})
    return make_germ(g, h)


@settings(max_examples=25)
@given(germs())
def test_image_pullback(gm):
    assert verify_pullback_factorization(image_equation(gm), gm)


@settings(max_examples=15)
@given(germs(families=("product:2x2", "cyclic:3", "cyclic:4", "dihedral:4", "dihedral:6")))
def test_presentation_routes_agree(gm):
    res = presentation_matrix(gm)
    assert res.lambda_ == presentation_via_alpha(gm)
    assert verify_det_equals_image(res, image_equation(gm))


@given(germs())
def test_serialized_equation_round_trips(gm):
    F = image_equation(gm).F
    assert parse_polynomial(str(F), F.variables) == F


@given(germs())
def test_rewrite_inverts_pullback(gm):
    g = gm.group
    q = reynolds(g, gm.h * gm.h)
    assert is_invariant(g, q)
    assert pull_back(rewrite_invariant(q, g).polynomial, g, g.variables) == q


@given(germs(), st.integers(2, 5))
def test_scaling_h_scales_coefficients(gm, c):
    # Q_j is homogeneous of degree d - j in the coefficients of h
    scaled = make_germ(gm.group, gm.h.scale(c))
    a, b = image_equation(gm), image_equation(scaled)
    d = gm.order
    for j in range(d):
        assert b.Q(j) == a.Q(j).scale(Fraction(c) ** (d - j))
