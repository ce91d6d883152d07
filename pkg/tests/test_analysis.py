from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from germforge.analysis import (
    crosscap_count,
    find_weights,
    multiplicity_at_origin,
    multiplicity_bounds,
    multiplicity_report,
    quasihomogeneous_type,
    verify_quasihomogeneous,
)
from germforge.cli import parse_group_spec
from germforge.errors import InvalidGermError, UsageError
from germforge.germ import make_germ
from germforge.image import image_equation
from germforge.parser import parse_polynomial

from helpers import FAMILIES


def germ(spec, h, params=()):
    g = parse_group_spec(spec)
    return make_germ(g, parse_polynomial(h, g.variables + tuple(params)), params=params)


def test_multiplicity_double_fold():
    gm = germ("product:2x2", "x^3+y^3+x*y")
    rep = multiplicity_report(image_equation(gm).F, gm.group)
    assert (rep.multiplicity, rep.lower_bound, rep.upper_bound) == (4, 2, 4)
    assert rep.consistent


def test_bounds():
    assert multiplicity_bounds(parse_group_spec("dihedral:6")) == (2, 6)
    assert multiplicity_bounds(parse_group_spec("product:2x2")) == (2, 4)
    assert multiplicity_bounds(parse_group_spec("cyclic:4")) == (1, 4)
    assert multiplicity_bounds(parse_group_spec("dihedral:6"), "reflection-map") == (2, 3)
    with pytest.raises(UsageError):
        multiplicity_bounds(parse_group_spec("cyclic:4"), "bogus")


def test_multiplicity_errors():
    v = ("X", "Y", "Z")
    with pytest.raises(InvalidGermError):
        multiplicity_at_origin(parse_polynomial("0", v))
    with pytest.raises(InvalidGermError):
        multiplicity_at_origin(parse_polynomial("1+Z", v))
    assert multiplicity_at_origin(parse_polynomial("Z^2-X^3", v)) == 2


@pytest.mark.parametrize("spec", FAMILIES)
def test_multiplicity_within_bounds(spec):
    g = parse_group_spec(spec)
    for h in ["x^2*y+y^3", "x^5+y^4", "x*y+y^5"]:
        gm = make_germ(g, parse_polynomial(h, g.variables))
        assert multiplicity_report(image_equation(gm).F, g).consistent


def test_quasihomogeneous_type():
    gm = germ("cyclic:4", "y^6+x*y")
    qt = quasihomogeneous_type(gm)
    assert qt.found and qt.weights == (5, 1) and qt.coordinate_degrees == (5, 4, 6)
    assert str(qt) == "(5, 4, 6; 5, 1)"
    coords = list(gm.group.orbit_map) + [gm.h]
    assert verify_quasihomogeneous(coords, qt, gm.group.variables)
    assert not quasihomogeneous_type(germ("product:2x2", "x^3+y^2*x+y^5")).found
    with pytest.raises(UsageError):
        quasihomogeneous_type(germ("cyclic:4", "y*p1", ("p1",)))


def test_find_weights_homogeneous():
    v = ("x", "y")
    assert find_weights([parse_polynomial("x^2+y^2", v), parse_polynomial("x*y", v)], v) == (1, 1)
    assert find_weights([parse_polynomial("x^3+y^2", v)], v) == (2, 3)


@given(st.integers(2, 60), st.integers(1, 60))
def test_crosscap_never_integral(s, k):
    c = crosscap_count(s, k)
    assert isinstance(c, Fraction) and c.denominator == 2


def test_crosscap_values_and_domain():
    assert crosscap_count(2, 1) == Fraction(3, 2)
    assert crosscap_count(3, 2) == Fraction(15, 2)
    with pytest.raises(ValueError):
        crosscap_count(1, 3)
    with pytest.raises(ValueError):
        crosscap_count(3, 0)
