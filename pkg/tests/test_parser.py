from __future__ import annotations

import pytest

from germforge.cyclotomic import zeta
from germforge.errors import ParseError
from germforge.parser import parse_polynomial
from germforge.polynomial import Polynomial

V = ("x", "y")


def test_examples():
    h = parse_polynomial("x^3+y^3+x*y", V)
    x, y = Polynomial.var("x", V), Polynomial.var("y", V)
    assert h == x**3 + y**3 + x * y
    assert parse_polynomial("0", V).is_zero()
    with pytest.raises(ParseError):
        parse_polynomial("x^-1", V)


def test_rationals_and_roots():
    p = parse_polynomial("1/2*x - z3^2*y + 3/4", V)
    assert p.coefficient((1, 0)) == parse_polynomial("1/2", ()).constant_term()
    assert p.coefficient((0, 1)) == -zeta(3, 2)
    assert parse_polynomial("x**2", V) == parse_polynomial("x^2", V)


def test_error_location():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x +\n  y * ) ", V)
    assert (info.value.line, info.value.column) == (2, 7)


@pytest.mark.parametrize("bad", ["x+", "(x", "x/y", "x/0", "w", "2^^3", "x^y", ""])
def test_rejects(bad):
    with pytest.raises(ParseError):
        parse_polynomial(bad, V)


def test_auto_variables():
    p = parse_polynomial("b*a + z4")
    assert p.variables == ("b", "a")
