from __future__ import annotations

import random

import pytest

from germforge.action import act, demazure, is_invariant, jacobian_factorization_check, orbit_functions, reynolds
from germforge.cli import parse_group_spec
from germforge.cyclotomic import zeta
from germforge.groups import builtin_family
from germforge.parser import parse_polynomial
from germforge.polynomial import Polynomial, exact_divide

from helpers import FAMILIES, random_h

D6V = ("x", "y", "p1", "p2", "p3", "p4", "p5")
D6H = "x*p1+x^2*p2+y*p3+y^2*p4+y^3*p5"


def test_swap_and_identity():
    d = builtin_family("dihedral", 6)
    h = parse_polynomial(D6H, D6V)
    assert act(d, 2, h) == parse_polynomial("y*p1+y^2*p2+x*p3+x^2*p4+x^3*p5", D6V)
    assert act(d, 1, h) == h


def test_cyclic4_sign_element():
    c = builtin_family("cyclic", 4)
    v = ("x", "y", "p1", "p2", "p3")
    h = parse_polynomial("y*p1+y^2*p2+y^3*p3", v)
    minus = next(e for e in c.elements if e.matrix[1][1] == -1)
    assert act(c, minus, h) == parse_polynomial("-y*p1+y^2*p2-y^3*p3", v)


def test_orbit_functions():
    p = builtin_family("product", 2, 2)
    v = ("x", "y", "p1", "p2", "p3")
    hs = orbit_functions(p, parse_polynomial("x*p1+y*p2+x*y*p3", v))
    expected = ["x*p1+y*p2+x*y*p3", "-x*p1+y*p2-x*y*p3", "x*p1-y*p2-x*y*p3", "-x*p1-y*p2+x*y*p3"]
    assert hs == [parse_polynomial(e, v) for e in expected]
    assert all(h.is_zero() for h in orbit_functions(p, Polynomial.zero(v)))
    d = builtin_family("dihedral", 6)
    h3 = orbit_functions(d, parse_polynomial(D6H, D6V))[2]
    assert h3 == parse_polynomial("z3*x*p1+z3^2*x^2*p2+z3^2*y*p3+z3*y^2*p4+y^3*p5", D6V)


def test_reynolds_examples():
    p = builtin_family("product", 2, 2)
    v = ("x", "y")
    assert reynolds(p, parse_polynomial("x", v)).is_zero()
    assert reynolds(p, parse_polynomial("x^2", v)) == parse_polynomial("x^2", v)
    d = builtin_family("dihedral", 6)
    assert reynolds(d, parse_polynomial("x^3", v)) == parse_polynomial("(x^3+y^3)/2", v)


def test_demazure_examples():
    d = builtin_family("dihedral", 6)
    v = ("x", "y")
    assert demazure(d, 2, parse_polynomial("x^3", v)) == parse_polynomial("x^2+x*y+y^2", v)
    assert demazure(d, 2, parse_polynomial("x*y", v)).is_zero()
    f1 = parse_polynomial("-p1+p3-p2*x+p4*x-p2*y+p4*y+p5*x^2+p5*x*y+p5*y^2", D6V)
    assert demazure(d, 2, parse_polynomial(D6H, D6V)) == -f1


def test_invariance_examples():
    p = builtin_family("product", 2, 2)
    v = ("x", "y")
    assert is_invariant(p, parse_polynomial("x^2*y^2", v))
    assert not is_invariant(p, parse_polynomial("x*y", v))
    d = builtin_family("dihedral", 6)
    assert is_invariant(d, parse_polynomial("3*p5*(x^3+y^3)", ("x", "y", "p5")))


def test_jacobian_examples():
    chk = jacobian_factorization_check(builtin_family("product", 2, 2))
    assert chk.ok and chk.constant == 4 and chk.determinant == parse_polynomial("4*x*y", ("x", "y"))
    chk = jacobian_factorization_check(builtin_family("dihedral", 6))
    assert chk.ok and chk.constant == 3
    chk = jacobian_factorization_check(builtin_family("cyclic", 4))
    assert chk.ok and chk.determinant == parse_polynomial("4*y^3", ("x", "y"))


@pytest.mark.parametrize("spec", FAMILIES)
def test_action_laws(spec):
    g = parse_group_spec(spec)
    rng = random.Random(spec)
    v = g.variables
    for _ in range(3):
        P, Q = random_h(rng, v), random_h(rng, v)
        a, b = rng.choice(g.elements), rng.choice(g.elements)
        assert act(g, a, P * Q) == act(g, a, P) * act(g, a, Q)
        assert act(g, g.multiply(a, b), P) == act(g, a, act(g, b, P))
        assert act(g, a, P).degree() == P.degree()
        R = reynolds(g, P)
        assert is_invariant(g, R) and reynolds(g, R) == R
        inv = reynolds(g, Q * Q)
        assert reynolds(g, inv * P) == inv * R
        for i in g.reflections:
            H = g.hyperplane_of(i)
            assert P - act(g, i, P) == H.form * demazure(g, i, P)
