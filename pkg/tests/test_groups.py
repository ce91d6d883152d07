from __future__ import annotations

import random
from math import prod

import pytest

from germforge.action import act, is_invariant
from germforge.cyclotomic import zeta
from germforge.errors import NotReflectionGroupError, OrderCapExceeded, UsageError
from germforge.groups import (
    _enumerate,
    builtin_family,
    degrees_of,
    generate_closure,
    mat_identity,
    mat_mul,
)
from germforge.parser import parse_polynomial
from germforge.polynomial import Polynomial

from helpers import FAMILIES, random_point
from germforge.cli import parse_group_spec


def forms(g):
    return [str(H.form) for H in g.hyperplanes]


def test_dihedral6_from_generators():
    R = [[0, 1], [1, 0]]
    S = [[0, zeta(3, 1)], [zeta(3, 2), 0]]
    g = generate_closure([R, S])
    assert g.order == 6 and len(g.reflections) == 3


def test_cyclic_from_single_reflection():
    assert generate_closure([[[1, 0], [0, zeta(5, 1)]]]).order == 5


def test_non_reflection_generated_rejected():
    with pytest.raises(NotReflectionGroupError):
        generate_closure([[[zeta(3, 1), 0], [0, zeta(3, 2)]]])
    with pytest.raises(NotReflectionGroupError):
        generate_closure([[[zeta(4, 1), 0], [0, zeta(4, 1)]]])


def test_order_cap(monkeypatch):
    monkeypatch.setenv("GERMFORGE_ORDER_CAP", "5")
    with pytest.raises(OrderCapExceeded):
        generate_closure([[[1, 0], [0, zeta(7, 1)]]])
    # an element of infinite order hits the cap instead of looping
    with pytest.raises(OrderCapExceeded):
        generate_closure([[[1, 1], [0, 1]]], cap=50)


def test_builtin_families():
    g = builtin_family("product", 2, 2)
    assert g.order == 4 and g.degrees == (2, 2)
    assert [str(w) for w in g.orbit_map] == ["x^2", "y^2"]
    d = builtin_family("dihedral", 6)
    assert d.order == 6 and d.degrees == (3, 2)
    assert [str(w) for w in d.orbit_map] == ["x^3 + y^3", "x*y"]
    c = builtin_family("cyclic", 4)
    assert c.order == 4 and [str(w) for w in c.orbit_map] == ["x", "y^4"]
    with pytest.raises(UsageError):
        builtin_family("icosahedral", 120)
    with pytest.raises(UsageError):
        parse_group_spec("dihedral:5")


def test_classification():
    d = builtin_family("dihedral", 6)
    assert d.reflections == (2, 5, 6)
    assert forms(d) == ["x - y", "x - z3*y", "x + (1 + z3)*y"]  # x - zeta^2 y
    assert all(H.stabilizer_order == 2 for H in d.hyperplanes)
    p = builtin_family("product", 2, 2)
    assert forms(p) == ["x", "y"] and [H.stabilizer_order for H in p.hyperplanes] == [2, 2]
    assert builtin_family("trivial").reflections == ()
    c = builtin_family("cyclic", 4)
    assert forms(c) == ["y"] and c.hyperplanes[0].stabilizer_order == 4


def test_degrees_of():
    assert degrees_of(builtin_family("dihedral", 6), True) == (1, 2, 3)
    assert degrees_of(builtin_family("product", 2, 2), True) == (1, 2, 2)
    assert degrees_of(builtin_family("cyclic", 4), False) == (1, 4)


@pytest.mark.parametrize("spec", FAMILIES)
def test_closure_and_invariants(spec):
    g = parse_group_spec(spec)
    mats = {e.matrix for e in g.elements}
    for a in g.elements:
        assert g.multiply(a, g.inverse(a)).index == 1
        for b in g.elements:
            assert mat_mul(a.matrix, b.matrix) in mats
    assert g.elements[0].matrix == mat_identity(2)
    assert prod(g.degrees) == g.order
    for w, d in zip(g.orbit_map, g.degrees):
        assert is_invariant(g, w) and w.is_homogeneous() and w.degree() == d
    # generated by its reflections
    refl = [g.element(i).matrix for i in g.reflections]
    assert len(_enumerate(refl, 10_000)) == g.order


@pytest.mark.parametrize("spec", FAMILIES)
def test_noether_orbit_constancy(spec):
    g = parse_group_spec(spec)
    rng = random.Random(spec)
    v = g.variables
    for _ in range(20):
        pt = random_point(rng)
        orbit = set()
        values = set()
        for el in g.elements:
            image = tuple(sum(a * c for a, c in zip(row, pt)) for row in el.matrix)
            orbit.add(image)
            values.add(tuple(w.evaluate(dict(zip(v, image))) for w in g.orbit_map))
        assert len(values) == 1
        assert g.order % len(orbit) == 0


def test_user_group_validation():
    R = [[0, 1], [1, 0]]
    v = ("x", "y")
    w = [parse_polynomial("x+y", v), parse_polynomial("x*y", v)]
    g = generate_closure([R], w, [1, 2])
    assert g.order == 2
    with pytest.raises(Exception):
        generate_closure([R], [parse_polynomial("x", v), parse_polynomial("x*y", v)], [1, 2])
    with pytest.raises(UsageError):
        generate_closure([R], w, [1, 3])
