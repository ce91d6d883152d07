from __future__ import annotations

import random

import pytest

from germforge.action import reynolds
from germforge.cli import parse_group_spec
from germforge.errors import NoSolutionError
from germforge.groups import builtin_family
from germforge.parser import parse_polynomial
from germforge.polynomial import Polynomial
from germforge.rewrite import alpha_matrix, coinvariant_decompose, pull_back, rewrite_invariant

from helpers import FAMILIES, random_h


def test_rewrite_examples():
    c = builtin_family("cyclic", 4)
    q = parse_polynomial("-4*y^4*p1*p3 - 2*y^4*p2^2", ("x", "y", "p1", "p2", "p3"))
    Q = rewrite_invariant(q, c).polynomial
    assert Q == parse_polynomial("-4*Y*p1*p3 - 2*Y*p2^2", ("X", "Y", "p1", "p2", "p3"))
    assert rewrite_invariant(Polynomial.zero(("x", "y")), c).polynomial.is_zero()
    d = builtin_family("dihedral", 6)
    q5 = parse_polynomial("3*p5*(x^3+y^3)", ("x", "y", "p5"))
    assert rewrite_invariant(q5, d).polynomial == parse_polynomial("3*X*p5", ("X", "Y", "p5"))


def test_rewrite_rejects_non_invariant():
    with pytest.raises(NoSolutionError):
        rewrite_invariant(parse_polynomial("x*y", ("x", "y")), builtin_family("product", 2, 2))


def test_coinvariant_examples():
    p = builtin_family("product", 2, 2)
    ps = coinvariant_decompose(parse_polynomial("x^3+y^3+x*y", ("x", "y")), p, p.default_basis)
    assert [str(e) for e in ps] == ["0", "X", "Y", "1"]
    c = builtin_family("cyclic", 4)
    ps = coinvariant_decompose(parse_polynomial("y^6+x*y", ("x", "y")), c, c.default_basis)
    assert [str(e) for e in ps] == ["0", "X", "Y", "0"]
    zero = coinvariant_decompose(Polynomial.zero(("x", "y")), c, c.default_basis)
    assert all(e.polynomial.is_zero() for e in zero)


def test_alpha_first_row_cyclic4():
    c = builtin_family("cyclic", 4)
    v = ("x", "y", "p1", "p2", "p3")
    A = alpha_matrix(c, c.default_basis, parse_polynomial("y*p1+y^2*p2+y^3*p3", v))
    assert [str(e) for e in A.row(0)] == ["0", "p1", "p2", "p3"]


@pytest.mark.parametrize("spec", FAMILIES)
def test_round_trips(spec):
    g = parse_group_spec(spec)
    rng = random.Random(spec)
    v = g.variables
    for _ in range(3):
        q = reynolds(g, random_h(rng, v, max_degree=8, max_terms=5))
        Q = rewrite_invariant(q, g).polynomial
        assert pull_back(Q, g, v) == q
        h = random_h(rng, v)
        ps = coinvariant_decompose(h, g, g.default_basis)
        total = sum((r * pull_back(p.polynomial, g, v) for r, p in zip(g.default_basis, ps)), Polynomial.zero(v))
        assert total == h
        A = alpha_matrix(g, g.default_basis, h)
        for i, r in enumerate(g.default_basis):
            rhs = sum((pull_back(A[i, j], g, v) * rj for j, rj in enumerate(g.default_basis)), Polynomial.zero(v))
            assert rhs == r * h


def test_uniqueness_under_reordered_basis():
    g = builtin_family("dihedral", 6)
    v = g.variables
    h = parse_polynomial("x^4 + 2*x*y^2 - y^5", v)
    basis = list(g.default_basis)
    a = coinvariant_decompose(h, g, basis)
    b = coinvariant_decompose(h, g, [basis[0]] + basis[:0:-1])
    assert [e.polynomial for e in a] == [e.polynomial for e in [b[0]] + b[:0:-1]]
