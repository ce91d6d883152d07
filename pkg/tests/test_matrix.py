from __future__ import annotations

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from germforge.matrix import PolyMatrix
from germforge.parser import parse_polynomial
from germforge.polynomial import Polynomial

from test_polynomial import polys

T = ("X", "Y", "Z")
INTRO = [["-Z", "X", "Y", "1"], ["X^2", "-Z", "X", "Y"], ["Y^2", "Y", "-Z", "X"], ["X*Y", "Y^2", "X^2", "-Z"]]
EQ1 = "X^2*Y^2-2*X*Y*Z^2+Z^4-2*X^4*Y-2*X*Y^4-8*X^2*Y^2*Z-2*X^3*Z^2-2*Y^3*Z^2+X^6-2*X^3*Y^3+Y^6"


def mat(rows, v=T):
    return PolyMatrix([[parse_polynomial(e, v) for e in r] for r in rows], v)


def test_intro_determinant_both_methods():
    M = mat(INTRO)
    expected = parse_polynomial(EQ1, T)
    assert M.determinant("cofactor") == expected
    assert M.determinant("bareiss") == expected


def test_identity_and_eigen_det():
    assert PolyMatrix.identity(3, T).determinant() == 1
    v = ("x", "y")
    E = mat([["1", "1", "1", "1"], ["x", "-x", "x", "-x"], ["y", "y", "-y", "-y"], ["x*y", "-x*y", "-x*y", "x*y"]], v)
    assert E.determinant() == parse_polynomial("16*x^2*y^2", v)
    assert E.adjugate().row(0) == tuple(parse_polynomial(s, v) for s in ["4*x^2*y^2", "4*x*y^2", "4*x^2*y", "4*x*y"])


def test_adjugate_small():
    v = ("a", "b", "c", "d")
    M = mat([["a", "b"], ["c", "d"]], v)
    assert M.adjugate() == mat([["d", "-b"], ["-c", "a"]], v)
    assert PolyMatrix.identity(4, v).adjugate() == PolyMatrix.identity(4, v)


def test_bareiss_handles_zero_pivot():
    M = mat([["0", "X"], ["Y", "Z"]])
    assert M.determinant("bareiss") == parse_polynomial("-X*Y", T)


@given(st.lists(polys(max_terms=3, max_deg=2), min_size=9, max_size=9))
def test_adjugate_identity(entries):
    M = PolyMatrix([entries[0:3], entries[3:6], entries[6:9]], ("x", "y", "z"))
    det = M.determinant()
    assert M * M.adjugate() == PolyMatrix.identity(3, M.variables).map(lambda e: e * det)


@given(st.lists(polys(max_terms=2, max_deg=2), min_size=16, max_size=16))
def test_bareiss_matches_cofactor(entries):
    M = PolyMatrix([entries[i:i + 4] for i in range(0, 16, 4)], ("x", "y", "z"))
    assert M.determinant("bareiss") == M.determinant("cofactor")
