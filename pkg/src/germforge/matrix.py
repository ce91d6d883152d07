"""Dense matrices of polynomials: products, determinants, adjugates."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .polynomial import Polynomial, exact_divide, poly_sum


class PolyMatrix:
    __slots__ = ("rows", "cols", "_entries", "variables")

    def __init__(self, entries: Sequence[Sequence[Polynomial]], variables: Sequence[str] | None = None):
        grid = [list(r) for r in entries]
        if not grid or not grid[0]:
            raise ValueError("a matrix needs at least one row and one column")
        cols = len(grid[0])
        if any(len(r) != cols for r in grid):
            raise ValueError("ragged matrix rows")
        if variables is None:
            variables = _union_vars(e for r in grid for e in r if isinstance(e, Polynomial))
        variables = tuple(variables)
        self.rows = len(grid)
        self.cols = cols
        self.variables = variables
        self._entries = tuple(
            tuple(
                (e.with_variables(variables) if isinstance(e, Polynomial) else Polynomial.constant(e, variables))
                for e in r
            )
            for r in grid
        )

    @classmethod
    def identity(cls, n: int, variables: Sequence[str] = ()) -> "PolyMatrix":
        one = Polynomial.constant(1, variables)
        zero = Polynomial.zero(variables)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], variables)

    @classmethod
    def diagonal(cls, diag: Sequence[Polynomial], variables: Sequence[str] | None = None) -> "PolyMatrix":
        if variables is None:
            variables = _union_vars(diag)
        zero = Polynomial.zero(variables)
        n = len(diag)
        return cls([[diag[i] if i == j else zero for j in range(n)] for i in range(n)], variables)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self._entries[i][j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self._entries[i]

    def to_lists(self) -> list[list[Polynomial]]:
        return [list(r) for r in self._entries]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def map(self, fn: Callable[[Polynomial], Polynomial], variables: Sequence[str] | None = None) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in r] for r in self._entries], variables)

    def with_variables(self, variables: Sequence[str]) -> "PolyMatrix":
        return PolyMatrix(self._entries, variables)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(c) for c in zip(*self._entries)], self.variables)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)]
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix([[e * c for e in r] for r in self._entries], self.variables)

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        variables = _union_vars([Polynomial.zero(self.variables), Polynomial.zero(other.variables)])
        a = self.with_variables(variables)._entries
        b = other.with_variables(variables)._entries
        bt = list(zip(*b))
        out = []
        for r in a:
            out.append([
                poly_sum((x * y for x, y in zip(r, col) if x and y), variables) for col in bt
            ])
        return PolyMatrix(out, variables)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self._entries, other._entries) for a, b in zip(r, s)
        )

    __hash__ = None

    def minor(self, i: int, j: int) -> "PolyMatrix":
        return PolyMatrix(
            [[e for c, e in enumerate(r) if c != j] for k, r in enumerate(self._entries) if k != i],
            self.variables,
        )

    def determinant(self, method: str = "auto") -> Polynomial:
        """Exact determinant.

        ``auto`` uses cofactor expansion up to 4x4 and fraction-free
        elimination above that.
        """
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        if method == "auto":
            method = "cofactor" if self.rows <= 4 else "bareiss"
        if method == "cofactor":
            return _cofactor_det([list(r) for r in self._entries], self.variables)
        if method == "bareiss":
            return _bareiss_det([list(r) for r in self._entries], self.variables)
        raise ValueError(f"unknown determinant method {method!r}")

    def adjugate(self) -> "PolyMatrix":
        if not self.is_square():
            raise ValueError("adjugate of a non-square matrix")
        n = self.rows
        if n == 1:
            return PolyMatrix.identity(1, self.variables)
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                d = self.minor(i, j).determinant()
                out[j][i] = -d if (i + j) % 2 else d
        return PolyMatrix(out, self.variables)

    def entry_strings(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self._entries]

    def __str__(self):
        return "\n".join("[" + ", ".join(r) + "]" for r in self.entry_strings())

    def __repr__(self):
        return f"PolyMatrix({self.entry_strings()!r})"


def _union_vars(polys: Iterable[Polynomial]) -> tuple[str, ...]:
    out: list[str] = []
    seen = set()
    for p in polys:
        for v in p.variables:
            if v not in seen:
                seen.add(v)
                out.append(v)
    return tuple(out)


def _cofactor_det(m: list[list[Polynomial]], variables: tuple[str, ...]) -> Polynomial:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    terms = []
    for j in range(n):
        a = m[0][j]
        if not a:
            continue
        sub = [r[:j] + r[j + 1:] for r in m[1:]]
        t = a * _cofactor_det(sub, variables)
        terms.append(-t if j % 2 else t)
    return poly_sum(terms, variables)


def _bareiss_det(m: list[list[Polynomial]], variables: tuple[str, ...]) -> Polynomial:
    n = len(m)
    sign = 1
    prev = Polynomial.constant(1, variables)
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return Polynomial.zero(variables)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = exact_divide(num, prev) if num else num
            m[i][k] = Polynomial.zero(variables)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
