"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element is stored as rational coordinates in the power basis
1, zeta, ..., zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial.
Every value is kept at its minimal conductor, so two numbers are equal
exactly when their (conductor, coeffs) pairs agree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    # exact integer polynomial division, coefficient lists low -> high, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num[: len(den) - 1]), "cyclotomic division not exact"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """Power-basis vectors of zeta_m^e for e = 0 .. m-1."""
    phi = totient(m)
    cyc = cyclotomic_polynomial(m)
    rows = []
    vec = [_ZERO] * phi
    vec[0] = _ONE
    for _ in range(m):
        rows.append(tuple(vec))
        top = vec[-1]
        vec = [_ZERO] + vec[:-1]
        if top:
            for i in range(phi):
                vec[i] -= top * cyc[i]
    return tuple(rows)


def _reduce_exponent_vector(m: int, full: dict[int, Fraction]) -> list[Fraction]:
    table = _power_table(m)
    phi = totient(m)
    out = [_ZERO] * phi
    for e, c in full.items():
        if not c:
            continue
        row = table[e % m]
        if e % m < phi:
            out[e % m] += c
        else:
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return out


def _solve_rational(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular rational system by Gauss-Jordan."""
    n = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


@lru_cache(maxsize=None)
def _subfield_solver(m: int, k: int):
    """Pivot rows and inverse for expressing Q(zeta_m) vectors in Q(zeta_k)."""
    table = _power_table(m)
    step = m // k
    cols = [table[(j * step) % m] for j in range(totient(k))]
    n = len(cols)
    # row-reduce the transposed system to pick n independent coordinates
    work = [list(c) for c in cols]
    pivots: list[int] = []
    for i in range(n):
        p = next(idx for idx, v in enumerate(work[i]) if v and idx not in pivots)
        pivots.append(p)
        for r in range(n):
            if r != i and work[r][p]:
                f = work[r][p] / work[i][p]
                work[r] = [a - f * b for a, b in zip(work[r], work[i])]
    sub = [[cols[j][p] for j in range(n)] for p in pivots]
    return tuple(pivots), sub, cols


def _proper_conductors(m: int) -> list[int]:
    return [k for k in range(2, m) if m % k == 0 and k % 4 != 2]


def _minimize(m: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]]:
    if m == 1:
        return m, coeffs
    if not any(coeffs[1:]):
        return 1, (coeffs[0],)
    for k in _proper_conductors(m):
        pivots, sub, cols = _subfield_solver(m, k)
        try:
            b = _solve_rational(sub, [coeffs[p] for p in pivots])
        except ZeroDivisionError:  # pragma: no cover - pivots are independent
            continue
        recon = [_ZERO] * len(coeffs)
        for bj, col in zip(b, cols):
            if bj:
                for i, v in enumerate(col):
                    if v:
                        recon[i] += bj * v
        if tuple(recon) == coeffs:
            return _minimize(k, tuple(b))
    return m, coeffs


def _from_double_odd(m: int, coeffs) -> tuple[int, list[Fraction]]:
    # zeta_{2n} = -zeta_n^((n+1)/2) for odd n
    n = m // 2
    full: dict[int, Fraction] = {}
    half = (n + 1) // 2
    for j, c in enumerate(coeffs):
        if c:
            e = (j * half) % n
            full[e] = full.get(e, _ZERO) + (c if j % 2 == 0 else -c)
    return n, _reduce_exponent_vector(n, full)


class CyclotomicNumber:
    """An exact element of Q(zeta_m); conductor 1 encodes plain rationals."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != totient(conductor):
            raise ValueError(
                f"conductor {conductor} needs {totient(conductor)} coefficients, got {len(coeffs)}"
            )
        if conductor % 4 == 2:
            conductor, coeffs = _from_double_odd(conductor, coeffs)
        m, c = _minimize(conductor, tuple(coeffs))
        self.conductor = m
        self.coeffs = c
        self._hash = None

    @classmethod
    def _raw(cls, m: int, coeffs: tuple[Fraction, ...]) -> "CyclotomicNumber":
        obj = object.__new__(cls)
        obj.conductor = m
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def _canonical(cls, m: int, coeffs) -> "CyclotomicNumber":
        m, c = _minimize(m, tuple(coeffs))
        return cls._raw(m, c)

    @classmethod
    def rational(cls, value) -> "CyclotomicNumber":
        return cls._raw(1, (Fraction(value),))

    @classmethod
    def root_of_unity(cls, m: int, k: int = 1) -> "CyclotomicNumber":
        """zeta_m^k with zeta_m = exp(2*pi*i/m)."""
        if m < 1:
            raise ValueError("order must be positive")
        if m % 4 == 2:
            n = m // 2
            half = (n + 1) // 2
            base = cls._raw(n, _power_table(n)[(k * half) % n]) if n > 1 else ONE
            base = cls._canonical(base.conductor, base.coeffs)
            return -base if k % 2 else base
        return cls._canonical(m, _power_table(m)[k % m])

    @classmethod
    def coerce(cls, value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._raw(1, (Fraction(value),))
        raise TypeError(f"cannot coerce {type(value).__name__} to CyclotomicNumber")

    # --- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.conductor == 1 and not self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # --- arithmetic -----------------------------------------------------

    def _embedded(self, L: int) -> list[Fraction]:
        if self.conductor == L:
            return list(self.coeffs)
        step = L // self.conductor
        table = _power_table(L)
        phi = totient(L)
        out = [_ZERO] * phi
        for j, c in enumerate(self.coeffs):
            if c:
                row = table[(j * step) % L]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return out

    def __add__(self, other):
        if not isinstance(other, CyclotomicNumber):
            if isinstance(other, (int, Fraction)):
                other = CyclotomicNumber._raw(1, (Fraction(other),))
            else:
                return NotImplemented
        m1, m2 = self.conductor, other.conductor
        if m1 == m2:
            if m1 == 1:
                return CyclotomicNumber._raw(1, (self.coeffs[0] + other.coeffs[0],))
            return CyclotomicNumber._canonical(m1, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        L = lcm(m1, m2)
        a, b = self._embedded(L), other._embedded(L)
        return CyclotomicNumber._canonical(L, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, CyclotomicNumber):
            if isinstance(other, (int, Fraction)):
                other = CyclotomicNumber._raw(1, (Fraction(other),))
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CyclotomicNumber):
            if isinstance(other, (int, Fraction)):
                if self.conductor == 1:
                    return CyclotomicNumber._raw(1, (self.coeffs[0] * other,))
                if not other:
                    return ZERO
                return CyclotomicNumber._raw(self.conductor, tuple(c * other for c in self.coeffs))
            return NotImplemented
        m1, m2 = self.conductor, other.conductor
        if m1 == 1:
            c = self.coeffs[0]
            if m2 == 1:
                return CyclotomicNumber._raw(1, (c * other.coeffs[0],))
            if not c:
                return ZERO
            return CyclotomicNumber._raw(m2, tuple(c * v for v in other.coeffs))
        if m2 == 1:
            c = other.coeffs[0]
            if not c:
                return ZERO
            return CyclotomicNumber._raw(m1, tuple(c * v for v in self.coeffs))
        L = m1 if m1 == m2 else lcm(m1, m2)
        a, b = self._embedded(L), other._embedded(L)
        full: dict[int, Fraction] = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        full[i + j] = full.get(i + j, _ZERO) + x * y
        return CyclotomicNumber._canonical(L, _reduce_exponent_vector(L, full))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        m = self.conductor
        if m == 1:
            return CyclotomicNumber._raw(1, (1 / self.coeffs[0],))
        phi = totient(m)
        zeta = CyclotomicNumber._raw(m, _power_table(m)[1])
        cols = []
        cur = self
        for _ in range(phi):
            cols.append(cur._embedded(m))
            cur = cur * zeta
        matrix = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        rhs = [_ONE] + [_ZERO] * (phi - 1)
        return CyclotomicNumber._canonical(m, _solve_rational(matrix, rhs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, CyclotomicNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return CyclotomicNumber.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, j: int) -> "CyclotomicNumber":
        """Apply the automorphism zeta -> zeta^j (j coprime to the conductor)."""
        m = self.conductor
        if gcd(j, m) != 1:
            raise ValueError(f"{j} is not a unit modulo {m}")
        if m == 1:
            return self
        full: dict[int, Fraction] = {}
        for e, c in enumerate(self.coeffs):
            if c:
                k = (e * j) % m
                full[k] = full.get(k, _ZERO) + c
        return CyclotomicNumber._canonical(m, _reduce_exponent_vector(m, full))

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1)

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    # --- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.conductor == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.conductor == 1:
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    # --- text form ---------------------------------------------------------

    def terms(self) -> list[tuple[Fraction, str]]:
        """(coefficient, basis symbol) pairs, basis symbol '' for 1."""
        m = self.conductor
        out = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                out.append((c, ""))
            elif k == 1:
                out.append((c, f"z{m}"))
            else:
                out.append((c, f"z{m}^{k}"))
        return out

    def __str__(self):
        parts = self.terms()
        if not parts:
            return "0"
        return join_signed_terms(parts)

    def __repr__(self):
        return f"CyclotomicNumber({self.conductor}, {[str(c) for c in self.coeffs]})"


def format_scaled(coef: Fraction, body: str) -> str:
    """Unsigned text for |coef| * body."""
    a = abs(coef)
    if not body:
        return str(a)
    if a == 1:
        return body
    return f"{a}*{body}"


def join_signed_terms(parts: list[tuple[Fraction, str]]) -> str:
    out = []
    for i, (c, body) in enumerate(parts):
        text = format_scaled(c, body)
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


ZERO = CyclotomicNumber._raw(1, (_ZERO,))
ONE = CyclotomicNumber._raw(1, (_ONE,))


def zeta(m: int, k: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.root_of_unity(m, k)


def parse_cyclotomic(text: str) -> CyclotomicNumber:
    """Parse a constant expression such as ``1/2 - 3*z3^2``."""
    from .parser import parse_polynomial

    p = parse_polynomial(text, ())
    if not p.is_constant():
        raise ParseError(f"not a constant: {text!r}")
    return p.constant_term()
