"""Sparse multivariate polynomials over cyclotomic coefficients.

A polynomial carries its ordered variable list; monomials are exponent
tuples indexed by that list.  Values are immutable.  The text form lists
terms by ascending total degree and, within a degree, lexicographically
descending in the declared variable order.  Division selects leading terms
by graded-lex (highest degree first).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .cyclotomic import ONE, ZERO, CyclotomicNumber, format_scaled
from .errors import InexactDivisionError, VariableMismatchError

Monomial = tuple  # tuple[int, ...]

_coerce = CyclotomicNumber.coerce


def grlex_key(m: Monomial):
    return (sum(m), m)


def text_order_key(m: Monomial):
    # ascending degree, lex-descending inside a degree
    return (sum(m), tuple(-e for e in m))


class Polynomial:
    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, object] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise VariableMismatchError(f"repeated variable in {variables}")
        n = len(variables)
        clean: dict[Monomial, CyclotomicNumber] = {}
        for mono, coef in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} does not match {n} variables")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = _coerce(coef)
            if mono in clean:
                c = clean[mono] + c
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._vars = variables
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> "Polynomial":
        obj = object.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._hash = None
        return obj

    # --- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, value, variables: Sequence[str] = ()) -> "Polynomial":
        variables = tuple(variables)
        c = _coerce(value)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatchError(f"{name!r} is not one of {variables}")
        mono = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {mono: ONE})

    @classmethod
    def monomial(cls, exponents: Sequence[int], variables: Sequence[str], coef=1) -> "Polynomial":
        return cls(variables, {tuple(exponents): coef})

    # --- basic accessors ---------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> Mapping[Monomial, CyclotomicNumber]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_term(self) -> CyclotomicNumber:
        return self._terms.get((0,) * len(self._vars), ZERO)

    def coefficient(self, mono: Monomial) -> CyclotomicNumber:
        return self._terms.get(tuple(mono), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(m) for m in self._terms), default=-1)

    def degree_in(self, names: Iterable[str]) -> int:
        idx = self._indices(names)
        return max((sum(m[i] for i in idx) for m in self._terms), default=-1)

    def used_variables(self) -> tuple[str, ...]:
        used = [False] * len(self._vars)
        for m in self._terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._vars, used) if u)

    def conductor(self) -> int:
        """Common conductor of all coefficients (lcm of their conductors)."""
        from .cyclotomic import lcm

        out = 1
        for c in self._terms.values():
            out = lcm(out, c.conductor)
        return out

    def leading_term(self) -> tuple[Monomial, CyclotomicNumber]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=grlex_key)
        return m, self._terms[m]

    def leading_coefficient(self) -> CyclotomicNumber:
        return self.leading_term()[1]

    def _indices(self, names: Iterable[str]) -> list[int]:
        pos = {v: i for i, v in enumerate(self._vars)}
        try:
            return [pos[n] for n in names]
        except KeyError as exc:
            raise VariableMismatchError(f"unknown variable {exc.args[0]!r}") from None

    # --- variable-list management ------------------------------------------

    def with_variables(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express over ``variables``; every used variable must be kept."""
        variables = tuple(variables)
        if variables == self._vars:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        if len(pos) != len(variables):
            raise VariableMismatchError(f"repeated variable in {variables}")
        mapping = []
        for i, v in enumerate(self._vars):
            mapping.append(pos.get(v))
        n = len(variables)
        out = {}
        for m, c in self._terms.items():
            new = [0] * n
            for i, e in enumerate(m):
                if e:
                    j = mapping[i]
                    if j is None:
                        raise VariableMismatchError(
                            f"variable {self._vars[i]!r} is used but absent from {variables}"
                        )
                    new[j] = e
            out[tuple(new)] = c
        return Polynomial._raw(variables, out)

    def _align(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if self._vars == other._vars:
            return self, other
        a, b = set(self._vars), set(other._vars)
        if b <= a:
            return self, other.with_variables(self._vars)
        if a <= b:
            return self.with_variables(other._vars), other
        # tolerate extra variables the other side never uses
        try:
            return self, other.with_variables(self._vars)
        except VariableMismatchError:
            pass
        try:
            return self.with_variables(other._vars), other
        except VariableMismatchError:
            raise VariableMismatchError(
                f"cannot reconcile variable lists {self._vars} and {other._vars}"
            ) from None

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other, self._vars)

    # --- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (Polynomial, CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = self._align(self._lift(other))
        if len(a._terms) < len(b._terms):
            a, b = b, a
        out = dict(a._terms)
        for m, c in b._terms.items():
            if m in out:
                s = out[m] + c
                if s:
                    out[m] = s
                else:
                    del out[m]
            else:
                out[m] = c
        return Polynomial._raw(a._vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self._vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Polynomial, CyclotomicNumber, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial._raw(self._vars, {})
        if c == 1:
            return self
        return Polynomial._raw(self._vars, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (CyclotomicNumber, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._align(other)
        if not a._terms or not b._terms:
            return Polynomial._raw(a._vars, {})
        if len(a._terms) < len(b._terms):
            a, b = b, a
        out: dict = {}
        bt = list(b._terms.items())
        for m1, c1 in a._terms.items():
            for m2, c2 in bt:
                m = tuple([x + y for x, y in zip(m1, m2)])
                c = c1 * c2
                if m in out:
                    out[m] = out[m] + c
                else:
                    out[m] = c
        return Polynomial._raw(a._vars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = Polynomial.constant(1, self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (CyclotomicNumber, int, Fraction)):
            return self.scale(_coerce(other).inverse())
        if isinstance(other, Polynomial):
            return exact_divide(self, other)
        return NotImplemented

    # --- calculus / structure -----------------------------------------------

    def derivative(self, name: str) -> "Polynomial":
        (i,) = self._indices([name])
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                out[tuple(mm)] = c * e
        return Polynomial._raw(self._vars, out)

    def split(self, names: Sequence[str]) -> dict[Monomial, "Polynomial"]:
        """Group terms by their exponents in the variables *not* in ``names``.

        Returns {rest exponents: polynomial in ``names``}.
        """
        idx = self._indices(names)
        rest = [i for i in range(len(self._vars)) if i not in idx]
        groups: dict[Monomial, dict] = {}
        for m, c in self._terms.items():
            key = tuple(m[i] for i in rest)
            groups.setdefault(key, {})[tuple(m[i] for i in idx)] = c
        return {k: Polynomial._raw(tuple(names), v) for k, v in groups.items()}

    def substitute(self, bindings: Mapping[str, object], variables: Sequence[str] | None = None) -> "Polynomial":
        """Compose: replace each bound variable by a polynomial or scalar."""
        if variables is None:
            keep = [v for v in self._vars if v not in bindings]
            extra: list[str] = []
            for val in bindings.values():
                if isinstance(val, Polynomial):
                    for v in val._vars:
                        if v not in keep and v not in extra:
                            extra.append(v)
            variables = tuple(keep + extra)
        variables = tuple(variables)
        bound: list[tuple[int, Polynomial]] = []
        kept: list[tuple[int, int]] = []
        pos = {v: j for j, v in enumerate(variables)}
        for i, v in enumerate(self._vars):
            if v in bindings:
                val = bindings[v]
                if isinstance(val, Polynomial):
                    val = val.with_variables(variables)
                else:
                    val = Polynomial.constant(val, variables)
                bound.append((i, val))
            elif v in pos:
                kept.append((i, pos[v]))
            else:
                kept.append((i, None))
        n = len(variables)
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(slot: int, val: Polynomial, e: int) -> Polynomial:
            key = (slot, e)
            if key not in powers:
                powers[key] = val if e == 1 else power(slot, val, e - 1) * val
            return powers[key]

        acc: dict = {}
        result = Polynomial._raw(variables, {})
        for m, c in self._terms.items():
            base = [0] * n
            for i, j in kept:
                if m[i]:
                    if j is None:
                        raise VariableMismatchError(
                            f"variable {self._vars[i]!r} is neither bound nor retained"
                        )
                    base[j] = m[i]
            term = Polynomial._raw(variables, {tuple(base): c})
            for slot, (i, val) in enumerate(bound):
                if m[i]:
                    term = term * power(slot, val, m[i])
            for mm, cc in term._terms.items():
                acc[mm] = acc[mm] + cc if mm in acc else cc
        result = Polynomial._raw(variables, {m: c for m, c in acc.items() if c})
        return result

    def evaluate(self, point: Mapping[str, object]) -> CyclotomicNumber:
        """Value at a point binding every used variable."""
        value = self.substitute(point, variables=())
        return value.constant_term()

    def homogeneous_parts(self, weights: Sequence[int] | None = None) -> list[tuple[int, "Polynomial"]]:
        """Weighted-homogeneous decomposition, sorted by degree ascending."""
        if weights is None:
            weights = (1,) * len(self._vars)
        if len(weights) != len(self._vars):
            raise ValueError("weights must match the variable count")
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            d = sum(w * e for w, e in zip(weights, m))
            parts.setdefault(d, {})[m] = c
        return [(d, Polynomial._raw(self._vars, parts[d])) for d in sorted(parts)]

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return len(self.homogeneous_parts(weights)) <= 1

    # --- comparison -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (CyclotomicNumber, int, Fraction)):
            other = Polynomial.constant(other, self._vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self._vars == other._vars:
            return self._terms == other._terms
        try:
            a, b = self._align(other)
        except VariableMismatchError:
            return False
        return a._terms == b._terms

    def __hash__(self):
        if self._hash is None:
            used = self.used_variables()
            self._hash = hash(frozenset(self.with_variables(used)._terms.items()) if used else
                              frozenset(self._terms.values()))
        return self._hash

    # --- text ---------------------------------------------------------------------

    def _monomial_text(self, m: Monomial) -> str:
        parts = []
        for v, e in zip(self._vars, m):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def sorted_terms(self) -> list[tuple[Monomial, CyclotomicNumber]]:
        return sorted(self._terms.items(), key=lambda kv: text_order_key(kv[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            body = self._monomial_text(m)
            cterms = c.terms()
            if len(cterms) == 1:
                q, sym = cterms[0]
                full = "*".join(s for s in (sym, body) if s)
                text = format_scaled(q, full)
                neg = q < 0
            else:
                text = f"({c})" + (f"*{body}" if body else "")
                neg = False
            if i == 0:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({list(self._vars)}, {str(self)!r})"


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return r with q*r == p, or raise InexactDivisionError with the remainder."""
    p, q = p._align(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    variables = p._vars
    if not p._terms:
        return Polynomial._raw(variables, {})
    lt_m, lt_c = q.leading_term()
    inv_lc = lt_c.inverse()
    if len(q._terms) == 1:
        out = {}
        rem = {}
        for m, c in p._terms.items():
            d = tuple(a - b for a, b in zip(m, lt_m))
            if min(d, default=0) < 0:
                rem[m] = c
            else:
                out[d] = c * inv_lc
        if rem:
            raise InexactDivisionError("inexact polynomial division", Polynomial._raw(variables, rem))
        return Polynomial._raw(variables, out)
    rest = [(m, c) for m, c in q._terms.items() if m != lt_m]
    work = dict(p._terms)
    heap = [(-sum(m), tuple(-e for e in m)) for m in work]
    heapq.heapify(heap)
    quotient: dict = {}
    remainder: dict = {}
    while heap:
        negdeg, negm = heapq.heappop(heap)
        m = tuple(-e for e in negm)
        c = work.pop(m, None)
        if c is None:
            continue
        # duplicate heap entries are harmless: the key is gone from work
        d = tuple(a - b for a, b in zip(m, lt_m))
        if min(d) < 0:
            remainder[m] = c
            continue
        f = c * inv_lc
        quotient[d] = f
        for qm, qc in rest:
            k = tuple([a + b for a, b in zip(qm, d)])
            v = work.get(k)
            if v is None:
                work[k] = -(f * qc)
                heapq.heappush(heap, (-sum(k), tuple(-e for e in k)))
            else:
                v = v - f * qc
                if v:
                    work[k] = v
                else:
                    del work[k]
    if remainder:
        raise InexactDivisionError("inexact polynomial division", Polynomial._raw(variables, remainder))
    return Polynomial._raw(variables, quotient)


def divides(q: Polynomial, p: Polynomial) -> bool:
    try:
        exact_divide(p, q)
    except InexactDivisionError:
        return False
    return True


def product(polys: Iterable[Polynomial], variables: Sequence[str] = ()) -> Polynomial:
    result = None
    for p in polys:
        result = p if result is None else result * p
    if result is None:
        return Polynomial.constant(1, variables)
    return result


def poly_sum(polys: Iterable[Polynomial], variables: Sequence[str] = ()) -> Polynomial:
    acc: dict = {}
    vars_ = tuple(variables)
    for p in polys:
        if not vars_:
            vars_ = p._vars
        if p._vars != vars_:
            p = p.with_variables(vars_)
        for m, c in p._terms.items():
            acc[m] = acc[m] + c if m in acc else c
    return Polynomial._raw(vars_, {m: c for m, c in acc.items() if c})
