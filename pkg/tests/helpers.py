from __future__ import annotations

import random
from fractions import Fraction

from germforge.cli import parse_group_spec
from germforge.germ import make_germ
from germforge.polynomial import Polynomial

FAMILIES = [
    "product:2x2",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "product:3x2",
    "product:2x3",
    "dihedral:4",
    "dihedral:6",
    "dihedral:8",
]


def random_h(rng: random.Random, variables, max_degree: int = 5, max_terms: int = 4) -> Polynomial:
    monos = [(a, d - a) for d in range(1, max_degree + 1) for a in range(d + 1)]
    picked = rng.sample(monos, rng.randint(1, max_terms))
    terms = {m: rng.choice([-3, -2, -1, 1, 2, 3, Fraction(1, 2)]) for m in picked}
    return Polynomial(variables, terms)


def random_germ(rng: random.Random, spec: str | None = None):
    spec = spec or rng.choice(FAMILIES)
    group = parse_group_spec(spec)
    return make_germ(group, random_h(rng, group.variables))


def random_point(rng: random.Random, n: int = 2):
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
