"""Random germ sweep: run the full pipeline on seeded random germs and check the identities.

    python scripts/random_germ_sweep.py --count 100 --max-degree 6 --seed 7
"""

from __future__ import annotations

import argparse
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field

from germforge.analysis import multiplicity_report
from germforge.cli import parse_group_spec
from germforge.germ import make_germ
from germforge.image import image_equation, verify_pullback_factorization
from germforge.polynomial import Polynomial
from germforge.presentation import presentation_matrix, presentation_via_alpha, verify_det_equals_image

DEFAULT_FAMILIES = (
    "product:2x2", "cyclic:2", "cyclic:3", "cyclic:4", "product:3x2",
    "product:2x3", "dihedral:4", "dihedral:6", "dihedral:8",
)


@dataclass
class SweepConfig:
    count: int = 50
    max_degree: int = 5
    max_terms: int = 4
    seed: int = 0
    families: tuple[str, ...] = DEFAULT_FAMILIES


@dataclass
class FamilyStats:
    germs: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)
    multiplicities: list[int] = field(default_factory=list)


def random_h(rng: random.Random, variables, cfg: SweepConfig) -> Polynomial:
    monos = [(a, d - a) for d in range(1, cfg.max_degree + 1) for a in range(d + 1)]
    picked = rng.sample(monos, rng.randint(1, min(cfg.max_terms, len(monos))))
    return Polynomial(variables, {m: rng.choice([-3, -2, -1, 1, 2, 3]) for m in picked})


def run(cfg: SweepConfig) -> dict[str, FamilyStats]:
    rng = random.Random(cfg.seed)
    stats: dict[str, FamilyStats] = defaultdict(FamilyStats)
    for n in range(cfg.count):
        spec = cfg.families[n % len(cfg.families)]
        g = parse_group_spec(spec)
        gm = make_germ(g, random_h(rng, g.variables, cfg))
        t0 = time.perf_counter()
        eq = image_equation(gm)
        res = presentation_matrix(gm)
        checks = {
            "pullback": verify_pullback_factorization(eq, gm),
            "det": verify_det_equals_image(res, eq),
            "alpha": presentation_via_alpha(gm) == res.lambda_,
        }
        rep = multiplicity_report(eq.F, g)
        checks["bounds"] = rep.consistent
        s = stats[spec]
        s.seconds += time.perf_counter() - t0
        s.germs += 1
        s.multiplicities.append(rep.multiplicity)
        s.failures += [f"{k}: h = {gm.h}" for k, ok in checks.items() if not ok]
    return stats


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--max-degree", type=int, default=SweepConfig.max_degree)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    cfg = SweepConfig(count=args.count, max_degree=args.max_degree, seed=args.seed)
    stats = run(cfg)
    bad = 0
    print(f"{'family':14s} {'germs':>5s} {'mean s':>8s} {'mult range':>11s} failures")
    for spec, s in stats.items():
        bad += len(s.failures)
        rng_m = f"{min(s.multiplicities)}..{max(s.multiplicities)}"
        print(f"{spec:14s} {s.germs:5d} {s.seconds / s.germs:8.3f} {rng_m:>11s} {len(s.failures)}")
        for f in s.failures:
            print(f"    {f}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
