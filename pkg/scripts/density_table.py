"""Packing densities of the built-in polytopes and a sweep of blown-up projective planes.

    python scripts/density_table.py [--budget N] [--max-lambda L]
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from fractions import Fraction

from toricpack import catalog
from toricpack.delzant import blow_up, classify
from toricpack.lattice import format_rational
from toricpack.packing import OmegaConfig, omega


@dataclass
class SweepConfig:
    budget: int = 64
    max_lambda: int = 4
    denominators: tuple[int, ...] = (1, 2, 3)


def rows(cfg: SweepConfig):
    fixtures = [("interval(1)", catalog.get("interval", 1)), ("sphere", catalog.get("sphere"))]
    fixtures += [(f"cpn({n},1)", catalog.get("cpn", n, 1)) for n in (2, 3, 4)]
    fixtures += [("cp1xcp1(1)", catalog.get("cp1xcp1", 1)), ("hirzebruch", catalog.get("hirzebruch")),
                 ("cp1xcp2(1)", catalog.get("cp1xcp2", 1))]
    for lam in range(2, cfg.max_lambda + 1):
        sizes = sorted({Fraction(k, q) for q in cfg.denominators for k in range(1, lam * q)})
        for t in sizes:
            fixtures.append((f"blowup(cpn(2,{lam}),0,{format_rational(t)})", blow_up(catalog.get("cpn", 2, lam), 0, t)))
    for name, p in fixtures:
        start = time.perf_counter()
        r = omega(p, OmegaConfig(budget=cfg.budget))
        yield name, classify(p).model.kind, r, time.perf_counter() - start


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=SweepConfig.budget)
    ap.add_argument("--max-lambda", type=int, default=SweepConfig.max_lambda)
    args = ap.parse_args()
    cfg = SweepConfig(budget=args.budget, max_lambda=args.max_lambda)
    print(f"{'polytope':32} {'model':16} {'lower':>8} {'upper':>8} exact nodes  seconds")
    for name, kind, r, secs in rows(cfg):
        print(f"{name:32} {kind:16} {format_rational(r.lower):>8} {format_rational(r.upper):>8} "
              f"{str(r.exact):5} {r.nodes:5} {secs:8.3f}")


if __name__ == "__main__":
    main()
