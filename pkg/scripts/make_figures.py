"""Write SVG pictures of the planar models and their densest packings.

    python scripts/make_figures.py [--out figures]
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from toricpack import catalog
from toricpack.delzant import blow_up
from toricpack.packing import decide_perfect_packing, omega
from toricpack.render import render_svg


@dataclass
class FigureConfig:
    out: Path = Path("figures")
    scale: int = 60


def figures():
    cp2 = catalog.get("cpn", 2, 3)
    yield "cp2_lambda3", cp2, None
    square = catalog.get("cp1xcp1", 1)
    for k, fam in enumerate(decide_perfect_packing(square).packings):
        yield f"cp1xcp1_packing{k}", square, fam
    trap = catalog.get("hirzebruch")
    yield "hirzebruch_densest", trap, omega(trap).witness
    chopped = blow_up(cp2, 0, 1)
    yield "cp2_blown_up", chopped, omega(chopped).witness


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=FigureConfig.out)
    ap.add_argument("--scale", type=int, default=FigureConfig.scale)
    args = ap.parse_args()
    cfg = FigureConfig(args.out, args.scale)
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, p, fam in figures():
        path = cfg.out / f"{name}.svg"
        path.write_text(render_svg(p, fam, scale=cfg.scale), encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()
