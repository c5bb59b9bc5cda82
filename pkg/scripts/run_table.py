"""Recompute Kh and v_0..v_N for a set of corpus knots and print them.

    python3 scripts/run_table.py --knots 3_1 4_1 --order 3
"""

import argparse
import time
from dataclasses import dataclass, fields

from khv import corpus
from khv.expansion import v_n, vassiliev_value
from khv.homology import homology_ranks
from khv.polynomials import khovanov_polynomial


@dataclass
class TableConfig:
    knots: tuple[str, ...] = corpus.TABLE_KNOTS
    order: int = 5
    ring: str = "rationals"
    vassiliev: bool = False


def run(cfg: TableConfig) -> None:
    for name in cfg.knots:
        start = time.perf_counter()
        ranks = homology_ranks(corpus.load(name).diagram, cfg.ring)
        print(f"{name}  ({time.perf_counter() - start:.3f}s)")
        print(f"  Kh  = {khovanov_polynomial(ranks)}")
        for n in range(cfg.order + 1):
            row = v_n(ranks, n)
            extra = f"   [at (-1,1): {vassiliev_value(row)}]" if cfg.vassiliev else ""
            print(f"  v_{n} = {row.to_text(reverse=True)}{extra}")


def parse_args() -> TableConfig:
    defaults = TableConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--knots", nargs="+", default=list(defaults.knots))
    p.add_argument("--order", type=int, default=defaults.order)
    p.add_argument("--ring", choices=("rationals", "GF2"), default=defaults.ring)
    p.add_argument("--vassiliev", action="store_true")
    args = p.parse_args()
    return TableConfig(**{f.name: getattr(args, f.name) for f in fields(TableConfig)})


if __name__ == "__main__":
    run(parse_args())
