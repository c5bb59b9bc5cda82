"""Extremal terms of v_n for synthetic rank tables with a (-2m, -4m-1) generator.

Every table shares the trefoil's ranks and adds one generator at
bidegree (-2m, -4m-1), which is then the lowest x-degree.  The script prints
j_min and the t-coefficient for each m and n and reports whether the values
are pairwise distinct at each order.

    python3 scripts/extremal_sweep.py --ms 2 3 4 5 --order 5
"""

import argparse
from dataclasses import dataclass

from khv.expansion import extremal_term, v_n
from khv.homology import BigradedRanks

BASE = {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}


@dataclass
class SweepConfig:
    ms: tuple[int, ...] = (2, 3, 4)
    order: int = 5


def table(m: int) -> BigradedRanks:
    return BigradedRanks({**BASE, (-2 * m, -4 * m - 1): 1})


def run(cfg: SweepConfig) -> bool:
    separated = True
    for n in range(cfg.order + 1):
        seen = []
        for m in cfg.ms:
            j_min, coeff = extremal_term(v_n(table(m), n))
            print(f"n={n} m={m}: j_min={j_min}  coefficient={coeff}")
            seen.append((j_min, coeff))
        distinct = len({(j, str(c)) for j, c in seen}) == len(seen)
        separated &= distinct
        print(f"n={n}: {'pairwise distinct' if distinct else 'COLLISION'}")
    return separated


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--ms", type=int, nargs="+", default=list(SweepConfig.ms))
    p.add_argument("--order", type=int, default=SweepConfig.order)
    a = p.parse_args()
    raise SystemExit(0 if run(SweepConfig(tuple(a.ms), a.order)) else 1)
