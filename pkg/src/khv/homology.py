"""Bigraded Khovanov chain complex and its homology ranks."""

from __future__ import annotations

from collections import defaultdict
from typing import Mapping

from .diagram import Diagram
from .errors import TooLarge
from .linalg import IntMatrix, matrix_rank
from .statecube import EnhancedState, StateCube

MAX_CROSSINGS = 14

Bidegree = tuple[int, int]


class BigradedRanks(dict):
    """``(i, j) -> rank``; absent keys mean rank zero."""

    def __init__(self, data: Mapping[Bidegree, int] | None = None):
        super().__init__()
        for key, rank in (data or {}).items():
            if rank < 0:
                raise ValueError(f"negative rank {rank} at {key}")
            if rank:
                self[tuple(key)] = rank

    def __missing__(self, key):
        return 0

    def mirror(self) -> "BigradedRanks":
        return BigradedRanks({(-i, -j): r for (i, j), r in self.items()})

    @property
    def total(self) -> int:
        return sum(self.values())


def _switch(cube: StateCube, es: EnhancedState, k: int):
    """Image of ``es`` under the edge map of the cube that flips crossing ``k``.

    Returns ``(target_mask, [target sign tuples])`` with unit coefficients.
    """
    mask = es.state.mask
    new_mask = mask | (1 << k)
    old = cube.circles(mask)
    new = cube.circles(new_mask)
    edges = set(cube.diagram.crossings[k].edges)
    old_touch = sorted({old.membership[e] for e in edges})
    new_touch = sorted({new.membership[e] for e in edges})
    untouched = {}
    for idx, circle in enumerate(old.circles):
        if idx not in old_touch:
            untouched[new.membership[next(iter(circle))]] = es.circle_signs[idx]

    def build(assign):
        signs = [0] * new.count
        for idx, s in untouched.items():
            signs[idx] = s
        for idx, s in assign.items():
            signs[idx] = s
        return tuple(signs)

    if len(old_touch) == 2 and len(new_touch) == 1:
        a, b = (es.circle_signs[c] for c in old_touch)
        if a == 1 and b == 1:
            return new_mask, [build({new_touch[0]: 1})]
        if a == -1 and b == -1:
            return new_mask, []
        return new_mask, [build({new_touch[0]: -1})]
    if len(old_touch) == 1 and len(new_touch) == 2:
        s = es.circle_signs[old_touch[0]]
        c1, c2 = new_touch
        if s == 1:
            return new_mask, [build({c1: 1, c2: -1}), build({c1: -1, c2: 1})]
        return new_mask, [build({c1: -1, c2: -1})]
    raise AssertionError(f"crossing {k} neither merges nor splits ({old_touch} -> {new_touch})")


def _edge_sign(mask: int, k: int) -> int:
    return -1 if bin(mask & ((1 << k) - 1)).count("1") % 2 else 1


def differential(diagram: Diagram, es: EnhancedState, cube: StateCube | None = None) -> dict[EnhancedState, int]:
    """``d(es)`` as a formal integer combination of enhanced states."""
    cube = cube or StateCube(diagram)
    out: dict[EnhancedState, int] = defaultdict(int)
    for k in range(cube.n):
        if es.state.mask >> k & 1:
            continue
        sign = _edge_sign(es.state.mask, k)
        target_mask, targets = _switch(cube, es, k)
        state = cube.state(target_mask)
        for signs in targets:
            target = cube.enhance(state, signs)
            if (target.i, target.j) != (es.i + 1, es.j):
                raise AssertionError(f"differential moved {es.i, es.j} to {target.i, target.j}")
            out[target] += sign
    return {s: c for s, c in out.items() if c}


class ChainComplex:
    """The enhanced-state complex split into ``(i, j)`` blocks."""

    def __init__(self, diagram: Diagram, max_crossings: int = MAX_CROSSINGS):
        if len(diagram.crossings) > max_crossings:
            raise TooLarge(f"{len(diagram.crossings)} crossings exceeds budget of {max_crossings}")
        self.diagram = diagram
        self.cube = StateCube(diagram)
        self.basis: dict[Bidegree, list[EnhancedState]] = defaultdict(list)
        for es in self.cube.enumerate_enhanced():
            self.basis[es.i, es.j].append(es)
        self.index = {
            key: {es.key: n for n, es in enumerate(states)} for key, states in self.basis.items()
        }
        self._matrices: dict[Bidegree, IntMatrix] = {}

    def dim(self, i: int, j: int) -> int:
        return len(self.basis.get((i, j), ()))

    def matrix(self, i: int, j: int) -> IntMatrix:
        """Matrix of ``d: C^{i,j} -> C^{i+1,j}``; rows index the target basis."""
        m = self._matrices.get((i, j))
        if m is not None:
            return m
        source = self.basis.get((i, j), [])
        target_index = self.index.get((i + 1, j), {})
        m = IntMatrix(len(target_index), len(source))
        for col, es in enumerate(source):
            for target, coeff in differential(self.diagram, es, self.cube).items():
                m.add(target_index[target.key], col, coeff)
        self._matrices[i, j] = m
        return m

    def check_d_squared(self) -> None:
        for i, j in list(self.basis):
            if (i + 1, j) in self.basis and (i + 2, j) in self.basis:
                product = self.matrix(i + 1, j) @ self.matrix(i, j)
                if not product.is_zero():
                    raise AssertionError(f"d o d != 0 on C^({i},{j})")

    def ranks(self, ring: str = "rationals") -> BigradedRanks:
        out = {}
        for (i, j), states in self.basis.items():
            rank_out = matrix_rank(self.matrix(i, j), ring)
            rank_in = matrix_rank(self.matrix(i - 1, j), ring) if (i - 1, j) in self.basis else 0
            h = len(states) - rank_out - rank_in
            if h < 0:
                raise AssertionError(f"negative homology rank at ({i},{j})")
            if h:
                out[i, j] = h
        return BigradedRanks(out)


def homology_ranks(diagram: Diagram, ring: str = "rationals", check: bool = True,
                   max_crossings: int = MAX_CROSSINGS) -> BigradedRanks:
    """Ranks of Khovanov homology over ``ring`` (``"rationals"`` or ``"GF2"``).

    Rational ranks equal the free ranks of the integral homology.
    """
    complex_ = ChainComplex(diagram, max_crossings)
    if check:
        complex_.check_d_squared()
    return complex_.ranks(ring)


def ring_discrepancies(diagram: Diagram) -> list[tuple[int, int, int, int]]:
    """Bidegrees where GF2 and rational ranks differ, as ``(i, j, rank_Q, rank_GF2)``.

    Differences come from 2-torsion in the integral homology.
    """
    complex_ = ChainComplex(diagram)
    q, f2 = complex_.ranks("rationals"), complex_.ranks("GF2")
    keys = sorted(set(q) | set(f2))
    return [(i, j, q[i, j], f2[i, j]) for i, j in keys if q[i, j] != f2[i, j]]
