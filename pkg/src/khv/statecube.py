"""States, circle tracing and enhanced states with their (i, j) gradings.

A state is stored as a bitmask over crossings in PD order: bit ``k`` clear
means a positive marker at crossing ``k`` (edges ``a,b`` and ``c,d`` of
``X(a,b,c,d)`` are joined), bit set means a negative marker (``a,d`` and
``b,c`` joined).  At a positive crossing the positive marker gives the
oriented smoothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .diagram import Diagram


@dataclass(frozen=True)
class State:
    mask: int
    n: int

    @property
    def negatives(self) -> int:
        return bin(self.mask).count("1")

    @property
    def sigma(self) -> int:
        return self.n - 2 * self.negatives

    def marker(self, k: int) -> int:
        return -1 if self.mask >> k & 1 else 1

    @classmethod
    def from_markers(cls, markers) -> "State":
        mask = 0
        for k, m in enumerate(markers):
            if m < 0:
                mask |= 1 << k
        return cls(mask, len(markers))


@dataclass(frozen=True)
class CircleSet:
    """Circles of a smoothing, each a frozenset of edge labels.

    Free loops are represented by the negative labels ``-1, -2, ...``.
    Circles are ordered by their smallest edge label, free loops last.
    """

    circles: tuple[frozenset, ...]

    @property
    def count(self) -> int:
        return len(self.circles)

    @cached_property
    def membership(self) -> dict[int, int]:
        return {e: idx for idx, circle in enumerate(self.circles) for e in circle}


@dataclass(frozen=True)
class EnhancedState:
    state: State
    circle_signs: tuple[int, ...]
    i: int
    j: int

    @property
    def tau(self) -> int:
        return sum(self.circle_signs)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return self.state.mask, self.circle_signs


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def resolve(diagram: Diagram, state: State) -> CircleSet:
    if state.n != len(diagram.crossings):
        raise ValueError(f"state has {state.n} markers, diagram has {len(diagram.crossings)} crossings")
    parent = {e: e for e in range(1, diagram.n_edges + 1)}
    for k, crossing in enumerate(diagram.crossings):
        a, b, c, d = crossing.edges
        pairs = ((a, b), (c, d)) if state.marker(k) > 0 else ((a, d), (b, c))
        for u, v in pairs:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, set] = {}
    for e in parent:
        groups.setdefault(_find(parent, e), set()).add(e)
    circles = [frozenset(groups[r]) for r in sorted(groups)]
    circles += [frozenset([-(k + 1)]) for k in range(diagram.free_loops)]
    return CircleSet(tuple(circles))


def gradings(writhe: int, sigma: int, tau: int) -> tuple[int, int]:
    """``i = (w - sigma)/2`` and ``j = w + i + tau``."""
    twice_i = writhe - sigma
    if twice_i % 2:
        raise ValueError(f"w - sigma = {twice_i} is odd")
    i = twice_i // 2
    return i, writhe + i + tau


class StateCube:
    """Caches the circle structure of every vertex of the cube of resolutions."""

    def __init__(self, diagram: Diagram):
        self.diagram = diagram
        self.n = len(diagram.crossings)
        self.writhe = diagram.writhe
        self._circles: dict[int, CircleSet] = {}

    def state(self, mask: int) -> State:
        return State(mask, self.n)

    def circles(self, mask: int) -> CircleSet:
        cs = self._circles.get(mask)
        if cs is None:
            cs = self._circles[mask] = resolve(self.diagram, State(mask, self.n))
        return cs

    def states(self) -> Iterator[State]:
        for mask in range(1 << self.n):
            yield State(mask, self.n)

    def enhance(self, state: State, signs: tuple[int, ...]) -> EnhancedState:
        i, j = gradings(self.writhe, state.sigma, sum(signs))
        return EnhancedState(state, signs, i, j)

    def enumerate_enhanced(self) -> Iterator[EnhancedState]:
        for state in self.states():
            k = self.circles(state.mask).count
            for signs in itertools.product((1, -1), repeat=k):
                yield self.enhance(state, signs)


def enumerate_enhanced(diagram: Diagram) -> Iterator[EnhancedState]:
    """All enhanced states, ordered by state mask then by circle signs (``+`` first)."""
    return StateCube(diagram).enumerate_enhanced()
