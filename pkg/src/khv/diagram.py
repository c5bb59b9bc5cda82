"""Oriented link diagrams encoded as planar-diagram (PD) codes.

Conventions follow the KnotTheory package: ``X(a,b,c,d)`` lists the four
edges meeting at a crossing counterclockwise, starting with the incoming
under-strand, so the under-strand runs ``a -> c`` and the over-strand joins
``b`` and ``d``.  The crossing is positive when the over-strand runs
``d -> b``.  A bare ``U`` term is a crossingless unknotted component.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EdgeDegree, MalformedTerm, OrientationConflict

_TOKEN = re.compile(
    r"\s*(?:X\s*[(\[](?P<x>[^()\[\]]*)[)\]]|(?P<u>U|Loop)(?:\(\)|\[\])?|(?P<sep>,))\s*"
)


@dataclass(frozen=True)
class Crossing:
    edges: tuple[int, int, int, int]
    sign: int

    @property
    def positive(self) -> bool:
        return self.sign > 0


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    n_edges: int
    components: int
    free_loops: int = 0

    def __len__(self):
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def pd(self) -> str:
        terms = ["X(%d,%d,%d,%d)" % c.edges for c in self.crossings]
        terms += ["U"] * self.free_loops
        return " ".join(terms)

    def __str__(self):
        return self.pd()


def writhe(diagram: Diagram) -> int:
    return diagram.writhe


def _tokenize(text: str) -> tuple[list[tuple[int, int, int, int]], int]:
    body = text.strip()
    for opener, closer in (("PD[", "]"), ("PD(", ")")):
        if body.startswith(opener) and body.endswith(closer):
            body = body[len(opener):-1]
    tuples = []
    loops = 0
    pos = 0
    while pos < len(body):
        m = _TOKEN.match(body, pos)
        if m is None or m.end() == pos:
            snippet = body[pos:pos + 20].strip()
            raise MalformedTerm(f"cannot parse term starting at {snippet!r}")
        pos = m.end()
        if m.group("u"):
            loops += 1
        elif m.group("x") is not None:
            parts = m.group("x").split(",")
            if len(parts) != 4:
                raise MalformedTerm(f"crossing X({m.group('x')}) has {len(parts)} edges, expected 4")
            try:
                labels = tuple(int(p) for p in parts)
            except ValueError:
                raise MalformedTerm(f"non-integer edge label in X({m.group('x')})") from None
            if min(labels) < 1:
                raise MalformedTerm(f"edge labels must be positive in X({m.group('x')})")
            tuples.append(labels)
    return tuples, loops


def _orient(tuples: Sequence[tuple[int, int, int, int]]) -> tuple[dict[int, tuple[int, int]], int]:
    """Return the head slot ``(crossing, position)`` of every edge and the component count.

    Under-strands fix the direction of the edges they touch.  A component that
    never passes under anything is oriented by increasing edge label.
    """
    slots: dict[int, list[tuple[int, int]]] = {}
    for ci, edges in enumerate(tuples):
        for pos, e in enumerate(edges):
            slots.setdefault(e, []).append((ci, pos))

    n_edges = len(slots)
    bad = [e for e, s in slots.items() if len(s) != 2]
    if bad:
        e = min(bad)
        raise EdgeDegree(f"edge {e} appears {len(slots[e])} times, expected 2")
    if sorted(slots) != list(range(1, n_edges + 1)):
        missing = min(set(range(1, n_edges + 1)) - set(slots))
        raise EdgeDegree(f"edge labels must be 1..{n_edges}; edge {missing} appears 0 times")

    def other_end(e, slot):
        a, b = slots[e]
        return b if a == slot else a

    head: dict[int, tuple[int, int]] = {}
    components = 0
    for start in sorted(slots):
        if start in head:
            continue
        components += 1
        # collect the component's edges by walking strands in an arbitrary direction
        edges_in_comp = []
        e, slot = start, slots[start][0]
        while True:
            edges_in_comp.append(e)
            ci, pos = other_end(e, slot)
            nxt = tuples[ci][(pos + 2) % 4]
            slot = (ci, (pos + 2) % 4)
            e = nxt
            if e == start and slot in slots[start]:
                break
        # seed orientation
        seed = None
        for e in edges_in_comp:
            for ci, pos in slots[e]:
                if pos == 0:
                    seed = (e, (ci, pos))
                    break
            if seed:
                break
        if seed is None:
            e = min(edges_in_comp)
            succ = e + 1 if e + 1 in edges_in_comp else min(edges_in_comp)
            shared = [s for s in slots[e] if tuples[s[0]][(s[1] + 2) % 4] == succ]
            seed = (e, shared[0] if shared else slots[e][1])
        e, h = seed
        while e not in head:
            head[e] = h
            ci, pos = h
            out_pos = (pos + 2) % 4
            e = tuples[ci][out_pos]
            h = other_end(e, (ci, out_pos))
        if head[e] != h:
            raise OrientationConflict(f"edge {e} cannot be consistently oriented")

    for ci, (a, b, c, d) in enumerate(tuples):
        if head[a] != (ci, 0) or head[c] == (ci, 2):
            raise OrientationConflict(
                f"crossing X({a},{b},{c},{d}): first entry is not the incoming under-strand"
            )
    return head, components


def from_tuples(tuples: Iterable[Sequence[int]], free_loops: int = 0) -> Diagram:
    tuples = [tuple(int(v) for v in t) for t in tuples]
    for t in tuples:
        if len(t) != 4:
            raise MalformedTerm(f"crossing {t} has {len(t)} edges, expected 4")
    if not tuples:
        return Diagram((), 0, free_loops, free_loops)
    head, components = _orient(tuples)
    crossings = []
    for ci, edges in enumerate(tuples):
        # over-strand runs d -> b when d's head sits at position 3
        sign = 1 if head[edges[3]] == (ci, 3) else -1
        crossings.append(Crossing(edges, sign))
    return Diagram(tuple(crossings), len(head), components + free_loops, free_loops)


def parse_pd(text: str) -> Diagram:
    """Parse ``X(a,b,c,d) ... U`` text (``PD[X[...], ...]`` is accepted too)."""
    tuples, loops = _tokenize(text)
    if not tuples and not loops:
        raise MalformedTerm("empty PD code")
    return from_tuples(tuples, loops)


def mirror(diagram: Diagram) -> Diagram:
    """Swap over and under at every crossing.

    The planar cyclic order is untouched; only the starting slot moves to the
    new incoming under-strand.
    """
    out = []
    for c in diagram.crossings:
        a, b, cc, d = c.edges
        edges = (d, a, b, cc) if c.positive else (b, cc, d, a)
        out.append(Crossing(edges, -c.sign))
    return Diagram(tuple(out), diagram.n_edges, diagram.components, diagram.free_loops)


def canonical_rotations(diagram: Diagram) -> frozenset:
    """Crossing set modulo cyclic rotation of each 4-tuple."""
    def key(edges):
        return min(edges[k:] + edges[:k] for k in range(4))
    return frozenset((key(c.edges), c.sign) for c in diagram.crossings) | {("U", diagram.free_loops)}


def braid_closure(word: Sequence[int], strands: int) -> Diagram:
    """PD code of the closure of a braid word.

    Generator ``k`` (1-based) crosses strands ``k`` and ``k+1`` with a
    positive crossing; ``-k`` is its inverse.  Strands untouched by the word become free loops.
    """
    current = list(range(1, strands + 1))
    next_label = strands + 1
    raw = []
    for g in word:
        k = abs(g) - 1
        if not 0 <= k < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        a, b = current[k], current[k + 1]
        tl, tr = next_label, next_label + 1
        next_label += 2
        # counterclockwise from bottom-left: a, b, top-right, top-left
        if g > 0:
            raw.append([b, tr, tl, a])  # strand b -> tl passes under
        else:
            raw.append([a, b, tr, tl])  # strand a -> tr passes under
        current[k], current[k + 1] = tl, tr

    alias = {}
    for p in range(strands):
        if current[p] != p + 1:
            alias[current[p]] = p + 1
    used = sorted({e for t in raw for e in (alias.get(v, v) for v in t)})
    relabel = {e: i + 1 for i, e in enumerate(used)}
    tuples = [tuple(relabel[alias.get(v, v)] for v in t) for t in raw]
    loops = sum(1 for p in range(strands) if current[p] == p + 1)
    return from_tuples(tuples, loops)


def random_braid_diagram(max_crossings: int, rng: random.Random, strands: int | None = None) -> Diagram:
    if strands is None:
        strands = rng.randint(2, 4)
    n = rng.randint(1, max_crossings)
    word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(n)]
    return braid_closure(word, strands)
