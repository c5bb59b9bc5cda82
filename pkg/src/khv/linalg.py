"""Exact rank of sparse integer matrices."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class IntMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (r, c), v in list(self.entries.items()):
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v == 0:
                del self.entries[r, c]

    @classmethod
    def from_dense(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        entries = {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row) if v}
        return cls(len(rows), ncols, entries)

    def add(self, r: int, c: int, v: int):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
        total = self.entries.get((r, c), 0) + v
        if total:
            self.entries[r, c] = total
        else:
            self.entries.pop((r, c), None)

    def row_dicts(self) -> list[dict[int, int]]:
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        right = other.row_dicts()
        out = IntMatrix(self.rows, other.cols)
        for (r, k), v in self.entries.items():
            for c, w in right[k].items():
                out.add(r, c, v * w)
        return out

    def is_zero(self) -> bool:
        return not self.entries


def _bareiss_rank(rows: list[dict[int, int]]) -> int:
    """Fraction-free elimination on sparse rows.

    Each pivot step replaces ``row`` by ``(p*row - f*pivot_row) / prev`` where
    ``prev`` is the previous pivot; by Sylvester's identity the division is exact.
    """
    rows = [r for r in rows if r]
    rank = 0
    prev = 1
    while rows:
        # pivot on the shortest row to limit fill-in
        idx = min(range(len(rows)), key=lambda k: len(rows[k]))
        pivot_row = rows.pop(idx)
        col = min(pivot_row)
        p = pivot_row[col]
        rank += 1
        new_rows = []
        for row in rows:
            f = row.get(col, 0)
            combined = {}
            for c in pivot_row.keys() | row.keys() if f else row.keys():
                v = p * row.get(c, 0) - f * pivot_row.get(c, 0)
                if v:
                    q, rem = divmod(v, prev)
                    assert rem == 0, "Bareiss division not exact"
                    combined[c] = q
            if combined:
                new_rows.append(combined)
        rows = new_rows
        prev = p
    return rank


def _gf2_rank(rows: list[dict[int, int]]) -> int:
    vectors = []
    for row in rows:
        bits = 0
        for c, v in row.items():
            if v % 2:
                bits |= 1 << c
        if bits:
            vectors.append(bits)
    rank = 0
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                rank += 1
                break
    return rank


def matrix_rank(m: IntMatrix, ring: str = "rationals") -> int:
    if m.rows == 0 or m.cols == 0 or not m.entries:
        return 0
    if ring in ("rationals", "Q", "QQ"):
        return _bareiss_rank(m.row_dicts())
    if ring in ("GF2", "gf2", "Z2"):
        return _gf2_rank(m.row_dicts())
    raise ValueError(f"unknown ring {ring!r}")
