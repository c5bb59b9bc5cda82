from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from khv.linalg import IntMatrix, matrix_rank


def fraction_rank(rows):
    """Plain Gaussian elimination over Fractions."""
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_examples():
    assert matrix_rank(IntMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert matrix_rank(IntMatrix.from_dense([[2, 4], [1, 2]])) == 1
    assert matrix_rank(IntMatrix(0, 5)) == 0


def test_gf2_differs_on_even_entries():
    m = IntMatrix.from_dense([[2, 0], [0, 1]])
    assert matrix_rank(m) == 2
    assert matrix_rank(m, "GF2") == 1


def test_bounds_checked():
    with pytest.raises(IndexError):
        IntMatrix(2, 2, {(2, 0): 1})


def test_matmul():
    a = IntMatrix.from_dense([[1, 2], [3, 4]])
    b = IntMatrix.from_dense([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [4, 3]]


matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=300, deadline=None)
@given(matrices, st.data())
def test_rank_matches_fraction_elimination(rows, data):
    if len(rows) > 2 and data.draw(st.booleans()):
        a, b = data.draw(st.integers(-3, 3)), data.draw(st.integers(-3, 3))
        rows[0] = [a * x + b * y for x, y in zip(rows[1], rows[2])]
    assert matrix_rank(IntMatrix.from_dense(rows)) == fraction_rank(rows)


def gf2_span_rank(rows):
    """log2 of the number of distinct XOR combinations of the rows."""
    vecs = [sum((v % 2) << c for c, v in enumerate(r)) for r in rows]
    span = {0}
    for v in vecs:
        span |= {s ^ v for s in span}
    return len(span).bit_length() - 1


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_gf2_rank_matches_span_enumeration(rows):
    assert matrix_rank(IntMatrix.from_dense(rows), "GF2") == gf2_span_rank(rows)
