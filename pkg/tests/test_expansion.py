from fractions import Fraction
from math import factorial

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from khv.errors import EmptyPolynomial
from khv.expansion import (
    TPoly, VnPoly, birman_lin, exp_series, extremal_term, graded_pieces, jones_taylor,
    series_reconstruct, v_n, v_nj, vassiliev_value,
)
from khv.homology import BigradedRanks
from khv.polynomials import KhPoly, NormalizedJones, jones_from_kh, khovanov_polynomial

y = sp.symbols("y")

UNKNOT = BigradedRanks({(0, 1): 1, (0, -1): 1})
TREFOIL = BigradedRanks({(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1})
FIG8 = BigradedRanks({(-2, -5): 1, (-1, -1): 1, (0, -1): 1, (0, 1): 1, (1, 1): 1, (2, 5): 1})


def V(text):
    return VnPoly.from_text(text)


def taylor(expr, n):
    """y^n coefficient via sympy series."""
    return Fraction(str(sp.series(expr, y, 0, n + 1).removeO().coeff(y, n)))


def test_v_nj_examples():
    assert v_nj(TREFOIL, 1, 9) == V("9*t^3*x^9")
    assert v_nj(UNKNOT, 2, -1) == V("1/2*x^-1")
    assert v_nj(TREFOIL, 0, 5) == V("t^2*x^5")
    assert v_nj(TREFOIL, 3, 7) == VnPoly()


def test_v_n_examples():
    assert v_n(TREFOIL, 1) == V("9*t^3*x^9 + 5*t^2*x^5 + 3*x^3 + x")
    assert v_n(FIG8, 3) == V("125/6*t^2*x^5 - 125/6*t^-2*x^-5 + 1/6*t*x - 1/6*t^-1*x^-1 + 1/6*x - 1/6*x^-1")
    for n in range(8):
        assert v_n(UNKNOT, n) == VnPoly({(0, 1): Fraction(1, factorial(n)),
                                         (0, -1): Fraction((-1) ** n, factorial(n))})


def test_v_n_sums_graded_pieces():
    p = v_n(FIG8, 4)
    pieces = graded_pieces(p)
    assert sum(pieces.values(), VnPoly()) == p
    for j, piece in pieces.items():
        assert piece == v_nj(FIG8, 4, j)


def test_vassiliev_examples():
    # 4_1 v_2 row at (t, x) = (-1, 1)
    row = V("25/2*t^2*x^5 + 25/2*t^-2*x^-5 + 1/2*t*x + 1/2*t^-1*x^-1 + 1/2*x + 1/2*x^-1")
    assert vassiliev_value(row) == 25
    assert vassiliev_value(v_n(FIG8, 2)) == 25
    assert taylor(sp.exp(5 * y) + sp.exp(-5 * y), 2) == 25
    assert vassiliev_value(v_n(UNKNOT, 3)) == 0
    assert vassiliev_value(v_n(TREFOIL, 2)) == Fraction(-81, 2) + Fraction(25, 2) + Fraction(9, 2) + Fraction(1, 2)
    assert vassiliev_value(v_n(TREFOIL, 2)) == -23


def test_extremal_examples():
    assert extremal_term(v_n(TREFOIL, 5)) == (1, TPoly({(0,): Fraction(1, 120)}))
    for n in range(6):
        assert extremal_term(v_n(UNKNOT, n)) == (-1, TPoly({(0,): Fraction((-1) ** n, factorial(n))}))
    with pytest.raises(EmptyPolynomial):
        extremal_term(VnPoly())


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_extremal_witness_family(m):
    ranks = BigradedRanks({(-2 * m, -4 * m - 1): 1, (0, 1): 1, (0, 3): 2, (1, 5): 1})
    for n in range(6):
        j_min, coeff = extremal_term(v_n(ranks, n))
        assert j_min == -4 * m - 1
        assert coeff == TPoly({(-2 * m,): Fraction((-4 * m - 1) ** n, factorial(n))})


def test_series_reconstruct_examples():
    unknot = khovanov_polynomial(UNKNOT)
    rows = series_reconstruct(unknot, 2)
    assert rows == [V("x + x^-1"), V("x - x^-1"), V("1/2*x + 1/2*x^-1")]
    p = KhPoly.from_text("q^9*t^3 + q^5*t^2 + q^3 + q")
    assert series_reconstruct(p, 0)[0] == VnPoly({k: c for k, c in p.items()})


def test_exp_series_against_factorials():
    for rate in (Fraction(3), Fraction(-4), Fraction(5, 2), Fraction(-1, 2), Fraction(0)):
        coeffs = exp_series(rate, 7).coeffs
        assert coeffs == [rate ** k / factorial(k) for k in range(8)]


def test_jones_taylor_against_sympy():
    j = jones_from_kh(khovanov_polynomial(TREFOIL))
    expr = sp.exp(y) + sp.exp(3 * y) + sp.exp(5 * y) - sp.exp(9 * y)
    got = jones_taylor(j, 6)
    assert got == [taylor(expr, n) for n in range(7)]


def test_birman_lin_examples():
    assert list(birman_lin(NormalizedJones.one(), 4)) == [1, 0, 0, 0, 0]
    tref = NormalizedJones.from_integer_exponents({1: 1, 3: 1, -0: 0, 4: -1})
    u = birman_lin(tref, 3)
    assert (u[0], u[1], u[2]) == (1, 0, -3)
    fig8 = NormalizedJones.from_integer_exponents({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    u = birman_lin(fig8, 3)
    assert (u[0], u[1], u[2]) == (1, 0, 3)


def test_birman_lin_half_integer_against_sympy():
    x = sp.symbols("x")
    v = NormalizedJones({(1,): -1, (5,): -1})  # positive Hopf link
    expr = -sp.exp(x / 2) - sp.exp(5 * x / 2)
    expected = [Fraction(str(sp.series(expr, x, 0, 6).removeO().coeff(x, n))) for n in range(6)]
    assert list(birman_lin(v, 5)) == expected


ranks_strategy = st.dictionaries(
    st.tuples(st.integers(-6, 6), st.integers(-15, 15)), st.integers(1, 3), min_size=1, max_size=8
)


@settings(max_examples=150, deadline=None)
@given(ranks_strategy, st.integers(0, 7))
def test_closed_form_equals_substitution(data, order):
    ranks = BigradedRanks(data)
    rows = series_reconstruct(khovanov_polynomial(ranks), order)
    assert rows == [v_n(ranks, n) for n in range(order + 1)]


@settings(max_examples=100, deadline=None)
@given(ranks_strategy, st.integers(1, 6))
def test_extremal_separates_distinct_minimal_degrees(data, n):
    # x^0 terms vanish for n >= 1, so keep nonzero gradings only
    a = BigradedRanks({k: r for k, r in data.items() if k[1]})
    if not a:
        return
    j_min = min(j for _, j in a)
    b = BigradedRanks({**a, (0, j_min - 2): 1})
    if j_min - 2 == 0:
        return
    assert extremal_term(v_n(a, n)) != extremal_term(v_n(b, n))


@settings(max_examples=100, deadline=None)
@given(ranks_strategy, st.integers(0, 6))
def test_extremal_is_lowest_graded_piece(data, n):
    ranks = BigradedRanks(data)
    p = v_n(ranks, n)
    if not p:
        return
    j_min, coeff = extremal_term(p)
    piece = v_nj(ranks, n, j_min)
    assert VnPoly({(i, j_min): c for (i,), c in coeff.items()}) == piece
