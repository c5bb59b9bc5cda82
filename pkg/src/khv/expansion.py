"""The polynomials v_n(K)(t, x) = [y^n] Kh(K)(t, x e^y) and related series.

Two independent routes are provided: the closed form ``(j^n/n!) rank``
(:func:`v_n`, :func:`v_nj`) and direct substitution of ``q = x e^y`` with
truncated power-series arithmetic (:func:`series_reconstruct`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

from .errors import EmptyPolynomial
from .laurent import Laurent
from .polynomials import JonesPoly, KhPoly, NormalizedJones

DEFAULT_TRUNCATION = 5
MAX_TRUNCATION = 20


class VnPoly(Laurent):
    """Laurent polynomial in ``t, x``; exponent tuples are ``(i, j)``.

    ``n`` records the expansion order when the value came from :func:`v_n`.
    """

    VARS = ("t", "x")
    SORT = (1, 0)
    __slots__ = ("n",)

    def __init__(self, terms=None, n: int | None = None):
        super().__init__(terms)
        self.n = n

    def _like(self, terms):
        return VnPoly(terms)


class TPoly(Laurent):
    VARS = ("t",)
    __slots__ = ()


def _rank_items(ranks: Mapping) -> list[tuple[int, int, int]]:
    if isinstance(ranks, KhPoly):
        return [(i, j, c) for (i, j), c in ranks.items()]
    return [(i, j, r) for (i, j), r in ranks.items()]


def v_nj(ranks: Mapping, n: int, j: int) -> VnPoly:
    """``(j^n / n!) sum_i t^i rank H^{i,j} x^j``."""
    if n < 0:
        raise ValueError("order n must be nonnegative")
    scale = Fraction(j ** n, factorial(n))
    return VnPoly({(i, jj): scale * r for i, jj, r in _rank_items(ranks) if jj == j}, n=n)


def v_n(ranks: Mapping, n: int) -> VnPoly:
    if n < 0:
        raise ValueError("order n must be nonnegative")
    nf = factorial(n)
    return VnPoly({(i, j): Fraction(j ** n, nf) * r for i, j, r in _rank_items(ranks)}, n=n)


def graded_pieces(poly: VnPoly) -> dict[int, VnPoly]:
    """Split ``v_n`` into its ``x^j`` pieces ``v_{n,j}``."""
    out: dict[int, dict] = {}
    for (i, j), c in poly.items():
        out.setdefault(j, {})[(i, j)] = c
    return {j: VnPoly(terms, n=poly.n) for j, terms in sorted(out.items())}


def vassiliev_value(poly: VnPoly) -> Fraction:
    """``v_n(K)(-1, 1)``."""
    return Fraction(poly.evaluate({"t": -1, "x": 1}))


def extremal_term(poly: VnPoly) -> tuple[int, TPoly]:
    """Lowest ``x``-degree and its full ``t``-coefficient."""
    if not poly:
        raise EmptyPolynomial("extremal term of the zero polynomial")
    j_min = poly.min_degree("x")
    return j_min, TPoly({(i,): c for (i, j), c in poly.items() if j == j_min})


# truncated power series in y with exact coefficients

class Series:
    """Power series truncated after ``y^order``; coefficients may be any ring element."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = list(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = 0
            for a in range(k + 1):
                acc = acc + self.coeffs[a] * other.coeffs[k - a]
            out.append(acc)
        return Series(out)

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def scale(self, c) -> "Series":
        return Series([c * a for a in self.coeffs])

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    def __pow__(self, k: int) -> "Series":
        result = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def _exp_unit(order: int, denominator: int, negative: bool) -> Series:
    """Series of ``exp(+-y/denominator)`` from its defining coefficients."""
    step = Fraction(-1 if negative else 1, denominator)
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * step / k)
    return Series(coeffs)


def exp_series(rate: Fraction | int, order: int) -> Series:
    """``exp(rate*y)`` built as a power of ``exp(+-y/den)`` by series multiplication."""
    rate = Fraction(rate)
    unit = _exp_unit(order, rate.denominator, rate < 0)
    return unit ** abs(rate.numerator)


def series_reconstruct(poly: KhPoly, order: int) -> list[VnPoly]:
    """Coefficients of ``y^0..y^order`` in ``Kh(t, x e^y)`` by direct substitution."""
    if order < 0:
        raise ValueError("truncation must be nonnegative")
    rows: list[dict] = [{} for _ in range(order + 1)]
    cache: dict[int, Series] = {}
    for (i, j), c in poly.items():
        if j not in cache:
            cache[j] = exp_series(j, order)
        for n, a in enumerate(cache[j].coeffs):
            if a:
                rows[n][(i, j)] = rows[n].get((i, j), 0) + a * c
    return [VnPoly(row, n=n) for n, row in enumerate(rows)]


def jones_taylor(jones: JonesPoly, order: int) -> list[Fraction]:
    """Taylor coefficients of ``J(e^y)``."""
    total = Series([Fraction(0)] * (order + 1))
    for (k,), c in jones.items():
        total = total + exp_series(k, order).scale(c)
    return total.coeffs


@dataclass(frozen=True)
class BirmanLinSeries:
    coefficients: tuple[Fraction, ...]

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)


def birman_lin(v: NormalizedJones, order: int) -> BirmanLinSeries:
    """``u_0..u_order`` of ``V(e^x)``; stored exponents are doubled, so ``r^(k/2) -> e^(kx/2)``."""
    total = Series([Fraction(0)] * (order + 1))
    for (k,), c in v.items():
        total = total + exp_series(Fraction(k, 2), order).scale(c)
    return BirmanLinSeries(tuple(total.coeffs))
