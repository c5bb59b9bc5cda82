"""Khovanov polynomial, Jones polynomial and the Kauffman-bracket oracle.

Variable conventions: ``delta = -A^2 - A^-2``, framing factor ``(-A^3)^-w``,
``q = -A^-2`` and ``r = q^2`` (so ``r^(1/2) = -q``).  With these, Kh at
``t = -1`` and the bracket route give the same unnormalized ``J(q)`` with
``J(unknot) = q + q^-1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .diagram import Diagram
from .errors import InexactDivision, TooLarge
from .homology import BigradedRanks
from .laurent import Laurent, format_coeff

BRACKET_MAX_CROSSINGS = 16


class KhPoly(Laurent):
    """``sum t^i q^j rank H^{i,j}``; exponent tuples are ``(i, j)``."""

    VARS = ("t", "q")
    SORT = (0, 1)
    __slots__ = ()


class JonesPoly(Laurent):
    """Unnormalized Jones polynomial ``J(q)``."""

    VARS = ("q",)
    __slots__ = ()


class NormalizedJones(Laurent):
    """``V(r)`` with every exponent doubled, so ``r^(1/2)`` is exponent 1."""

    VARS = ("r",)
    __slots__ = ()

    def _monomial_text(self, exp):
        (e,) = exp
        if e == 0:
            return ""
        if e % 2:
            return f"r^({e}/2)"
        return "r" if e == 2 else f"r^{e // 2}"

    @classmethod
    def from_integer_exponents(cls, terms: Mapping[int, int]) -> "NormalizedJones":
        return cls({(2 * e,): c for e, c in terms.items()})


class BracketPoly(Laurent):
    VARS = ("A",)
    __slots__ = ()


def khovanov_polynomial(ranks: Mapping[tuple[int, int], int]) -> KhPoly:
    return KhPoly({(i, j): r for (i, j), r in ranks.items()})


def ranks_from_kh(poly: KhPoly) -> BigradedRanks:
    for exp, c in poly.items():
        if not isinstance(c, int) or c < 0:
            raise ValueError(f"Kh coefficient {c} at {exp} is not a rank")
    return BigradedRanks(dict(poly.items()))


def jones_from_kh(poly: KhPoly) -> JonesPoly:
    out: dict[tuple[int], int] = {}
    for (i, j), c in poly.items():
        out[(j,)] = out.get((j,), 0) + (-1) ** (i % 2) * c
    return JonesPoly(out)


def _count_circles(diagram: Diagram, mask: int) -> int:
    """Trace the smoothing by walking arc endpoints; independent of ``statecube``."""
    partner: dict[tuple[int, int], tuple[int, int]] = {}
    ends: dict[int, list[tuple[int, int]]] = {}
    for k, crossing in enumerate(diagram.crossings):
        a, b, c, d = range(4)
        pairs = ((a, b), (c, d)) if not mask >> k & 1 else ((a, d), (b, c))
        for u, v in pairs:
            partner[(k, u)] = (k, v)
            partner[(k, v)] = (k, u)
        for pos, e in enumerate(crossing.edges):
            ends.setdefault(e, []).append((k, pos))
    along = {}
    for e, (s1, s2) in ends.items():
        along[s1] = s2
        along[s2] = s1
    seen = set()
    circles = 0
    for start in partner:
        if start in seen:
            continue
        circles += 1
        slot = start
        while slot not in seen:
            seen.add(slot)
            other = partner[slot]
            seen.add(other)
            slot = along[other]
    return circles + diagram.free_loops


def kauffman_bracket(diagram: Diagram) -> BracketPoly:
    """``sum_s A^sigma(s) delta^#circles(s)`` with ``<unknot> = delta``."""
    n = len(diagram.crossings)
    if n > BRACKET_MAX_CROSSINGS:
        raise TooLarge(f"{n} crossings exceeds bracket budget of {BRACKET_MAX_CROSSINGS}")
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << n):
        sigma = n - 2 * bin(mask).count("1")
        key = (sigma, _count_circles(diagram, mask))
        counts[key] = counts.get(key, 0) + 1
    delta = BracketPoly({(2,): -1, (-2,): -1})
    powers = {0: BracketPoly.one()}
    total = BracketPoly()
    for (sigma, circles), mult in sorted(counts.items()):
        if circles not in powers:
            powers[circles] = delta ** circles
        total = total + BracketPoly.monomial(sigma) * powers[circles] * mult
    return total


def _bracket_to_q(poly: BracketPoly) -> JonesPoly:
    out = {}
    for (e,), c in poly.items():
        if e % 2:
            raise InexactDivision(f"odd A-exponent {e} cannot be written in q = -A^-2")
        m = e // 2
        # A^(2m) = (A^-2)^(-m) = (-q)^(-m)
        out[(-m,)] = out.get((-m,), 0) + (-1) ** (m % 2) * c
    return JonesPoly(out)


def jones_from_bracket(diagram: Diagram) -> JonesPoly:
    """Unnormalized ``J(q) = (-A^3)^-w <D>`` rewritten in ``q = -A^-2``."""
    w = diagram.writhe
    framing = BracketPoly.monomial(-3 * w, coeff=(-1) ** (w % 2))
    return _bracket_to_q(framing * kauffman_bracket(diagram))


def normalize_jones(j: JonesPoly) -> NormalizedJones:
    """``V(r) = J(q) / (q + q^-1)`` with ``q = -r^(1/2)``."""
    try:
        w = j.exact_divide(JonesPoly({(1,): 1, (-1,): 1}))
    except ArithmeticError as exc:
        raise InexactDivision(str(exc)) from None
    return NormalizedJones({(k,): (-1) ** (k % 2) * c for (k,), c in w.items()})


def unnormalize_jones(v: NormalizedJones) -> JonesPoly:
    w = JonesPoly({(k,): (-1) ** (k % 2) * c for (k,), c in v.items()})
    return w * JonesPoly({(1,): 1, (-1,): 1})


def check_skein_triple(jp: JonesPoly, jm: JonesPoly, j0: JonesPoly) -> bool:
    """``q^-2 J(L+) - q^2 J(L-) == (q^-1 - q) J(L0)``, tested exactly."""
    q = JonesPoly.monomial
    return q(-2) * jp - q(2) * jm == (q(-1) - q(1)) * j0


def check_skein_triple_normalized(vp: NormalizedJones, vm: NormalizedJones, v0: NormalizedJones) -> bool:
    """``r^-1 V(L+) - r V(L-) == (r^(1/2) - r^(-1/2)) V(L0)`` on doubled exponents."""
    r = NormalizedJones.monomial
    return r(-2) * vp - r(2) * vm == (r(1) - r(-1)) * v0


def to_latex(poly: Laurent, reverse: bool = True) -> str:
    """Fraction layout in the style of a printed table, e.g. ``\\frac{125}{6 t^2 x^5}``."""
    if not poly:
        return "0"
    out = ""
    for exp, c in poly.sorted_terms(reverse=reverse):
        c = Fraction(c)
        num_parts, den_parts = [], []
        for var, e in sorted(zip(poly.VARS, exp)):
            if e == 0:
                continue
            mag = abs(e)
            text = var if mag == 1 else (f"{var}^{mag}" if mag < 10 else f"{var}^{{{mag}}}")
            (num_parts if e > 0 else den_parts).append(text)
        sign = "-" if c < 0 else "+"
        n, d = abs(c.numerator), c.denominator
        num = " ".join(([str(n)] if n != 1 or not num_parts else []) + num_parts)
        den = " ".join(([str(d)] if d != 1 else []) + den_parts)
        term = f"\\frac{{{num}}}{{{den}}}" if den else num
        if not out:
            out = ("-" if sign == "-" else "") + term
        else:
            out += sign + term
    return out


__all__ = [
    "BracketPoly", "JonesPoly", "KhPoly", "NormalizedJones",
    "check_skein_triple", "check_skein_triple_normalized", "format_coeff",
    "jones_from_bracket", "jones_from_kh", "kauffman_bracket", "khovanov_polynomial",
    "normalize_jones", "ranks_from_kh", "to_latex", "unnormalize_jones",
]
