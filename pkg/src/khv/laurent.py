"""Sparse multivariate Laurent polynomials with exact coefficients.

Coefficients are ``int`` or ``fractions.Fraction``; exponents are integer
tuples aligned with ``VARS``.  Subclasses fix the variable names and the
canonical term order used when printing.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import ClassVar, Iterable, Mapping

Exponent = tuple[int, ...]


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient {c!r} is not an exact rational")
    return c


def format_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Laurent:
    VARS: ClassVar[tuple[str, ...]] = ("x",)
    # exponent positions compared when sorting terms, most significant first
    SORT: ClassVar[tuple[int, ...]] = (0,)
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = (exp,) if isinstance(exp, int) else tuple(exp)
            if len(exp) != len(self.VARS):
                raise ValueError(f"exponent {exp} does not match variables {self.VARS}")
            c = _normalize(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # construction helpers
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0,) * len(cls.VARS): 1})

    @classmethod
    def monomial(cls, *exps, coeff=1):
        return cls({tuple(exps): coeff})

    def _like(self, terms):
        return type(self)(terms)

    # mapping protocol
    def __getitem__(self, exp):
        exp = (exp,) if isinstance(exp, int) else tuple(exp)
        return self.terms.get(exp, 0)

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Laurent):
            if other.VARS != self.VARS:
                raise TypeError(f"cannot combine {self.VARS} with {other.VARS}")
            return other
        if isinstance(other, Rational):
            return self._like({(0,) * len(self.VARS): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, Laurent):
            return self._like({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            return self._like({tuple(-a * -k for a in e): Fraction(1) / Fraction(c) ** -k})
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.VARS == other.VARS and self.terms == other.terms
        if isinstance(other, Rational):
            return self.terms == ({(0,) * len(self.VARS): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.VARS, frozenset(self.terms.items())))

    def exact_divide(self, other: "Laurent") -> "Laurent":
        """Univariate Laurent division; raises ``ArithmeticError`` unless exact."""
        if len(self.VARS) != 1:
            raise TypeError("exact_divide is univariate only")
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return self._like({})
        # shift both to ordinary polynomials with nonzero constant term
        a_low = min(self.terms)[0]
        b_low = min(other.terms)[0]
        rem = {e - a_low: Fraction(c) for (e,), c in self.terms.items()}
        div = {e - b_low: c for (e,), c in other.terms.items()}
        b_deg = max(div)
        lead = div[b_deg]
        quotient = {}
        while rem and max(rem) >= b_deg:
            top = max(rem)
            c = rem[top] / lead
            shift = top - b_deg
            quotient[(shift + a_low - b_low,)] = c
            for e, dc in div.items():
                v = rem.get(e + shift, 0) - c * dc
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return self._like(quotient)

    # evaluation / substitution
    def evaluate(self, values: Mapping[str, object]):
        """Substitute values for some variables; returns a scalar if all are fixed."""
        keep = [k for k, v in enumerate(self.VARS) if v not in values]
        out: dict[Exponent, object] = {}
        for e, c in self.terms.items():
            value = c
            for k, var in enumerate(self.VARS):
                if var in values:
                    value = value * Fraction(values[var]) ** e[k]
            key = tuple(e[k] for k in keep)
            out[key] = out.get(key, 0) + value
        if not keep:
            return _normalize(Fraction(out.get((), 0)))
        return {k: _normalize(Fraction(v)) for k, v in out.items() if v}

    def max_degree(self, var: str) -> int:
        k = self.VARS.index(var)
        return max(e[k] for e in self.terms)

    def min_degree(self, var: str) -> int:
        k = self.VARS.index(var)
        return min(e[k] for e in self.terms)

    # text form
    def sort_key(self, exp: Exponent):
        return tuple(exp[k] for k in self.SORT)

    def sorted_terms(self, reverse: bool = False):
        return sorted(self.terms.items(), key=lambda item: self.sort_key(item[0]), reverse=reverse)

    def _monomial_text(self, exp: Exponent) -> str:
        parts = []
        for var, e in sorted(zip(self.VARS, exp)):
            if e == 1:
                parts.append(var)
            elif e:
                parts.append(f"{var}^{e}")
        return "*".join(parts)

    def to_text(self, reverse: bool = False) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms(reverse):
            mono = self._monomial_text(exp)
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = format_coeff(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_coeff(mag)}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"

    @classmethod
    def from_text(cls, text: str):
        return cls(parse_terms(text, cls.VARS))

    # term-list form used in JSON
    def to_term_list(self) -> list[dict]:
        out = []
        for exp, c in self.sorted_terms():
            c = Fraction(c)
            entry = dict(zip(self.VARS, exp))
            entry["coeff"] = [c.numerator, c.denominator]
            out.append(entry)
        return out

    @classmethod
    def from_term_list(cls, terms: Iterable[Mapping]):
        out = {}
        for entry in terms:
            num, den = entry["coeff"]
            exp = tuple(int(entry.get(v, 0)) for v in cls.VARS)
            out[exp] = out.get(exp, 0) + Fraction(int(num), int(den))
        return cls(out)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\d+(?:/\d+)?)?\s*\*?\s*
        (?P<mono>(?:[A-Za-z]\w*(?:\^\(?-?\d+\)?)?\s*\*?\s*)*)""",
    re.VERBOSE,
)
_FACTOR_RE = re.compile(r"([A-Za-z]\w*)(?:\^\(?(-?\d+)\)?)?")


def parse_terms(text: str, variables: tuple[str, ...]) -> dict[Exponent, Fraction]:
    """Parse ``"19683/40*t^3*x^9 - 1/120*x^-1 + 2"`` into an exponent map."""
    text = text.strip()
    out: dict[Exponent, Fraction] = {}
    if text in ("", "0"):
        return out
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 20]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator near {text[pos:pos + 20]!r}")
        if m.group("coeff") is None and not m.group("mono").strip():
            raise ValueError(f"empty term near {text[pos:pos + 20]!r}")
        first = False
        pos = m.end()
        c = Fraction(m.group("coeff") or 1)
        if m.group("sign") == "-":
            c = -c
        exp = [0] * len(variables)
        for var, e in _FACTOR_RE.findall(m.group("mono")):
            if var not in variables:
                raise ValueError(f"unknown variable {var!r}; expected one of {variables}")
            exp[variables.index(var)] += int(e) if e else 1
        key = tuple(exp)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}
