"""Sparse bivariate Laurent polynomials over exact rationals.

The ring is Q[l, l^-1, m, m^-1] with variables rendered as lambda and mu.
Terms live in a dict keyed by the exponent pair (e_lambda, e_mu); zero
coefficients are never stored.  Coefficients are Fraction or plain int
(ints keep the hot multiplication loops on fast integer arithmetic).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from ..errors import InexactDivisionError, NotAUnitError

Scalar = Union[int, Fraction]

_SUP = "⁰¹²³⁴⁵⁶⁷⁸⁹"


def _normalize_scalar(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _scalar_div(a: Scalar, b: Scalar) -> Scalar:
    return _normalize_scalar(Fraction(a) / Fraction(b))


class LaurentPoly:
    """Immutable sparse Laurent polynomial in two variables."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        canon: dict[tuple[int, int], Scalar] = {}
        if terms:
            for (el, em), c in terms.items():
                c = _normalize_scalar(c)
                if c != 0:
                    canon[(int(el), int(em))] = c
        self._terms = canon

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def mono(cls, c: Scalar, el: int, em: int) -> "LaurentPoly":
        return cls({(el, em): c})

    @classmethod
    def lam(cls, e: int = 1) -> "LaurentPoly":
        return cls({(e, 0): 1})

    @classmethod
    def mu(cls, e: int = 1) -> "LaurentPoly":
        return cls({(0, e): 1})

    # ------------------------------------------------------------------
    # predicates and views

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {e: Fraction(c) for e, c in self._terms.items()}

    def constant_value(self) -> Fraction:
        """The rational value, assuming the polynomial is constant."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) != {(0, 0)}:
            raise ValueError("not a constant Laurent polynomial")
        return Fraction(self._terms[(0, 0)])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset((e, Fraction(c)) for e, c in self._terms.items()))

    # ------------------------------------------------------------------
    # ring arithmetic

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, int], Scalar] = {}
        for (el1, em1), c1 in a.items():
            for (el2, em2), c2 in b.items():
                e = (el1 + el2, em1 + em2)
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def unit_inverse(self) -> "LaurentPoly":
        """Invert a monomial; the only units of the Laurent ring."""
        if len(self._terms) != 1:
            raise NotAUnitError("only nonzero monomials are invertible")
        ((el, em), c), = self._terms.items()
        return LaurentPoly({(-el, -em): _scalar_div(1, c)})

    def sigma(self) -> "LaurentPoly":
        """Substitute lambda -> lambda^-1 and mu -> mu^-1."""
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {(-el, -em): c for (el, em), c in self._terms.items()}
        return res

    # ------------------------------------------------------------------
    # evaluation and exact division

    def evaluate(self, lam0: Fraction, mu0: Fraction) -> Fraction:
        lam0, mu0 = Fraction(lam0), Fraction(mu0)
        lpows: dict[int, Fraction] = {}
        mpows: dict[int, Fraction] = {}
        total = Fraction(0)
        for (el, em), c in self._terms.items():
            lp = lpows.get(el)
            if lp is None:
                lp = lpows[el] = lam0 ** el
            mp = mpows.get(em)
            if mp is None:
                mp = mpows[em] = mu0 ** em
            total += Fraction(c) * lp * mp
        return total

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / divisor; raises InexactDivisionError otherwise.

        Shift both operands to plain-polynomial exponents, then cancel
        leading terms under lex order.  Minimal exponents are additive under
        multiplication in a domain, so the shifted quotient stays polynomial
        and the loop terminates (lex on N^2 is a well-order).
        """
        if not divisor:
            raise ZeroDivisionError("Laurent division by zero")
        if not self:
            return LaurentPoly.zero()
        fl = min(el for el, _ in self._terms)
        fm = min(em for _, em in self._terms)
        gl = min(el for el, _ in divisor._terms)
        gm = min(em for _, em in divisor._terms)
        num = {(el - fl, em - fm): c for (el, em), c in self._terms.items()}
        den = {(el - gl, em - gm): c for (el, em), c in divisor._terms.items()}
        dlead = max(den)
        dcoef = den[dlead]
        quot: dict[tuple[int, int], Scalar] = {}
        while num:
            lead = max(num)
            de = (lead[0] - dlead[0], lead[1] - dlead[1])
            if de[0] < 0 or de[1] < 0:
                raise InexactDivisionError("Laurent division left a remainder")
            c = _scalar_div(num[lead], dcoef)
            quot[de] = c
            for (el, em), dc in den.items():
                e = (el + de[0], em + de[1])
                s = num.get(e, 0) - c * dc
                if s == 0:
                    num.pop(e, None)
                else:
                    num[e] = s
        shift = (fl - gl, fm - gm)
        return LaurentPoly(
            {(el + shift[0], em + shift[1]): c for (el, em), c in quot.items()}
        )

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except InexactDivisionError:
            return False

    # ------------------------------------------------------------------
    # serialization and display

    def to_json(self) -> list[dict]:
        return [
            {"el": el, "em": em, "c": str(Fraction(c))}
            for (el, em), c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "LaurentPoly":
        return cls({(int(d["el"]), int(d["em"])): Fraction(d["c"]) for d in data})

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (el, em), c in sorted(self._terms.items(), reverse=True):
            c = Fraction(c)
            mono = "".join(_render_var(v, e) for v, e in (("λ", el), ("μ", em)) if e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self.pretty()})"


def _render_var(name: str, e: int) -> str:
    if e == 1:
        return name
    sup = ("⁻" if e < 0 else "") + "".join(_SUP[int(d)] for d in str(abs(e)))
    return f"{name}{sup}"
