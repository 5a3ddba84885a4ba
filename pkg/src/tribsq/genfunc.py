"""Rational generating functions and their exact power-series expansion."""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable

import numpy as np

from .errors import NonUnitConstantTerm
from .recurrence import LinearRecurrence
from .sequence import SequenceSpec, term

__all__ = [
    "Polynomial",
    "RationalFunction",
    "lemma2_generating_function",
    "theorem3_squares_genfunc",
    "tribonacci_squares_genfunc",
    "series_coefficients",
    "convergence_radius_estimate",
]


class Polynomial:
    """Univariate polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> float:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        other = _as_poly(other)
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.coeffs == _as_poly(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Polynomial({[_fmt(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            else:
                body = _fmt(mag) + ("*" + mono if mono else "")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (int, Fraction)):
        return Polynomial([p])
    raise TypeError(f"cannot treat {type(p).__name__} as a polynomial")


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_rational(s) -> Fraction:
    return Fraction(s) if isinstance(s, str) else Fraction(s)


class RationalFunction:
    """``numerator / denominator``, kept unreduced.

    Two rational functions are equal when ``n1 * d2 == n2 * d1``.
    """

    def __init__(self, numerator, denominator):
        self.numerator = _as_poly(numerator)
        self.denominator = _as_poly(denominator)
        if self.denominator.is_zero():
            raise ZeroDivisionError("zero denominator")

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)

    def __repr__(self):
        return f"RationalFunction(({self.numerator}) / ({self.denominator}))"

    def to_dict(self) -> dict:
        return {
            "num": [_fmt(c) for c in self.numerator.coeffs],
            "den": [_fmt(c) for c in self.denominator.coeffs],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RationalFunction":
        return cls(
            Polynomial(_parse_rational(c) for c in d["num"]),
            Polynomial(_parse_rational(c) for c in d["den"]),
        )


def lemma2_generating_function(rec: LinearRecurrence) -> RationalFunction:
    """Generating function ``sum(X[j] x**j, j >= 0)`` of a recurrence.

    The numerator only involves the seed values ``X[-1] .. X[-order]``.
    """
    num = Polynomial()
    den = Polynomial([1])
    for c, f in rec.taps:
        # x^c * f * sum_{j=1..c} x^-j X[-j]
        num += Polynomial([f * rec[-(c - i)] for i in range(c)])
        den -= Polynomial.monomial(c, f)
    return RationalFunction(num, den)


SQUARES_DENOMINATOR = Polynomial([1, -3, -1, -1]) * Polynomial([1, 1, 1, -1])

# numerator weights of T[-1]^2 .. T[-6]^2
_SQUARES_NUMERATOR = (
    Polynomial([2, 3, 6, -1, 0, -1]),
    Polynomial([3, 6, -1, 0, -1]),
    Polynomial([6, -1, 0, -1]),
    Polynomial([-1, 0, -1]),
    Polynomial([0, -1]),
    Polynomial([-1]),
)


def theorem3_squares_genfunc(spec: SequenceSpec) -> RationalFunction:
    """Generating function of ``T[j]**2`` for an arbitrary seed."""
    num = Polynomial()
    for i, weight in enumerate(_SQUARES_NUMERATOR, start=1):
        num += weight * (term(spec, -i) ** 2)
    return RationalFunction(num, SQUARES_DENOMINATOR)


def tribonacci_squares_genfunc() -> RationalFunction:
    """``x(1 - x - x^2 - x^3) / ((1 - 3x - x^2 - x^3)(1 + x + x^2 - x^3))``."""
    return RationalFunction(Polynomial([0, 1, -1, -1, -1]), SQUARES_DENOMINATOR)


def series_coefficients(rf: RationalFunction, count: int) -> list[Fraction]:
    """First ``count`` Taylor coefficients of ``rf`` at 0, by long division."""
    if count < 1:
        raise ValueError("count must be positive")
    d0 = rf.denominator[0]
    if d0 == 0:
        raise NonUnitConstantTerm("denominator vanishes at x = 0")
    den = [c / d0 for c in rf.denominator.coeffs]
    num = [rf.numerator[i] / d0 for i in range(count)]
    out: list[Fraction] = []
    for n in range(count):
        acc = num[n]
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        out.append(acc)
    return out


def convergence_radius_estimate(rf: RationalFunction) -> float:
    """Smallest modulus among denominator roots not cancelled by the numerator.

    Floating point; it only informs where the infinite series can be summed
    numerically and never gates the exact routines.
    """
    den = rf.denominator
    if den.degree < 1:
        raise ValueError("constant denominator has no finite radius")
    roots = np.roots([float(c) for c in reversed(den.coeffs)])
    num_coeffs = [float(c) for c in reversed(rf.numerator.coeffs)] or [0.0]
    scale = max(1.0, max(abs(c) for c in num_coeffs))
    poles = [z for z in roots if abs(np.polyval(num_coeffs, z)) > 1e-9 * scale]
    if not poles:
        return float("inf")
    return float(min(abs(z) for z in poles))
