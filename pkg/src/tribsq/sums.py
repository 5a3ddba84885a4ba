"""Closed forms for partial sums of squared generalized Tribonacci numbers.

Every closed form here has a brute-force twin in :func:`direct_sum_oracle`,
which iterates the plain recurrence itself and never touches the term cache.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from .errors import DenominatorZero, VariantSpecMismatch
from .recurrence import LinearRecurrence
from .sequence import TRIBONACCI, SequenceSpec, term

__all__ = [
    "SumVariant",
    "SumReport",
    "lemma1_partial_sum",
    "theorem2_weighted_square_sum",
    "theorem2_denominator",
    "special_sum",
    "scaled_special_sum",
    "direct_sum_oracle",
    "compare",
    "compare_weighted",
    "reports_to_csv",
]


class SumVariant(Enum):
    """Partial sums with a printed closed form.

    Each value is ``(tag, lower bound, tribonacci-only, scale)``; the tag keeps
    members with equal metadata from collapsing into aliases.  ``scale`` is
    the constant the closed form keeps on its left-hand side.
    """

    GEN_ALL = (0, 0, False, 8)
    GEN_ALT = (1, 0, False, 8)
    TRIB_ALL = (2, 0, True, 8)
    TRIB_ALT = (3, 0, True, 8)
    EVEN = (4, 0, True, 8)
    ODD = (5, 1, True, 8)
    ALT_EVEN = (6, 0, True, 8)
    ALT_ODD = (7, 1, True, 8)
    QUAD_0 = (8, 0, True, 16)
    QUAD_2 = (9, 1, True, 16)
    QUAD_3 = (10, 1, True, 16)
    QUAD_1 = (11, 0, True, 16)
    J_WEIGHT = (12, 0, False, 8)
    J2_WEIGHT = (13, 0, False, 8)

    def __init__(self, _tag, lower, tribonacci_only, scale):
        self.lower = lower
        self.tribonacci_only = tribonacci_only
        self.scale = scale

    @classmethod
    def parse(cls, name: str) -> "SumVariant":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown sum variant {name!r}") from None


# (sign, index) of the j-th summand: summand = sign(j) * weight(j) * T[index(j)]**2
_INDEX_MAP: dict[SumVariant, tuple[Callable[[int], int], Callable[[int], int], Callable[[int], int]]] = {
    SumVariant.GEN_ALL: (lambda j: 1, lambda j: j, lambda j: 1),
    SumVariant.GEN_ALT: (lambda j: (-1) ** j, lambda j: j, lambda j: 1),
    SumVariant.TRIB_ALL: (lambda j: 1, lambda j: j, lambda j: 1),
    SumVariant.TRIB_ALT: (lambda j: (-1) ** j, lambda j: j, lambda j: 1),
    SumVariant.EVEN: (lambda j: 1, lambda j: 2 * j, lambda j: 1),
    SumVariant.ODD: (lambda j: 1, lambda j: 2 * j - 1, lambda j: 1),
    SumVariant.ALT_EVEN: (lambda j: (-1) ** j, lambda j: 2 * j, lambda j: 1),
    SumVariant.ALT_ODD: (lambda j: (-1) ** (j - 1), lambda j: 2 * j - 1, lambda j: 1),
    SumVariant.QUAD_0: (lambda j: 1, lambda j: 4 * j, lambda j: 1),
    SumVariant.QUAD_2: (lambda j: 1, lambda j: 4 * j - 2, lambda j: 1),
    SumVariant.QUAD_3: (lambda j: 1, lambda j: 4 * j - 3, lambda j: 1),
    SumVariant.QUAD_1: (lambda j: 1, lambda j: 4 * j - 1, lambda j: 1),
    SumVariant.J_WEIGHT: (lambda j: 1, lambda j: j, lambda j: j),
    SumVariant.J2_WEIGHT: (lambda j: 1, lambda j: j, lambda j: j * j),
}


def _poly(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


def lemma1_partial_sum(rec: LinearRecurrence, x, k: int) -> Fraction:
    """``sum(x**j * X[j] for j in 0..k)`` from finitely many boundary values.

    ``x == 0`` short-circuits to ``X[0]``; otherwise the formula needs
    ``x**-j`` for the seed terms.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = Fraction(x)
    if x == 0:
        return Fraction(rec[0])
    den = 1 - sum(f * x**c for c, f in rec.taps)
    if den == 0:
        raise DenominatorZero(f"x={x} is a root of 1 - sum(f_m x^c_m)")
    num = Fraction(0)
    for c, f in rec.taps:
        head = sum(x ** (-j) * rec[-j] for j in range(1, c + 1))
        tail = sum(x**j * rec[j] for j in range(k - c + 1, k + 1))
        num += x**c * f * (head - tail)
    return num / den


# coefficient polynomials (ascending powers of x) multiplying
# (T[-i]^2 - x^(k+1) T[k+1-i]^2) for i = 1..6
_THM2_POLYS = (
    (2, 3, 6, -1, 0, -1),
    (3, 6, -1, 0, -1),
    (6, -1, 0, -1),
    (-1, 0, -1),
    (0, -1),
    (-1,),
)
_CUBIC_A = (1, -3, -1, -1)  # 1 - 3x - x^2 - x^3
_CUBIC_B = (1, 1, 1, -1)  # 1 + x + x^2 - x^3


def theorem2_denominator(x) -> Fraction:
    x = Fraction(x)
    return _poly(_CUBIC_A, x) * _poly(_CUBIC_B, x)


def theorem2_weighted_square_sum(spec: SequenceSpec, x, k: int) -> Fraction:
    """``sum(x**j * T[j]**2 for j in 0..k)`` for any rational ``x``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = Fraction(x)
    if x == 0:
        return Fraction(term(spec, 0) ** 2)
    den = theorem2_denominator(x)
    if den == 0:
        raise DenominatorZero(f"x={x} is a root of (1-3x-x^2-x^3)(1+x+x^2-x^3)")
    xk1 = x ** (k + 1)
    num = Fraction(0)
    for i, coeffs in enumerate(_THM2_POLYS, start=1):
        num += _poly(coeffs, x) * (term(spec, -i) ** 2 - xk1 * term(spec, k + 1 - i) ** 2)
    return num / den


def _gen_all(q, k):
    return (
        9 * (q(k) - q(-1)) + 7 * (q(k - 1) - q(-2)) + 4 * (q(k - 2) - q(-3))
        - 2 * (q(k - 3) - q(-4)) - (q(k - 4) - q(-5)) - (q(k - 5) - q(-6))
    )


def _gen_alt(q, k):
    s = (-1) ** k
    return (
        7 * (q(-1) + s * q(k)) - 5 * (q(-2) + s * q(k - 1)) + 8 * (q(-3) + s * q(k - 2))
        - 2 * (q(-4) + s * q(k - 3)) + (q(-5) + s * q(k - 4)) - (q(-6) + s * q(k - 5))
    )


def _trib_all(q, k):
    return 9 * q(k) + 7 * q(k - 1) + 4 * q(k - 2) - 2 * q(k - 3) - q(k - 4) - q(k - 5) + 2


def _trib_alt(q, k):
    return (-1) ** k * (7 * q(k) - 5 * q(k - 1) + 8 * q(k - 2) - 2 * q(k - 3) + q(k - 4) - q(k - 5)) - 2


def _even(q, k):
    m = 2 * k
    return 8 * q(m) + q(m - 1) + 6 * q(m - 2) - 2 * q(m - 3) - q(m - 5)


def _odd(q, k):
    m = 2 * k
    return q(m) + 6 * q(m - 1) - 2 * q(m - 2) - q(m - 4) + 2


def _alt_even(q, k):
    m = 2 * k
    return (-1) ** k * (7 * q(m) + 3 * q(m - 1) - 6 * q(m - 2) - q(m - 4) + q(m - 5)) + 2


def _alt_odd(q, k):
    m = 2 * k
    return (-1) ** k * (q(m) - 9 * q(m - 1) - 6 * q(m - 2) + q(m - 4) + q(m - 5)) + 2


def _quad_0(q, k):
    m = 4 * k
    return 15 * q(m) + 4 * q(m - 1) - 2 * q(m - 3) - q(m - 4) + 2


def _quad_2(q, k):
    m = 4 * k
    return q(m) - 2 * q(m - 1) + 12 * q(m - 2) - 2 * q(m - 3) + q(m - 4) - 2 * q(m - 5) - 2


def _quad_3(q, k):
    m = 4 * k
    return 2 * q(m) - 3 * q(m - 1) - 8 * q(m - 2) + q(m - 5) + 4


def _quad_1(q, k):
    m = 4 * k
    return 15 * q(m - 1) + 4 * q(m - 2) - 2 * q(m - 4) - q(m - 5)


def _j_weight(q, k):
    return (
        (9 * k - 2) * q(k) + 7 * (k - 1) * q(k - 1) + 4 * (k - 2) * q(k - 2)
        - 2 * k * q(k - 3) - k * q(k - 4) - (k - 1) * q(k - 5)
        + 11 * q(-1) + 14 * q(-2) + 12 * q(-3) - 2 * q(-4) - q(-5) - 2 * q(-6)
    )


def _j2_weight(q, k):
    return (
        (9 * k * k - 4 * k + 6) * q(k) + (7 * k * k - 14 * k + 7) * q(k - 1)
        + (4 * k * k - 16 * k + 10) * q(k - 2) - (2 * k * k + 6) * q(k - 3)
        - (k * k + 2) * q(k - 4) - (k * k - 2 * k + 3) * q(k - 5)
        - 19 * q(-1) - 28 * q(-2) - 30 * q(-3) + 8 * q(-4) + 3 * q(-5) + 6 * q(-6)
    )


_CLOSED_FORMS = {
    SumVariant.GEN_ALL: _gen_all,
    SumVariant.GEN_ALT: _gen_alt,
    SumVariant.TRIB_ALL: _trib_all,
    SumVariant.TRIB_ALT: _trib_alt,
    SumVariant.EVEN: _even,
    SumVariant.ODD: _odd,
    SumVariant.ALT_EVEN: _alt_even,
    SumVariant.ALT_ODD: _alt_odd,
    SumVariant.QUAD_0: _quad_0,
    SumVariant.QUAD_2: _quad_2,
    SumVariant.QUAD_3: _quad_3,
    SumVariant.QUAD_1: _quad_1,
    SumVariant.J_WEIGHT: _j_weight,
    SumVariant.J2_WEIGHT: _j2_weight,
}


def _check(spec: SequenceSpec, variant: SumVariant, k: int) -> None:
    if variant.tribonacci_only and spec != TRIBONACCI:
        raise VariantSpecMismatch(f"{variant.name} holds only for seed {TRIBONACCI}, got {spec}")
    if k < 0:
        raise ValueError("k must be nonnegative")


def scaled_special_sum(spec: SequenceSpec, variant: SumVariant, k: int) -> int:
    """Right-hand side of the printed closed form, i.e. ``variant.scale`` times the sum."""
    _check(spec, variant, k)
    return _CLOSED_FORMS[variant](lambda n: term(spec, n) ** 2, k)


def special_sum(spec: SequenceSpec, variant: SumVariant, k: int) -> Fraction:
    """Evaluate ``variant``'s partial sum up to ``k`` by its closed form.

    A ``k`` below the variant's lower summation bound gives the empty sum.
    """
    _check(spec, variant, k)
    if k < variant.lower:
        return Fraction(0)
    return Fraction(scaled_special_sum(spec, variant, k), variant.scale)


def _naive_squares(spec: SequenceSpec, lo: int, hi: int) -> dict[int, int]:
    """Squares of ``T[lo..hi]`` by direct iteration, independent of the cache."""
    t = {0: spec.t0, 1: spec.t1, 2: spec.t2}
    for n in range(3, hi + 1):
        t[n] = t[n - 1] + t[n - 2] + t[n - 3]
    # backwards by solving the three-term recurrence for its oldest term
    for n in range(-1, lo - 1, -1):
        t[n] = t[n + 3] - t[n + 2] - t[n + 1]
    return {n: v * v for n, v in t.items()}


def direct_sum_oracle(
    spec: SequenceSpec,
    k: int,
    variant: SumVariant | None = None,
    *,
    x=None,
    weight_power: int = 0,
) -> Fraction:
    """Literal summation with no closed form.

    With ``variant`` given, sums that variant's summands for ``j`` from its
    lower bound to ``k``.  Otherwise sums ``x**j * j**weight_power * T[j]**2``
    for ``j`` in ``0..k`` (``x`` defaults to 1).
    """
    if variant is None:
        x = Fraction(1 if x is None else x)
        sq = _naive_squares(spec, 0, max(k, 2))
        total = Fraction(0)
        power = Fraction(1)
        for j in range(0, k + 1):
            total += power * j**weight_power * sq[j]
            power *= x
        return total
    sign, index, weight = _INDEX_MAP[variant]
    js = range(variant.lower, k + 1)
    if not js:
        return Fraction(0)
    idx = [index(j) for j in js]
    sq = _naive_squares(spec, min(min(idx), 0), max(max(idx), 2))
    return Fraction(sum(sign(j) * weight(j) * sq[i] for j, i in zip(js, idx)))


@dataclass(frozen=True)
class SumReport:
    variant: str
    k: int
    closed: Fraction
    oracle: Fraction
    seed: str = str(TRIBONACCI)
    x: Fraction | None = None

    @property
    def equal(self) -> bool:
        return self.closed == self.oracle

    def to_dict(self) -> dict:
        d = {
            "variant": self.variant,
            "seed": self.seed,
            "k": self.k,
            "closed": _fmt(self.closed),
            "oracle": _fmt(self.oracle),
            "equal": self.equal,
        }
        if self.x is not None:
            d["x"] = _fmt(self.x)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _fmt(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def compare(spec: SequenceSpec, variant: SumVariant, k: int) -> SumReport:
    """Evaluate ``variant`` both ways and report whether they agree."""
    closed = special_sum(spec, variant, k)
    oracle = direct_sum_oracle(spec, k, variant)
    return SumReport(variant.name, k, closed, oracle, str(spec))


def compare_weighted(spec: SequenceSpec, x, k: int) -> SumReport:
    """Check the closed form of ``sum(x**j T[j]**2)`` against direct summation."""
    x = Fraction(x)
    closed = theorem2_weighted_square_sum(spec, x, k)
    oracle = direct_sum_oracle(spec, k, x=x)
    return SumReport("WEIGHTED_X", k, closed, oracle, str(spec), x)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["variant", "k", "closed", "oracle", "equal"])
    for r in reports:
        writer.writerow([r.variant, r.k, _fmt(r.closed), _fmt(r.oracle), str(r.equal).lower()])
    return buf.getvalue()
