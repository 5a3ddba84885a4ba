"""Generic constant-coefficient recurrences ``X[j] = sum(f * X[j - c])``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .sequence import SequenceSpec, term

__all__ = ["LinearRecurrence"]


@dataclass(frozen=True)
class LinearRecurrence:
    """Recurrence with ``taps = ((c_1, f_1), ...)`` and seed values.

    ``seeds[i]`` is ``X[-1 - i]`` for ``i < order``, where ``order`` is the
    largest shift.  Shifts must be positive and distinct, coefficients
    nonzero.  Values at negative indices below the seeds are recovered by
    solving the recurrence for its deepest tap.
    """

    taps: tuple[tuple[int, Rational], ...]
    seeds: tuple[Rational, ...]
    _values: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        taps = tuple((int(c), f) for c, f in self.taps)
        if not taps:
            raise ValueError("a recurrence needs at least one tap")
        shifts = [c for c, _ in taps]
        if min(shifts) < 1 or len(set(shifts)) != len(shifts):
            raise ValueError("shifts must be distinct positive integers")
        if any(f == 0 for _, f in taps):
            raise ValueError("tap coefficients must be nonzero")
        object.__setattr__(self, "taps", taps)
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if len(self.seeds) != self.order:
            raise ValueError(f"need {self.order} seeds, got {len(self.seeds)}")
        for i, v in enumerate(self.seeds):
            self._values[-1 - i] = v

    @property
    def order(self) -> int:
        return max(c for c, _ in self.taps)

    @classmethod
    def from_values(cls, taps: Sequence[tuple[int, Rational]], value_at) -> "LinearRecurrence":
        """Build from a callable giving ``X[j]`` for negative ``j``."""
        order = max(c for c, _ in taps)
        return cls(tuple(taps), tuple(value_at(-1 - i) for i in range(order)))

    @classmethod
    def tribonacci(cls, spec: SequenceSpec) -> "LinearRecurrence":
        return cls.from_values(((1, 1), (2, 1), (3, 1)), lambda j: term(spec, j))

    @classmethod
    def tribonacci_squares(cls, spec: SequenceSpec) -> "LinearRecurrence":
        """Order-6 recurrence satisfied by ``T[j]**2`` (from the S1 identity)."""
        taps = ((1, 2), (2, 3), (3, 6), (4, -1), (6, -1))
        return cls.from_values(taps, lambda j: term(spec, j) ** 2)

    def __getitem__(self, j: int):
        vals = self._values
        if j in vals:
            return vals[j]
        if j >= 0:
            top = max(k for k in vals if k < j)
            for i in range(top + 1, j + 1):
                vals[i] = sum(f * vals[i - c] for c, f in self.taps)
        else:
            # X[i] = (X[i + d] - sum_{c < d} f * X[i + d - c]) / f_d
            d = self.order
            f_d = dict(self.taps)[d]
            bottom = min(vals)
            for i in range(bottom - 1, j - 1, -1):
                rest = sum(f * self[i + d - c] for c, f in self.taps if c != d)
                v = self[i + d] - rest
                vals[i] = v // f_d if isinstance(v, int) and isinstance(f_d, int) and v % f_d == 0 else Fraction(v) / f_d
        return vals[j]

    def values(self, lo: int, hi: int) -> list:
        return [self[j] for j in range(lo, hi + 1)]
