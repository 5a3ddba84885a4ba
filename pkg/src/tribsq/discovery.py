"""Rediscover power identities as integer kernels of sampled term windows.

For a window of offsets ``o_1..o_w`` and a power ``p``, every row of the
sample matrix is ``(T[r - o_1]**p, ..., T[r - o_w]**p)`` for some seed and
index ``r``.  An identity valid for all seeds is a vector annihilating every
such row, so the right kernel over the rationals contains every candidate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import AmbiguousKernel, InsufficientRows, TribsqError
from .identities import IdentityTemplate, verify_range
from .sequence import SequenceSpec, range_terms

__all__ = [
    "SampleMatrix",
    "build_sample_matrix",
    "rref",
    "integer_kernel",
    "primitive",
    "annihilates",
    "default_specs",
    "random_specs",
    "discover_identity",
]


@dataclass(frozen=True)
class SampleMatrix:
    rows: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    power: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.offsets)


def build_sample_matrix(
    specs: Sequence[SequenceSpec],
    offsets: Sequence[int],
    power: int,
    r_values: Sequence[int],
) -> SampleMatrix:
    """One row per ``(spec, r)`` pair, specs outermost."""
    offsets = tuple(offsets)
    if len(set(offsets)) != len(offsets):
        raise ValueError("offsets must be distinct")
    if power < 1:
        raise ValueError("power must be positive")
    n_rows = len(specs) * len(r_values)
    if n_rows < len(offsets) + 4:
        raise InsufficientRows(f"{n_rows} rows for a window of {len(offsets)}")
    rows = []
    lo = min(r_values) - max(offsets)
    hi = max(r_values) - min(offsets)
    for spec in specs:
        vals = range_terms(spec, lo, hi)
        for r in r_values:
            rows.append(tuple(vals[r - o - lo] ** power for o in offsets))
    return SampleMatrix(tuple(rows), offsets, power)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with a positive leading entry."""
    fr = [Fraction(v) for v in vec]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * den) for f in fr]
    g = gcd(*ints)
    if g == 0:
        return tuple(ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def integer_kernel(m: SampleMatrix | Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Primitive integer basis of the right kernel of ``m``."""
    rows = m.rows if isinstance(m, SampleMatrix) else m
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(primitive(v))
    return basis


def annihilates(m: SampleMatrix, vec: Sequence[int]) -> bool:
    return all(sum(a * b for a, b in zip(row, vec)) == 0 for row in m.rows)


def default_specs() -> list[SequenceSpec]:
    return [SequenceSpec(0, 1, 1), SequenceSpec(1, 0, 0), SequenceSpec(0, 1, 0), SequenceSpec(0, 0, 1)]


def random_specs(count: int, rng_seed: int = 0, bound: int = 999) -> list[SequenceSpec]:
    """``count`` seeds with entries uniform in ``[-bound, bound]``; deterministic in ``rng_seed``."""
    rng = random.Random(rng_seed)
    return [SequenceSpec(*(rng.randint(-bound, bound) for _ in range(3))) for _ in range(count)]


def discover_identity(
    power: int,
    offsets: Sequence[int],
    *,
    specs: Sequence[SequenceSpec] | None = None,
    r_values: Sequence[int] | None = None,
    rng_seed: int = 0,
    confirm_range: tuple[int, int] = (-30, 120),
) -> IdentityTemplate | None:
    """Find the unique identity among ``power``-th powers over ``offsets``.

    Returns ``None`` when the kernel is trivial and raises
    :class:`AmbiguousKernel` when it has dimension two or more.  A
    one-dimensional candidate is confirmed on five random seeds over
    ``confirm_range`` before it is returned.
    """
    offsets = list(offsets)
    if specs is None:
        specs = default_specs() + random_specs(3, rng_seed)
    if r_values is None:
        r_values = range(10, 10 + len(offsets) + 8 + 1)
    sample = build_sample_matrix(specs, offsets, power, list(r_values))
    basis = integer_kernel(sample)
    if not basis:
        return None
    if len(basis) > 1:
        raise AmbiguousKernel(basis, offsets)
    (vec,) = basis
    name = f"D{power}[{min(offsets)}..{max(offsets)}]"
    tpl = IdentityTemplate(
        name, power, tuple((o, c) for o, c in zip(offsets, vec) if c), provenance="discovered"
    )
    lo, hi = confirm_range
    for spec in random_specs(5, rng_seed + 1):
        report = verify_range(tpl, spec, lo, hi)
        if not report.passed:
            raise TribsqError(f"candidate {vec} fails at r={report.failures[0][0]} for seed {spec}")
    return tpl
