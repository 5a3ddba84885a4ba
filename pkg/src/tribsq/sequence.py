"""Generalized Tribonacci numbers over all integer indices.

A sequence is fixed by three integer seeds ``T0, T1, T2`` and the recurrence
``T[n] = T[n-1] + T[n-2] + T[n-3]``.  Negative indices come from running the
equivalent four-term relation ``T[n] = 2*T[n-1] - T[n-4]`` backwards, i.e.
``T[n] = 2*T[n+3] - T[n+4]``.

Three independent routes are provided and must agree everywhere:

* :func:`term` -- a per-seed cache that grows in both directions,
* :func:`term_alt` -- uncached iteration of the four-term relation,
* :func:`term_fast` -- binary powering of the 3x3 companion matrix.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "SequenceSpec",
    "TRIBONACCI",
    "TermCache",
    "COMPANION",
    "COMPANION_INV",
    "cache_for",
    "term",
    "term_alt",
    "term_fast",
    "range_terms",
    "mat_mul",
    "mat_pow",
    "det3",
]


@dataclass(frozen=True)
class SequenceSpec:
    """Initial values ``(T0, T1, T2)`` of one generalized Tribonacci sequence."""

    t0: int
    t1: int
    t2: int

    def __post_init__(self):
        for name in ("t0", "t1", "t2"):
            value = getattr(self, name)
            # bool is an int subclass but never a meaningful seed
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")

    @classmethod
    def parse(cls, text: str) -> "SequenceSpec":
        """Parse ``"a,b,c"`` into a spec."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    @property
    def seeds(self) -> tuple[int, int, int]:
        return (self.t0, self.t1, self.t2)

    def __add__(self, other: "SequenceSpec") -> "SequenceSpec":
        return SequenceSpec(self.t0 + other.t0, self.t1 + other.t1, self.t2 + other.t2)

    def __str__(self) -> str:
        return f"{self.t0},{self.t1},{self.t2}"


TRIBONACCI = SequenceSpec(0, 1, 1)


class TermCache:
    """Exact terms of one sequence on a contiguous window ``[lo, hi]``.

    The window always contains 0..3 and grows by doubling in whichever
    direction a request falls outside it.  Extension is serialized by a lock;
    reads of an already-computed index take no lock.
    """

    def __init__(self, spec: SequenceSpec):
        self.spec = spec
        t0, t1, t2 = spec.seeds
        self._fwd = [t0, t1, t2, t0 + t1 + t2]  # index n >= 0
        self._bwd: list[int] = []  # index n < 0 stored at -1 - n
        self._lock = threading.Lock()

    @property
    def lo(self) -> int:
        return -len(self._bwd)

    @property
    def hi(self) -> int:
        return len(self._fwd) - 1

    def _extend_forward(self, n: int) -> None:
        with self._lock:
            fwd = self._fwd
            target = max(n, 2 * len(fwd))
            a, b, c = fwd[-3], fwd[-2], fwd[-1]
            for _ in range(len(fwd), target + 1):
                a, b, c = b, c, a + b + c
                fwd.append(c)

    def _extend_backward(self, n: int) -> None:
        with self._lock:
            fwd, bwd = self._fwd, self._bwd
            target = max(-n, 2 * len(bwd), 8)

            def at(i):
                return fwd[i] if i >= 0 else bwd[-1 - i]

            for m in range(len(bwd) + 1, target + 1):
                bwd.append(2 * at(-m + 3) - at(-m + 4))

    def __getitem__(self, n: int) -> int:
        if n >= 0:
            if n >= len(self._fwd):
                self._extend_forward(n)
            return self._fwd[n]
        if -n > len(self._bwd):
            self._extend_backward(n)
        return self._bwd[-1 - n]

    def window(self, lo: int, hi: int) -> list[int]:
        if lo > hi:
            raise ValueError(f"empty range: lo={lo} > hi={hi}")
        self[lo]
        self[hi]
        bwd = self._bwd
        out = [bwd[-1 - n] for n in range(lo, min(hi, -1) + 1)]
        if hi >= 0:
            out.extend(self._fwd[max(lo, 0): hi + 1])
        return out


_caches: dict[SequenceSpec, TermCache] = {}
_caches_lock = threading.Lock()


def cache_for(spec: SequenceSpec) -> TermCache:
    """Return the shared cache for ``spec``, creating it on first use."""
    cache = _caches.get(spec)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(spec, TermCache(spec))
    return cache


def term(spec: SequenceSpec, n: int) -> int:
    """Return ``T[n]`` for any integer ``n`` using the shared cache."""
    return cache_for(spec)[n]


def range_terms(spec: SequenceSpec, lo: int, hi: int) -> list[int]:
    """Return ``[T[lo], ..., T[hi]]``."""
    return cache_for(spec).window(lo, hi)


def term_alt(spec: SequenceSpec, n: int) -> int:
    """Return ``T[n]`` from the four-term relation alone, without caching."""
    t0, t1, t2 = spec.seeds
    w = [t0, t1, t2, t0 + t1 + t2]
    if 0 <= n <= 3:
        return w[n]
    if n > 3:
        for _ in range(n - 3):
            w = [w[1], w[2], w[3], 2 * w[3] - w[0]]
        return w[3]
    for _ in range(-n):
        w = [2 * w[2] - w[3], w[0], w[1], w[2]]
    return w[0]


Matrix = Sequence[Sequence[int]]

# state (T[n+2], T[n+1], T[n]) -> (T[n+3], T[n+2], T[n+1])
COMPANION = ((1, 1, 1), (1, 0, 0), (0, 1, 0))
COMPANION_INV = ((0, 1, 0), (0, 0, 1), (1, -1, -1))


def mat_mul(a: Matrix, b: Matrix) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def _mul3(a, b):
    (a00, a01, a02), (a10, a11, a12), (a20, a21, a22) = a
    (b00, b01, b02), (b10, b11, b12), (b20, b21, b22) = b
    return (
        (a00 * b00 + a01 * b10 + a02 * b20, a00 * b01 + a01 * b11 + a02 * b21, a00 * b02 + a01 * b12 + a02 * b22),
        (a10 * b00 + a11 * b10 + a12 * b20, a10 * b01 + a11 * b11 + a12 * b21, a10 * b02 + a11 * b12 + a12 * b22),
        (a20 * b00 + a21 * b10 + a22 * b20, a20 * b01 + a21 * b11 + a22 * b21, a20 * b02 + a21 * b12 + a22 * b22),
    )


def mat_pow(m: Matrix, e: int) -> tuple[tuple[int, ...], ...]:
    """``m**e`` by binary powering; ``e`` must be nonnegative."""
    if e < 0:
        raise ValueError("negative exponent; use the inverse matrix")
    size = len(m)
    mul = _mul3 if size == 3 else mat_mul
    result = tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    base = tuple(tuple(row) for row in m)
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def det3(m: Matrix) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def term_fast(spec: SequenceSpec, n: int) -> int:
    """Return ``T[n]`` with O(log |n|) matrix products."""
    if n >= 0:
        p = mat_pow(COMPANION, n)
    else:
        p = mat_pow(COMPANION_INV, -n)
    t0, t1, t2 = spec.seeds
    # bottom row of M^n applied to (T2, T1, T0)
    row = p[2]
    return row[0] * t2 + row[1] * t1 + row[2] * t0
