"""Catalog of identities and exact residual checks.

Every identity is stored with all terms moved to one side::

    sum(c * T[r - o]**power for o, c in terms)
      + sum(c * T[r - a] * T[r - b] for a, b, c in cross_terms) == 0

so an offset of ``-2`` means ``T[r+2]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .sequence import SequenceSpec, range_terms, term

__all__ = [
    "IdentityTemplate",
    "IdentityReport",
    "builtin_identities",
    "residual",
    "verify_range",
    "dump_catalog",
    "load_catalog",
]


@dataclass(frozen=True)
class IdentityTemplate:
    id: str
    power: int
    terms: tuple[tuple[int, int], ...]
    cross_terms: tuple[tuple[int, int, int], ...] = ()
    provenance: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((int(o), int(c)) for o, c in self.terms))
        object.__setattr__(
            self, "cross_terms", tuple((int(a), int(b), int(c)) for a, b, c in self.cross_terms)
        )
        if self.power < 1:
            raise ValueError("power must be positive")
        if not self.terms and not self.cross_terms:
            raise ValueError("identity template has no terms")
        offsets = [o for o, _ in self.terms]
        if len(set(offsets)) != len(offsets):
            raise ValueError(f"{self.id}: repeated offset in terms")

    @property
    def offsets(self) -> list[int]:
        out = [o for o, _ in self.terms]
        for a, b, _ in self.cross_terms:
            out += [a, b]
        return out

    @property
    def window(self) -> tuple[int, int]:
        """Smallest and largest offset touched by the identity."""
        offs = self.offsets
        return min(offs), max(offs)

    def coefficient_vector(self, lo: int | None = None, hi: int | None = None) -> tuple[int, ...]:
        """Dense power-term coefficients over offsets ``lo..hi`` (zeros filled in)."""
        wlo, whi = self.window
        lo = wlo if lo is None else lo
        hi = whi if hi is None else hi
        coeffs = dict(self.terms)
        if any(o < lo or o > hi for o in coeffs):
            raise ValueError(f"window {lo}..{hi} does not cover {self.id}")
        return tuple(coeffs.get(o, 0) for o in range(lo, hi + 1))

    def shifted(self, k: int) -> "IdentityTemplate":
        """Same identity with every offset increased by ``k``."""
        return IdentityTemplate(
            self.id,
            self.power,
            tuple((o + k, c) for o, c in self.terms),
            tuple((a + k, b + k, c) for a, b, c in self.cross_terms),
            self.provenance,
        )

    def with_coefficient(self, offset: int, coeff: int, new_id: str | None = None) -> "IdentityTemplate":
        terms = dict(self.terms)
        terms[offset] = coeff
        return IdentityTemplate(
            new_id or self.id, self.power, tuple(sorted(terms.items())), self.cross_terms, self.provenance
        )

    def to_dict(self) -> dict:
        d = {
            "id": self.id,
            "power": self.power,
            "terms": [{"offset": o, "coeff": c} for o, c in self.terms],
            "cross_terms": [{"a": a, "b": b, "coeff": c} for a, b, c in self.cross_terms],
        }
        if self.provenance is not None:
            d["provenance"] = self.provenance
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityTemplate":
        return cls(
            id=d["id"],
            power=int(d["power"]),
            terms=tuple((t["offset"], t["coeff"]) for t in d.get("terms", [])),
            cross_terms=tuple((t["a"], t["b"], t["coeff"]) for t in d.get("cross_terms", [])),
            provenance=d.get("provenance"),
        )


def _dense(id_, power, lo, coeffs, cross=()):
    terms = tuple((lo + i, c) for i, c in enumerate(coeffs) if c != 0)
    return IdentityTemplate(id_, power, terms, tuple(cross))


def builtin_identities() -> dict[str, IdentityTemplate]:
    """All identities proved for generalized Tribonacci numbers, keyed by id.

    S1-S5 are the square identities, P1-P4 the cross-product relations used
    to derive them, and C1 the cube identity.
    """
    cat = [
        _dense("S1", 2, 0, (1, -2, -3, -6, 1, 0, 1)),
        _dense("S2", 2, -2, (1, -4, 1, 0, 14, -4, -2, -8, 1, 0, 1)),
        _dense("S3", 2, -3, (1, -3, 0, -4, 2, -10, -4, 0, 1, 1)),
        _dense("S4", 2, -1, (1, -4, 0, 2, 16, 4, 0, -2, -1)),
        _dense("S5", 2, -2, (1, -2, -2, -8, -2, -6, 2, 0, 1)),
        # 4 T[r-1] T[r] = 4 T[r-1]^2 - T[r-4]^2 + T[r]^2
        IdentityTemplate("P1", 2, ((0, 1), (1, 4), (4, -1)), ((1, 0, -4),)),
        # 4 T[r-1] T[r-4] = 4 T[r-1]^2 + T[r-4]^2 - T[r]^2
        IdentityTemplate("P2", 2, ((0, -1), (1, 4), (4, 1)), ((1, 4, -4),)),
        # 2 T[r] T[r-4] = 4 T[r-1]^2 - T[r-4]^2 - T[r]^2
        IdentityTemplate("P3", 2, ((0, -1), (1, 4), (4, -1)), ((0, 4, -2),)),
        # 8 T[r-1] T[r-3] = 4 T[r]^2 + 2 T[r-3]^2 - T[r+1]^2 + 4 T[r-4]^2 - T[r-7]^2
        IdentityTemplate(
            "P4", 2, ((-1, -1), (0, 4), (3, 2), (4, 4), (7, -1)), ((1, 3, -8),)
        ),
        _dense("C1", 3, 0, (1, -4, -9, -34, 24, -2, 40, -14, -1, -2, 1)),
    ]
    return {t.id: t for t in cat}


def _residual_from(tpl: IdentityTemplate, get, r: int) -> int:
    p = tpl.power
    total = 0
    for o, c in tpl.terms:
        total += c * get(r - o) ** p
    for a, b, c in tpl.cross_terms:
        total += c * get(r - a) * get(r - b)
    return total


def residual(template: IdentityTemplate, spec: SequenceSpec, r: int) -> int:
    """Exact left-hand side of ``template`` at index ``r`` (zero iff it holds)."""
    return _residual_from(template, lambda n: term(spec, n), r)


@dataclass
class IdentityReport:
    id: str
    spec: SequenceSpec
    r_lo: int
    r_hi: int
    failures: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "seed": str(self.spec),
            "range": [self.r_lo, self.r_hi],
            "failures": [{"r": r, "residual": str(v)} for r, v in self.failures],
            "pass": self.passed,
        }


def verify_range(template: IdentityTemplate, spec: SequenceSpec, r_lo: int, r_hi: int) -> IdentityReport:
    """Evaluate the residual for every ``r`` in ``r_lo..r_hi`` inclusive."""
    if r_lo > r_hi:
        raise ValueError(f"empty range {r_lo}..{r_hi}")
    olo, ohi = template.window
    base = r_lo - ohi
    values = range_terms(spec, base, r_hi - olo)
    get = lambda n: values[n - base]  # noqa: E731
    report = IdentityReport(template.id, spec, r_lo, r_hi)
    for r in range(r_lo, r_hi + 1):
        res = _residual_from(template, get, r)
        if res:
            report.failures.append((r, res))
    return report


def dump_catalog(templates: Iterable[IdentityTemplate]) -> str:
    return json.dumps([t.to_dict() for t in templates], indent=2)


def load_catalog(text: str) -> list[IdentityTemplate]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [IdentityTemplate.from_dict(d) for d in data]
