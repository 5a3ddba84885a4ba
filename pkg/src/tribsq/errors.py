"""Exceptions raised by tribsq."""


class TribsqError(Exception):
    """Base class for all package errors."""


class DenominatorZero(TribsqError, ZeroDivisionError):
    """A closed form was evaluated at a root of its denominator."""


class VariantSpecMismatch(TribsqError, ValueError):
    """A Tribonacci-only sum was requested for a non-Tribonacci seed."""


class NonUnitConstantTerm(TribsqError, ValueError):
    """Power-series expansion needs a denominator with nonzero constant term."""


class InsufficientRows(TribsqError, ValueError):
    """Too few sample rows to pin down a kernel."""


class AmbiguousKernel(TribsqError):
    """The sampled kernel has dimension two or more.

    The full primitive basis is kept on ``basis`` so callers can inspect it.
    """

    def __init__(self, basis, offsets=None):
        self.basis = [tuple(v) for v in basis]
        self.offsets = None if offsets is None else list(offsets)
        super().__init__(f"kernel has dimension {len(self.basis)}")
