"""
Finding identities from data
============================

Sample windows of powered terms across several seeds and compute the
integer kernel.  A one-dimensional kernel is an identity candidate, which is
then confirmed by exact residuals.
"""
from tribsq import discover_identity
from tribsq.errors import AmbiguousKernel

for power, length in [(2, 6), (2, 7), (3, 10), (3, 11)]:
    tpl = discover_identity(power, range(length))
    vec = None if tpl is None else tpl.coefficient_vector(0, length - 1)
    print(f"power {power}, window 0..{length - 1}: {vec or 'NOT_FOUND'}")

try:
    discover_identity(1, range(5))
except AmbiguousKernel as exc:
    print("power 1, window 0..4 is ambiguous:", exc.basis)
