"""
Generating function of the squares
==================================
"""
from tribsq import (
    SequenceSpec,
    convergence_radius_estimate,
    series_coefficients,
    theorem3_squares_genfunc,
    tribonacci_squares_genfunc,
)

g = tribonacci_squares_genfunc()
print(g)
print([int(c) for c in series_coefficients(g, 12)])

###############################################################################
# Any seed gives a rational function with the same denominator
rf = theorem3_squares_genfunc(SequenceSpec(1, 0, 2))
print(rf.to_dict())
print([int(c) for c in series_coefficients(rf, 8)])

###############################################################################
# Numeric summation of the full series only makes sense inside this radius
print(f"radius ~ {convergence_radius_estimate(g):.6f}")
