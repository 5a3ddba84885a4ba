"""
Partial sums of squares
=======================

Closed forms evaluated exactly and compared against direct summation.
"""
from fractions import Fraction

from tribsq import TRIBONACCI, SequenceSpec, SumVariant, compare, theorem2_weighted_square_sum
from tribsq.sums import direct_sum_oracle, reports_to_csv

###############################################################################
# The x-weighted sum, for a few rational x
spec = SequenceSpec(2, 7, -1)
for x in (Fraction(-2), Fraction(1, 3), Fraction(7, 5)):
    closed = theorem2_weighted_square_sum(spec, x, 20)
    print(x, closed == direct_sum_oracle(spec, 20, x=x))

###############################################################################
# All fourteen particular sums at k = 10, as CSV
reports = [compare(TRIBONACCI, v, 10) for v in SumVariant]
print(reports_to_csv(reports))
