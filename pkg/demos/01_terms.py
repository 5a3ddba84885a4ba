"""
Generalized Tribonacci numbers at any index
===========================================

Three routes compute the same exact integers: the shared cache, the
four-term relation ``T[n] = 2 T[n-1] - T[n-4]``, and companion-matrix powers.
"""
from tribsq import TRIBONACCI, SequenceSpec, range_terms, term, term_alt, term_fast

###############################################################################
# The Tribonacci numbers, extended to negative subscripts
print(range_terms(TRIBONACCI, -8, 12))

###############################################################################
# Any integer seed works; all three routes agree
spec = SequenceSpec(5, -3, 2)
for n in (-40, -1, 0, 17, 300):
    print(n, term(spec, n) == term_alt(spec, n) == term_fast(spec, n))

###############################################################################
# The matrix route reaches far indices quickly
t = term_fast(TRIBONACCI, 10_000)
print(f"T[10000] has {len(str(t))} digits")
