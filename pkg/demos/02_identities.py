"""
Square, cross-product and cube identities
=========================================

Every built-in identity is checked by exact residuals over an index range.
"""
from tribsq import builtin_identities, verify_range
from tribsq.discovery import random_specs

catalog = builtin_identities()
specs = random_specs(10, rng_seed=1)

for tid, tpl in catalog.items():
    ok = all(verify_range(tpl, s, -60, 150).passed for s in specs)
    print(f"{tid}: power={tpl.power} coefficients={tpl.coefficient_vector()} holds={ok}")

###############################################################################
# Flip one coefficient of S1 and the identity breaks at once
broken = catalog["S1"].with_coefficient(1, -1, "S1_broken")
report = verify_range(broken, specs[0], 0, 10)
print(broken.id, "pass" if report.passed else f"first failure at r={report.failures[0][0]}")
