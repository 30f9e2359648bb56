"""
Finite fields and exact Gauss periods
=====================================

Build a small extension field, look at its tables, and compute Gauss
periods exactly as vectors in Z[zeta_p].
"""

import numpy as np

from ghwlab.cyclotomy import (
    closed_form_periods,
    cyclotomy_params,
    gauss_periods,
    period_polynomial,
    solve_c1_d1,
)
from ghwlab.field import build_field

# F_9 is built from the smallest monic irreducible quadratic over F_3.
# Elements are integers c0 + 3 c1 standing for c0 + c1 x.
F = build_field(3, 2)
print("modulus (low degree first):", F.modulus)
print("primitive element alpha:", F.coeffs(F.alpha))
print("powers of alpha:", [F.coeffs(int(v)) for v in F.exp_table])

# The trace is a linear functional; here Tr(c0 + c1 x) = 2 c0.
print("traces:", F.trace(np.arange(F.q)).tolist())

# Periods of order 2.  Each one is stored as the count of trace values over
# its class, so eta_i = sum_t a_t zeta^t with no rounding anywhere.
P = cyclotomy_params(F, 2)
for i, eta in enumerate(gauss_periods(P, 2)):
    print(f"eta_{i}: trace counts {eta.raw} -> value {eta.rational()}")

cf = closed_form_periods(P)
print("closed form:", cf.labels, [str(v) for v in cf.values])
print("period polynomial:", period_polynomial(P, 2))

# A less trivial case: order 3 over F_343, which needs a Diophantine witness.
P343 = cyclotomy_params(build_field(7, 3), 3)
w = solve_c1_d1(7, 3)
print("witness (c1, |d1|) for q=343:", w.astuple())
print("exact  :", sorted(str(c.rational()) for c in gauss_periods(P343, 3)))
print("formula:", [str(v) for v in closed_form_periods(P343).values])
