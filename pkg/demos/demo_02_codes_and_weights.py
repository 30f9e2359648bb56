"""
Codes from cyclotomic defining sets
===================================

The three code families, their parameters, and their weight
distributions.
"""

from ghwlab.codes import build_code, check_family_B_weights, defining_set, weight_distribution
from ghwlab.cyclotomy import cyclotomy_params
from ghwlab.field import build_field

# Family A takes the subgroup generated by theta = alpha^N as defining set.
P = cyclotomy_params(build_field(3, 3), 2)
code = build_code(defining_set(P, "A"))
print(f"family A, q=27, N=2: [n, k] = [{code.n}, {code.k}]")
print("  weights:", weight_distribution(code))

# Family B keeps only the first n2 powers of theta.  Its nonzero weights
# depend on the class of the message and are predicted by the periods.
P = cyclotomy_params(build_field(5, 2), 2)
code = build_code(defining_set(P, "B"))
print(f"family B, q=25, N=2: [n, k] = [{code.n}, {code.k}]")
print("  weights:", weight_distribution(code))
rep = check_family_B_weights(code)
print("  predicted per class:", {i: str(v) for i, v in rep.predicted.items()})

# Family C uses a skew set: one element out of every pair {x, -x}.
# For q = 3 mod 4 the squares work; otherwise a seeded random choice is used.
for q_pm, spec in [((7, 1), "canonical"), ((5, 2), 11)]:
    P = cyclotomy_params(build_field(*q_pm), 1)
    D = defining_set(P, "C", spec)
    code = build_code(D)
    print(f"family C, q={P.q}, {D.skew_spec}: n={code.n}, weights {weight_distribution(code)}")
