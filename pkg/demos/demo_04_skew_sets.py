"""
Skew sets give the same hierarchy
=================================

The hierarchy of a skew-set code depends only on q.  Draw several random
skew sets and confirm that brute force sees no difference.
"""

from ghwlab.cyclotomy import cyclotomy_params
from ghwlab.field import build_field
from ghwlab.ghw import hierarchy_report

for p, m in [(3, 3), (5, 2), (3, 4)]:
    P = cyclotomy_params(build_field(p, m), 1)
    specs = (["canonical"] if P.q % 4 == 3 else []) + list(range(4))
    rows = {str(s): hierarchy_report(P, "C", s).hierarchy for s in specs}
    print(f"q={P.q}:")
    for spec, h in rows.items():
        print(f"  {spec:>9}: {h}")
    print("  identical:", len({tuple(h) for h in rows.values()}) == 1)
