"""Two blow-ups of CP^1 x CP^1 x CP^1 along a pair of opposite corners.

In one the origin is certified with positive coefficients, which the ordinary
(unitary) theory also sees.  In the other every level needs a sign, i.e. a
weight e^(pi i).
"""

# %%
from fractions import Fraction

from toric_floer import certify_fiber, kernel_basis
from toric_floer.builtins import cube_blowup_a, cube_blowup_b

for ctor in (cube_blowup_a, cube_blowup_b):
    P = ctor(Fraction(1, 4))
    cert = certify_fiber(P, (0, 0, 0))
    print(P.name, cert.verdict.value)
    for lv in cert.levels:
        rows = [[P.facets[j].normal[i] for j in lv.indices] for i in range(P.dim)]
        (k,) = kernel_basis(rows)
        sign = "positive" if min(k) > 0 or max(k) < 0 else "sign-mixed"
        print(f"  area 2pi*{lv.area_exp}: facets {lv.indices} kernel {[str(x) for x in k]} ({sign})")
