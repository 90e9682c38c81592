"""Three non-displaceable fibers of CP^2 blown up at three points.

None of them is monotone.  At each, the discs split into two energy levels of
three classes, and each triple of normals satisfies a relation with signs.
"""

# %%
from fractions import Fraction

from toric_floer import certify_fiber, scan_fibers
from toric_floer.builtins import blowup3

eps = Fraction(1, 8)
P = blowup3(eps)
for j, f in enumerate(P.facets, 1):
    print(f"v{j} = {f.normal}, offset {f.offset}")

# %% Scan the 1/8 grid for certified fibers.
for A, cert in scan_fibers(P, 8):
    print("fiber", tuple(map(str, A)))
    for lv in cert.levels:
        names = ", ".join(f"v{j + 1}" for j in lv.indices)
        print(f"  area 2pi*{lv.area_exp}: [{names}] coefficients {[str(c) for c in lv.coeffs]}")

# %% A generic fiber has six distinct areas, so no level can cancel.
cert = certify_fiber(P, (Fraction(1, 10), Fraction(1, 5)))
print("generic fiber:", cert.verdict.value, "failing levels", [str(r) for r in cert.failing_levels])
