"""Convergent Floer cohomology and the superpotential.

Setting T^(2 pi) = e^(-1) turns m_{1,2} into the logarithmic gradient of the
Landau-Ginzburg superpotential.  Its critical points give fibers where the
convergent theory is non-vanishing, but such a fiber can still be displaced.
"""

# %%
import numpy as np

from toric_floer import BFieldWeights, solve_critical, superpotential
from toric_floer.builtins import hirzebruch1
from toric_floer.mirror import convergent_verdict_at

P = hirzebruch1()
W = superpotential(P)
print("W =", W)

# %% Newton from many random starts, deduplicated.
points = solve_critical(W)
for p in points:
    print(f"log z = {p.log_z[0]:.4f}  |z| = {abs(p.z[0]):.4f}  residual {p.residual:.1e}")

# %% Cross-check with the quartic satisfied by z1 = z2.
print("numpy roots of z^4 + z^3 - 1:", np.round(np.log(np.roots([1, 1, 0, 0, -1]).astype(complex)), 4))

# %% Each critical point kills the convergent m_{1,2} at its own fiber.
for p in points:
    res = convergent_verdict_at(P, p.fiber, p.local_system(), BFieldWeights.trivial(4))
    print(tuple(round(t, 4) for t in p.fiber), res.verdict.value, f"({res.label})")
