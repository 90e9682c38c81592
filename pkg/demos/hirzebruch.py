"""The monotone fiber of the first Hirzebruch surface.

Standard Floer cohomology of every fiber vanishes, but a complex B-field
weighting of the disc classes rescues the monotone fiber.
"""

# %%
import numpy as np

from toric_floer import (
    BFieldWeights,
    LocalSystem,
    certify_fiber,
    disc_classes,
    floer_verdict,
    m12,
    monotone_fiber,
)
from toric_floer.builtins import hirzebruch1

P = hirzebruch1()
A, r = monotone_fiber(P)
print("monotone fiber", tuple(map(str, A)), "with every disc area 2*pi *", r)

# %% Trivial data: m_{1,2} does not vanish.
D = disc_classes(P, A)
m = m12(D, LocalSystem.trivial(2), BFieldWeights.trivial(4))
print("m12 with trivial data:", [str(c) for c in m], "->", floer_verdict(m).value)

# %% Unitary holonomy cannot help.  On the diagonal the obstruction is a trigonometric polynomial.
h = np.linspace(0, 2 * np.pi, 100_000, endpoint=False)
values = np.abs(np.exp(4j * h) + np.exp(3j * h) - 1)
print(f"min |e^(4ih) + e^(3ih) - 1| over the circle ~ {values.min():.4f}")

# %% The certificate finds the weights (2, 1, 1, 1).
cert = certify_fiber(P, A)
print(cert.verdict.value, "with weights", [str(w) for w in cert.weights])
m = m12(D, LocalSystem.trivial(2), cert.bfield_weights())
print("m12 with the B-field:", [str(c) for c in m], "->", floer_verdict(m).value)
