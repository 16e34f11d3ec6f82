"""Resonance module of lambda = (1, sqrt 2, 2) and the non-resonance margin.

The 1:2 relation between the first and third frequency generates the module
{k3 * (-2, 0, 1)}; the margin plot shows how close |sin(h/(2 eps) k.lambda)|
comes to zero as the stepsize varies, which is what the stepsize lower-bound
assumption is guarding.
"""

import math
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from erkn import nonresonance_margin, resonance_scan, run_resonance

lam = (1.0, math.sqrt(2.0), 2.0)
print(run_resonance(lam, N=3, tol=1e-9, h=0.01, epsilon=1 / 70))
print()
print(run_resonance(lam, N=6, tol=1e-9))

scan = resonance_scan(lam, 6)
hs = np.linspace(0.002, 0.05, 300)
margins = [nonresonance_margin(float(h), 1 / 70, lam, 6, scan) for h in hs]

fig, ax = plt.subplots(figsize=(8, 4))
ax.plot(hs, margins, lw=1.0)
ax.axvline(0.01, color="k", ls=":", lw=0.8, label="h = 0.01")
ax.set_xlabel("h")
ax.set_ylabel(r"$\min_k |\sin(\frac{h}{2\epsilon} k\cdot\lambda)| / \sqrt{h}$")
ax.set_title(r"non-resonance margin, $|k|_1 \leq 6$, $\epsilon^{-1} = 70$")
ax.legend()
os.makedirs("demos/output", exist_ok=True)
fig.savefig("demos/output/resonance_margin.png", dpi=120, bbox_inches="tight")
print("saved demos/output/resonance_margin.png")
