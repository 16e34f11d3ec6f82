"""Tour of the phi kernel: values, identities, and the series switch.

Plots phi_0..phi_3 on [0, 10] and numerically confirms the recurrence
phi_j + xi^2 phi_{j+2} = 1/j! and the Pythagorean identity
phi_0^2 + xi^2 phi_1^2 = 1.
"""

import math
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from erkn import phi

xs = np.linspace(0.0, 10.0, 2000)
curves = {j: np.array([phi(j, float(x)) for x in xs]) for j in range(4)}

worst_rec = max(
    abs(curves[j][i] + xs[i] ** 2 * curves[j + 2][i] - 1.0 / math.factorial(j))
    for j in (0, 1) for i in range(len(xs))
)
worst_pyth = max(
    abs(curves[0][i] ** 2 + xs[i] ** 2 * curves[1][i] ** 2 - 1.0) for i in range(len(xs))
)
print(f"recurrence residual (multiplied form): {worst_rec:.2e}")
print(f"pythagorean residual:                  {worst_pyth:.2e}")
print(f"phi_2(1) = {phi(2, 1.0):.15f}  (= 1 - cos 1)")

fig, ax = plt.subplots(figsize=(8, 4.5))
for j, c in curves.items():
    ax.plot(xs, c, label=rf"$\varphi_{j}$")
ax.set_xlabel(r"$\xi$")
ax.set_title("phi functions (argument is the scalar frequency-step product)")
ax.legend()
ax.grid(alpha=0.3)

os.makedirs("demos/output", exist_ok=True)
fig.savefig("demos/output/phi_functions.png", dpi=120, bbox_inches="tight")
print("saved demos/output/phi_functions.png")
