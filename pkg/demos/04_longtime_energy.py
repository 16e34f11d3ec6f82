"""Scaled-down long-time energy experiment (t up to 300 to stay quick).

Reproduces the qualitative picture: the non-symmetric ERKN1 drifts, the
symmetric-symplectic ERKN3 stays flat, and for the symmetric-only ERKN2 the
modified energy H* is conserved visibly better than H itself.
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from erkn import ExperimentConfig, run_longrun

os.makedirs("demos/output", exist_ok=True)
runs = {}
for name in ("ERKN1", "ERKN2", "ERKN3"):
    cfg = ExperimentConfig(scheme_name=name, h=0.01, t_end=300.0, sample_every=50,
                           output_path=f"demos/output/{name.lower()}_series.csv")
    runs[name] = run_longrun(cfg)
    print(f"{name}: max|err_H| = {np.max(np.abs(runs[name].column('err_H'))):.3e}")

fig, (top, bot) = plt.subplots(2, 1, figsize=(9, 6), sharex=True)
for name in ("ERKN1", "ERKN3"):
    top.plot(runs[name].t, runs[name].column("err_H"), lw=0.8, label=f"{name} err_H")
top.set_title("total-energy error: drifting (ERKN1) vs conserved (ERKN3)")
top.legend()

e2 = runs["ERKN2"]
bot.plot(e2.t, e2.column("err_H"), lw=0.8, label="ERKN2 err_H")
bot.plot(e2.t, e2.column("err_Hstar"), lw=0.8, label="ERKN2 err_H*")
bot.set_title("ERKN2: the modified energy is the conserved one")
bot.set_xlabel("t")
bot.legend()

fig.savefig("demos/output/longtime_energy.png", dpi=120, bbox_inches="tight")
print("saved demos/output/longtime_energy.png")
