"""Accuracy of the Lambert-W zero estimate against the exact solver.

Computes the first 300 nu-zeros of K_inu(z) for z = 1 and z = 2 with the
phase-function solver and charts |estimate/exact - 1|: under one percent
from the very first zero at z = 1, and decaying like log(n)/n^2.

Run: python demos/zero_estimate_accuracy.py
"""

import numpy as np

from nuzeros import batch_zeros, nu_asymp_w

N_MAX = 300

rel = {}
for z in (1.0, 2.0):
    exact = batch_zeros(N_MAX, z)
    rel[z] = np.array(
        [
            abs(nu_asymp_w(n, z).value / exact[n - 1].nu - 1.0)
            for n in range(1, N_MAX + 1)
        ]
    )
    print(f"z = {z}:")
    for n in (1, 2, 3, 5, 10, 30, 100, 300):
        print(f"  n = {n:4d}   nu = {exact[n-1].nu:14.8f}   "
              f"rel err = {rel[z][n-1]:.3e}")

# empirical decay exponent over the second half
ns = np.arange(1, N_MAX + 1)
for z in (1.0, 2.0):
    mask = ns >= 50
    slope = np.polyfit(np.log(ns[mask]), np.log(rel[z][mask]), 1)[0]
    print(f"z = {z}: error ~ n^{slope:.2f} over n in [50, {N_MAX}]")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for z, marker in ((1.0, "o"), (2.0, "s")):
        ax.loglog(ns, rel[z], marker, ms=2.5, ls="none", label=f"z = {z:g}")
    ax.set(xlabel="zero index n", ylabel="|estimate/exact - 1|",
           title="Lambert-W estimate accuracy")
    ax.legend()
    fig.tight_layout()
    fig.savefig("zero_estimate_accuracy.png", dpi=120)
    print("wrote zero_estimate_accuracy.png")
except ImportError:
    print("matplotlib not installed; skipped the figure")
