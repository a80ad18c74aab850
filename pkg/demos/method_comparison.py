"""Every closed-form zero estimate against the exact solver at z = 1.

Reproduces the method shoot-out: the Lambert-W form wins at every order,
the truncated-log variants close the gap only logarithmically, the three
literature formulas trail far behind, and the unexpanded quantization
condition is only marginally better than the Lambert-W form.

Run: python demos/method_comparison.py  (writes method_comparison.csv)
"""

import sys

from nuzeros.cli import main

N_MAX = 1000

code = main(["compare", "--z", "1", "--n-max", str(N_MAX),
             "--out", "method_comparison.csv"])
if code != 0:
    sys.exit(code)
print("wrote method_comparison.csv")

rows = [line.split(",") for line in
        open("method_comparison.csv").read().strip().split("\n")]
header = rows[0]
cols = {name: i for i, name in enumerate(header)}
show = ["lambert_w", "series_1", "series_3", "mk", "cochran", "bk",
        "exact_wkb_v"]
print(f"{'n':>6} " + " ".join(f"{m:>12}" for m in show))
for row in rows[1:]:
    n = int(row[0])
    if n not in (1, 3, 10, 100, 1000):
        continue
    cells = []
    for m in show:
        v = row[cols[m + "_relerr"]]
        cells.append(f"{float(v):12.2e}" if v else " " * 12)
    print(f"{n:6d} " + " ".join(cells))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.5, 5))
    for m in show:
        ns, errs = [], []
        for row in rows[1:]:
            v = row[cols[m + "_relerr"]]
            if v:
                ns.append(int(row[0]))
                errs.append(float(v))
        ax.loglog(ns, errs, label=m)
    ax.set(xlabel="zero index n", ylabel="relative error",
           title="Zero estimates vs exact, z = 1")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig("method_comparison.png", dpi=120)
    print("wrote method_comparison.png")
except ImportError:
    print("matplotlib not installed; skipped the figure")
