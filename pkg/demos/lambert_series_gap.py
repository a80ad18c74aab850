"""How slowly the log series approaches the Lambert W function.

W(x) = ln x - ln ln x + (ln ln x)/ln x + ... converges so slowly that even
three terms are percent-level off at x ~ 1e4. This is the reason the zero
estimates keep W itself instead of truncating it.

Run: python demos/lambert_series_gap.py
"""

import numpy as np

from nuzeros import w0, w_series

xs = np.logspace(1, 8, 120)
w = np.array([w0(float(x)) for x in xs])
s1 = np.array([w_series(float(x), 1) for x in xs])
s2 = np.array([w_series(float(x), 2) for x in xs])
s3 = np.array([w_series(float(x), 3) for x in xs])

print(f"{'x':>12} {'W(x)':>10} {'1 term':>10} {'2 terms':>10} {'3 terms':>10}")
for i in range(0, len(xs), 17):
    print(
        f"{xs[i]:12.3e} {w[i]:10.5f} {s1[i]:10.5f} {s2[i]:10.5f} {s3[i]:10.5f}"
    )

print("\nrelative error of the truncations:")
print(f"{'x':>12} {'1 term':>10} {'2 terms':>10} {'3 terms':>10}")
for i in range(0, len(xs), 17):
    print(
        f"{xs[i]:12.3e} {abs(s1[i]/w[i]-1):10.2e} "
        f"{abs(s2[i]/w[i]-1):10.2e} {abs(s3[i]/w[i]-1):10.2e}"
    )

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.semilogx(xs, w, "k-", lw=2, label="W(x)")
    ax.semilogx(xs, s1, "--", label="ln x")
    ax.semilogx(xs, s2, "-.", label="ln x - ln ln x")
    ax.semilogx(xs, s3, ":", label="+ ln ln x / ln x")
    ax.set(xlabel="x", ylabel="value", title="Lambert W vs its log series")
    ax.legend()
    fig.tight_layout()
    fig.savefig("lambert_series_gap.png", dpi=120)
    print("\nwrote lambert_series_gap.png")
except ImportError:
    print("\nmatplotlib not installed; skipped the figure")
