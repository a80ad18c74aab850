"""Principal branch of the Lambert W function and related transcendental solves.

All functions here are pure and thread-safe.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergence, OverflowGuard

_INV_E = math.exp(-1.0)
_EPS = math.ulp(1.0)
_MAX_ITER = 50


@dataclass(frozen=True)
class WSeriesOrder:
    """Truncation level of the large-argument log series for W.

    terms must be 1, 2 or 3: W(x) ~ ln x - ln ln x + (ln ln x)/ln x.
    """

    terms: int

    def __post_init__(self):
        if self.terms not in (1, 2, 3):
            raise DomainError(f"series order must be 1, 2 or 3, got {self.terms}")


def w0(x, tol=1e-14):
    """Evaluate the principal branch W0(x), the solution of w*exp(w) = x.

    Parameters
    ----------
    x : float
        Argument, x >= -1/e.
    tol : float
        Residual tolerance: the result satisfies
        ``|w*exp(w) - x| <= tol * max(|x|, 1)``.

    Returns
    -------
    float
        W0(x), monotone nondecreasing in x, with W0 >= -1.

    Raises
    ------
    DomainError
        If x < -1/e (no real principal-branch value).
    NonConvergence
        If Halley iteration hits its cap (indicates a bug, not bad input).
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    if math.isnan(x):
        raise DomainError("x is NaN")
    if x < -_INV_E:
        raise DomainError(f"w0 requires x >= -1/e = {-_INV_E}, got {x}")
    if x == 0.0:
        return 0.0

    # Initial guess: branch-point series near -1/e, log-based guess beyond.
    if x < 1.2:
        # sqrt(2(e*x + 1)) series about the branch point; argument clamped
        # against roundoff for x within one ulp of -1/e.
        p = math.sqrt(max(2.0 * (math.e * x + 1.0), 0.0))
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)))
    else:
        lx = math.log(x)
        w = lx - math.log(lx)

    scale = max(abs(x), 1.0)
    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        if abs(f) <= tol * scale:
            return w
        # Halley step
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        step = f / denom
        w -= step
        if w < -1.0:
            w = -1.0
        if abs(step) <= 2.0 * _EPS * (1.0 + abs(w)):
            ew = math.exp(w)
            if abs(w * ew - x) <= tol * scale:
                return w
    ew = math.exp(w)
    if abs(w * ew - x) <= tol * scale:
        return w
    raise NonConvergence(f"Halley iteration for W({x}) did not meet tol={tol}")


def w_series(x, order):
    """Truncated large-argument series for W: ln x - ln ln x + ln ln x / ln x.

    Parameters
    ----------
    x : float
        Argument; must satisfy x > 1 for one term, x > e for two or three
        terms (so every retained term is defined and real).
    order : WSeriesOrder or int
        Number of leading terms kept (1, 2 or 3).

    Returns
    -------
    float
        Sum of the first ``order.terms`` terms.
    """
    if isinstance(order, int):
        order = WSeriesOrder(order)
    terms = order.terms
    if terms == 1:
        if x <= 1.0:
            raise DomainError(f"one-term series needs x > 1, got {x}")
        return math.log(x)
    if x <= math.e:
        raise DomainError(f"{terms}-term series needs x > e, got {x}")
    lx = math.log(x)
    llx = math.log(lx)
    if terms == 2:
        return lx - llx
    return lx - llx + llx / lx


def solve_xlog(b, p, tol=1e-12):
    """Solve b*X + X*ln(X) = p for X > 0 via X = p / W(exp(b) * p).

    Parameters
    ----------
    b : float
        Linear coefficient.
    p : float
        Right-hand side, p > 0.
    tol : float
        Residual tolerance relative to max(p, 1). Values below about
        100*eps may be unattainable in double precision.

    Returns
    -------
    float
        The solution X, satisfying ``|b*X + X*ln(X) - p| <= tol*max(p, 1)``.
    """
    if p <= 0.0 or math.isnan(p):
        raise DomainError(f"solve_xlog requires p > 0, got {p}")
    y = b + math.log(p)
    if y <= 700.0:
        arg = math.exp(y)
        # the W residual enters the X residual divided by arg, so ask for
        # absolute accuracy when arg < 1
        w = w0(arg, tol=min(tol, 1e-13) * min(1.0, arg))
    else:
        # exp(b)*p overflows: solve w + ln(w) = y directly (w is large).
        w = _w_of_exp(y)
    x = p / w if w > 0.0 else p / max(w, 5e-324)
    if not math.isfinite(x):
        raise OverflowGuard(f"solve_xlog({b}, {p}) left floating range")
    resid = b * x + x * math.log(x) - p
    if abs(resid) > tol * max(p, 1.0):
        raise NonConvergence(
            f"solve_xlog residual {resid:.3e} exceeds tol for b={b}, p={p}"
        )
    return x


def _w_of_exp(y):
    """W(exp(y)) for large y, via Newton on w + ln(w) = y."""
    w = y - math.log(y)
    for _ in range(_MAX_ITER):
        step = (w + math.log(w) - y) * w / (w + 1.0)
        w -= step
        if abs(step) <= 4.0 * _EPS * w:
            return w
    raise NonConvergence(f"log-domain Newton for W(e^{y}) stalled")
