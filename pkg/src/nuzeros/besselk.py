"""Direct evaluation of K_inu(x) for real order parameter nu and x > 0.

Uses the cosine-transform representation

    K_inu(x) = integral_0^inf cos(nu*t) * exp(-x*cosh(t)) dt

which is real for real nu (the integrand is even in nu). The result is an
O(exp(-pi*nu/2)) residue of an O(exp(-x)) integrand, so the quadrature
cancels roughly exp(pi*nu/2 - x) of its envelope. Panels are therefore
accumulated in 80-bit extended precision, and beyond ``nu_cap`` the
evaluation refuses to return noise and raises PrecisionLoss; the
phase-function solver in ``slprufer`` covers that regime instead. This
module is the small-order ground-truth oracle by design.

Pure functions; configs are immutable; thread-safe.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    NonConvergence,
    NoSignChange,
    PrecisionLoss,
    QuadratureFailure,
)

_LD = np.longdouble
_LD_EPS = float(np.finfo(_LD).eps)
# ln(1/eps) for the extended type; sets both tail truncation and the order cap
_LD_DIGITS = -math.log(_LD_EPS)

_GAUSS_N = 24


def _gauss_nodes_longdouble(n):
    """Gauss-Legendre nodes/weights on [-1, 1], Newton-refined in longdouble.

    Double-precision nodes would leave O(1e-16) relative node errors, which
    couple to the integrand derivative and dominate the cancellation noise
    floor; two extended-precision Newton sweeps fix that.
    """
    x = np.polynomial.legendre.leggauss(n)[0].astype(_LD)
    one = _LD(1.0)
    for _ in range(3):
        pkm1 = np.ones_like(x)
        pk = x.copy()
        for k in range(1, n):
            pkm1, pk = pk, ((2 * k + 1) * x * pk - k * pkm1) / _LD(k + 1)
        dpk = n * (x * pk - pkm1) / (x * x - one)
        x = x - pk / dpk
    pkm1 = np.ones_like(x)
    pk = x.copy()
    for k in range(1, n):
        pkm1, pk = pk, ((2 * k + 1) * x * pk - k * pkm1) / _LD(k + 1)
    dpk = n * (x * pk - pkm1) / (x * x - one)
    w = _LD(2.0) / ((one - x * x) * dpk * dpk)
    return x, w


_GL_X, _GL_W = _gauss_nodes_longdouble(_GAUSS_N)


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and cutoffs for the oscillatory K_inu integral.

    rel_tol is the target accuracy relative to the integrand's envelope
    (roughly K_0(x)); the *intrinsic* relative error of K_inu itself is
    worse by the cancellation factor exp(pi*nu/2).
    """

    rel_tol: float = 1e-12
    t_max_margin: float = 2.0
    max_panels: int = 512

    def __post_init__(self):
        if not 0.0 < self.rel_tol <= 1e-4:
            raise DomainError(f"rel_tol must be in (0, 1e-4], got {self.rel_tol}")
        if self.max_panels < 64:
            raise DomainError(f"max_panels must be >= 64, got {self.max_panels}")
        if self.t_max_margin < 1.0:
            raise DomainError(f"t_max_margin must be >= 1, got {self.t_max_margin}")


DEFAULT_QUAD = QuadratureConfig()


def nu_cap(x, cfg=DEFAULT_QUAD):
    """Largest order this module will evaluate at argument x.

    The cancellation eats exp(pi*nu/2) of the extended-precision budget;
    the cap keeps roughly three decimal digits of headroom. Weak x
    dependence (logarithmic) is absorbed in that margin.
    """
    return (2.0 / math.pi) * (_LD_DIGITS - 8.0)


def _panel_edges(nu, x, cfg):
    """Panel boundaries on [0, T]: cos(nu*t) half-period points, further
    split so no panel exceeds a width the exp(-x*cosh t) factor varies
    smoothly over."""
    decades = _LD_DIGITS + cfg.t_max_margin * math.log(10.0)
    t_max = math.acosh(1.0 + decades / x)
    width_cap = 0.4
    edges = [0.0]
    if nu > 0.0:
        half = math.pi / nu
        k = 0
        while True:
            t = (k + 0.5) * half
            if t >= t_max:
                break
            edges.append(t)
            k += 1
    edges.append(t_max)
    out = []
    for a, b in zip(edges[:-1], edges[1:]):
        pieces = max(1, math.ceil((b - a) / width_cap))
        for j in range(pieces):
            out.append(a + (b - a) * j / pieces)
    out.append(t_max)
    if len(out) - 1 > cfg.max_panels:
        raise QuadratureFailure(
            f"{len(out) - 1} panels exceed max_panels={cfg.max_panels} "
            f"for nu={nu}, x={x}"
        )
    return np.asarray(out, dtype=_LD)


def _integrate(nu, x, cfg, d_dnu):
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"x must be positive and finite, got {x}")
    if math.isnan(nu):
        raise DomainError("nu is NaN")
    nu = abs(float(nu))  # integrand is even in nu
    cap = nu_cap(x, cfg)
    if nu > cap:
        raise PrecisionLoss(
            f"nu={nu} exceeds the cancellation cap {cap:.1f} at x={x}; "
            "use the phase-function solver (slprufer) instead"
        )
    edges = _panel_edges(nu, x, cfg)
    a = edges[:-1]
    b = edges[1:]
    mid = (a + b) / _LD(2.0)
    half = (b - a) / _LD(2.0)
    # nodes: shape (panels, order)
    t = mid[:, None] + half[:, None] * _GL_X[None, :]
    damp = np.exp(-_LD(x) * np.cosh(t))
    if d_dnu:
        vals = -t * np.sin(_LD(nu) * t) * damp
    else:
        vals = np.cos(_LD(nu) * t) * damp
    panel_sums = (vals * _GL_W[None, :]).sum(axis=1) * half
    # accumulate smallest-magnitude first to limit roundoff in the big
    # cancelling sum
    order = np.argsort(np.abs(panel_sums))
    total = panel_sums[order].sum()
    return float(total)


def k_inu(nu, x, cfg=DEFAULT_QUAD):
    """K_inu(x): modified Bessel function with order i*nu, real x > 0.

    Real-valued; even in nu (negative nu is folded). Accuracy is
    cfg.rel_tol relative to the integrand envelope, which means the error
    *relative to the returned value* grows like exp(pi*nu/2); orders beyond
    nu_cap(x) raise PrecisionLoss instead of returning noise.
    """
    return _integrate(nu, x, cfg, d_dnu=False)


def k_inu_dnu(nu, x, cfg=DEFAULT_QUAD):
    """Derivative of K_inu(x) with respect to nu, same accuracy contract
    as k_inu."""
    return _integrate(nu, x, cfg, d_dnu=True)


def noise_floor(x, cfg=DEFAULT_QUAD):
    """Absolute scale below which k_inu values are quadrature noise."""
    edges = _panel_edges(0.0, x, cfg)
    envelope = _integrate(0.0, x, cfg, d_dnu=False)
    return 16.0 * _LD_EPS * envelope * math.sqrt(len(edges))


def refine_zero(nu_guess, x, bracket, cfg=DEFAULT_QUAD):
    """Polish a nu-zero of K_inu(x) inside a sign-changing bracket.

    Safeguarded Newton on k_inu/k_inu_dnu starting from nu_guess; any step
    leaving the bracket is replaced by bisection, and the bracket is
    tightened from the sign of each evaluation. Stops when the step falls
    under the noise-limited resolution, so the returned zero satisfies
    |k_inu(zero)| ~ noise_floor(x).
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise DomainError(f"invalid bracket {bracket}")
    if not lo <= nu_guess <= hi:
        raise DomainError(f"nu_guess {nu_guess} outside bracket {bracket}")
    f_lo = k_inu(lo, x, cfg)
    f_hi = k_inu(hi, x, cfg)
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise NoSignChange(
            f"k_inu has equal signs at bracket ends ({lo}, {hi}) for x={x}"
        )
    floor = noise_floor(x, cfg)
    nu = float(nu_guess)
    f = k_inu(nu, x, cfg)
    for _ in range(80):
        fp = k_inu_dnu(nu, x, cfg)
        if fp != 0.0:
            nu_new = nu - f / fp
        else:
            nu_new = 0.5 * (lo + hi)
        if not lo < nu_new < hi:
            nu_new = 0.5 * (lo + hi)
        f_new = k_inu(nu_new, x, cfg)
        if math.copysign(1.0, f_new) == math.copysign(1.0, f_lo):
            lo = nu_new
        else:
            hi = nu_new
        step = abs(nu_new - nu)
        nu, f = nu_new, f_new
        # resolution limit: noise width of the root crossing
        fp = abs(fp) if fp != 0.0 else 1.0
        if step <= max(1e-14 * nu, 0.25 * floor / fp) and abs(f) <= 4.0 * floor:
            return nu
        if hi - lo <= 1e-14 * nu:
            return nu
    raise NonConvergence(
        f"refine_zero did not settle for x={x}, bracket ({lo}, {hi})"
    )
