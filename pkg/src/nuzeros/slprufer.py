"""Exact nu-zeros of K_inu(z) via the equivalent Dirichlet eigenproblem.

K_inu(z) = 0 is recast as the boundary-value problem

    psi'' = (z^2 * exp(2s) - nu^2) * psi,   psi(0) = 0,  psi(+inf) = 0,

whose n-th eigenvalue is nu_n^2. The solver propagates a scaled Pruefer
angle backward from deep inside the classically forbidden region, where
the decaying solution's angle is attracting, down to s = 0. Only the
angle is ever represented, never the exponentially small amplitude, so
the exp(-pi*nu/2) underflow that kills direct evaluation of K_inu cannot
occur, and the cost per eigenvalue does not grow with its index.

Propagation is piecewise-exact: on each mesh interval the coefficient
q(s) = z^2*exp(2s) - nu^2 is frozen at its midpoint and the
constant-coefficient angle update is applied in closed form (a linear
phase advance where q < 0, a Moebius map in tanh(sqrt(q)*h) where q > 0,
plus an arctan rematch wherever the local scale sqrt(|q|) changes
between intervals). The mesh is graded like sqrt(distance) around the
turning point, equalizing the per-interval coefficient error, and the
remaining even-order error is removed by Richardson extrapolation over
meshes at 1x/2x/4x density with an a-posteriori error estimate. A
conventional adaptive Runge-Kutta integration of the angle equation
would have to resolve every one of the ~n oscillations per sweep and
cannot reach n ~ 10^4 in reasonable time; the piecewise-exact map's cost
per sweep is set by accuracy alone.

The phase is normalized so the Dirichlet condition at s = 0 reads
theta = n*pi: the n-th zero is the unique nu with
phase_at_origin(nu) = n*pi, and the n-th eigenfunction has n - 1
interior nodes.

All operations are pure given (args, cfg); thread-safe. batch_zeros
evaluates whole ranges of n through vector sweeps but assembles results
in index order, deterministically.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import BracketFailure, DomainError, OdeFailure
from .estimators import atanh_minus
from .lambertw import w0

_PI = math.pi
_MAX_BASE = 1 << 21
_TINY = 1e-300


@dataclass(frozen=True)
class PhaseSolverConfig:
    """Domain truncation and accuracy control for the phase sweep.

    ode_rel_tol/ode_abs_tol bound the phase truth error as
    ``rel*max(|theta|, 1) + abs``, enforced through mesh refinement;
    bisect_tol is the relative tolerance on a located zero nu.
    s_max_margin sets how many turning-point widths of forbidden region
    are kept beyond the turning point (a barrier-integral floor is always
    enforced on top of it).
    """

    s_max_margin: float = 3.0
    ode_rel_tol: float = 1e-12
    ode_abs_tol: float = 1e-14
    bisect_tol: float = 1e-11

    def __post_init__(self):
        if self.s_max_margin < 3.0:
            raise DomainError(f"s_max_margin must be >= 3, got {self.s_max_margin}")
        for name in ("ode_rel_tol", "ode_abs_tol"):
            v = getattr(self, name)
            if not 0.0 < v <= 1e-6:
                raise DomainError(f"{name} must be in (0, 1e-6], got {v}")
        if not 0.0 < self.bisect_tol <= 1e-9:
            raise DomainError(f"bisect_tol must be in (0, 1e-9], got {self.bisect_tol}")


DEFAULT_PHASE = PhaseSolverConfig()


@dataclass(frozen=True)
class EigenResult:
    """One nu-zero: index n (counted from 1), argument z, the zero nu,
    the dimensionless eigenvalue epsilon = nu^2 of the exponential well
    at u = z^2, and the eigenfunction's interior node count n - 1."""

    n: int
    z: float
    nu: float
    epsilon: float
    node_count: int

    def __post_init__(self):
        if self.epsilon != self.nu * self.nu:
            raise DomainError("epsilon must equal nu^2 exactly")
        if self.node_count != self.n - 1:
            raise DomainError("node_count must equal n - 1")


def _geometry(nu, z, s_margin):
    """Mesh geometry (s*, tau_g, tau_max): clamped turning point, handoff
    from sqrt-graded to uniform forbidden mesh, and forbidden depth.

    tau_max keeps the barrier integral of sqrt(q) at ~20 or more, so the
    domain-truncation and initial-angle errors are damped below 1e-17.
    """
    sstar = math.log(nu / z) if nu > z else 0.0
    tp = min(s_margin * (2.0 * nu * nu) ** (-1.0 / 3.0), 2.0 * s_margin)
    tau_max = max(tp, math.log(20.0 + 20.0 / nu), 5.0 - sstar)
    return sstar, 1.5, tau_max


def _counts(base):
    """Interval counts (allowed, graded forbidden, uniform forbidden)."""
    return base, max(16, base // 2), max(8, base // 16)


def _base_hint(nu, z):
    """Mesh density at which the even-order error expansion is clean:
    about 3.5 intervals per pi of accumulated phase."""
    if nu > z:
        action = nu * atanh_minus(math.sqrt(1.0 - (z / nu) ** 2))
    else:
        action = 0.0
    return max(48, int(math.ceil(3.5 * (action / _PI + 1.0))))


def _validate_nu(nu, z):
    if not (z > 0.0 and math.isfinite(z)):
        raise DomainError(f"z must be positive and finite, got {z}")
    if not (1e-8 <= nu < 1e15):
        raise DomainError(f"nu must lie in [1e-8, 1e15), got {nu}")


def _theta_scalar(nu, z, counts, s_margin):
    """Backward phase sweep at one nu, math-module loop (fast at width 1).

    Mirrors _theta_batch step for step; the pair is cross-checked in the
    test suite.
    """
    n1, n2a, n2b = counts
    sstar, tau_g, tau_max = _geometry(nu, z, s_margin)
    sg = math.sqrt(tau_g)
    hu = (tau_max - tau_g) / n2b
    z2 = z * z
    nu2 = nu * nu

    e2 = z2 * math.exp(2.0 * (sstar + tau_max))
    qe = e2 - nu2
    ell = -math.sqrt(qe) - 0.5 * e2 / qe

    th = 0.0
    c_prev = -1.0

    def forbidden(sm, h):
        nonlocal th, c_prev
        c = math.sqrt(z2 * math.exp(2.0 * sm) - nu2) + _TINY
        if c_prev < 0.0:
            th = math.atan(c / ell)
        else:
            g = c / c_prev
            s_, co = math.sin(th), math.cos(th)
            th += math.atan((g - 1.0) * s_ * co / (co * co + g * s_ * s_))
        t = math.tanh(c * h)
        s_, co = math.sin(th), math.cos(th)
        d = (math.atan2(s_ - t * co, co - t * s_) - th) % _PI
        if d > 0.5 * _PI:
            d -= _PI
        th += d
        c_prev = c

    for k in range(n2b - 1, -1, -1):
        forbidden(sstar + tau_g + hu * (k + 0.5), hu)
    for k in range(n2a - 1, -1, -1):
        forbidden(sstar + (sg * (k + 0.5) / n2a) ** 2, (sg / n2a) ** 2 * (2 * k + 1))
    if sstar > 0.0:
        inv = 1.0 / n1
        for k in range(n1):
            sm = sstar * (1.0 - ((k + 0.5) * inv) ** 2)
            h = sstar * (2 * k + 1) * inv * inv
            c = math.sqrt(nu2 - z2 * math.exp(2.0 * sm)) + _TINY
            g = c / c_prev
            s_, co = math.sin(th), math.cos(th)
            th += math.atan((g - 1.0) * s_ * co / (co * co + g * s_ * s_))
            th -= c * h
            c_prev = c
    # read the final angle in the mesh-independent scale nu: the last
    # interval's local scale drifts O(h), which would leak an O(h) error
    # proportional to sin(2*theta(0)) into the phase
    g = nu / c_prev
    s_, co = math.sin(th), math.cos(th)
    th += math.atan((g - 1.0) * s_ * co / (co * co + g * s_ * s_))
    return -th


def _theta_batch(nus, z, counts, s_margin):
    """Backward phase sweep for a vector of nu at once.

    Mesh geometry is per-element but interval counts are shared, so every
    update is one width-preserving numpy operation. Zone membership is
    uniform across elements: allowed-zone intervals satisfy q < 0
    whenever s* > 0 and degenerate to zero-width no-ops otherwise.
    """
    n1, n2a, n2b = counts
    nu = np.asarray(nus, dtype=float)
    z2 = z * z
    nu2 = nu * nu
    sstar = np.where(nu > z, np.log(np.maximum(nu, _TINY) / z), 0.0)
    tp = np.minimum(s_margin * (2.0 * nu2) ** (-1.0 / 3.0), 2.0 * s_margin)
    tau_max = np.maximum(np.maximum(tp, np.log(20.0 + 20.0 / nu)), 5.0 - sstar)
    tau_g = 1.5
    sg = math.sqrt(tau_g)
    hu = (tau_max - tau_g) / n2b

    e2 = z2 * np.exp(2.0 * (sstar + tau_max))
    qe = e2 - nu2
    ell = -np.sqrt(qe) - 0.5 * e2 / qe

    c = np.sqrt(z2 * np.exp(2.0 * (sstar + tau_g + hu * (n2b - 0.5))) - nu2) + _TINY
    th = np.arctan(c / ell)
    c_prev = c

    def rematch(c):
        g = c / c_prev
        s_ = np.sin(th)
        co = np.cos(th)
        return th + np.arctan((g - 1.0) * s_ * co / (co * co + g * s_ * s_))

    def forbidden_step(c, h):
        t = np.tanh(c * h)
        s_ = np.sin(th)
        co = np.cos(th)
        d = (np.arctan2(s_ - t * co, co - t * s_) - th) % _PI
        return th + np.where(d > 0.5 * _PI, d - _PI, d)

    th = forbidden_step(c, hu)
    for k in range(n2b - 2, -1, -1):
        c = np.sqrt(z2 * np.exp(2.0 * (sstar + tau_g + hu * (k + 0.5))) - nu2) + _TINY
        th = rematch(c)
        c_prev = c
        th = forbidden_step(c, hu)
    for k in range(n2a - 1, -1, -1):
        sm = sstar + (sg * (k + 0.5) / n2a) ** 2
        h = (sg / n2a) ** 2 * (2 * k + 1)
        c = np.sqrt(z2 * np.exp(2.0 * sm) - nu2) + _TINY
        th = rematch(c)
        c_prev = c
        th = forbidden_step(c, h)
    inv = 1.0 / n1
    for k in range(n1):
        sm = sstar * (1.0 - ((k + 0.5) * inv) ** 2)
        h = sstar * (2 * k + 1) * (inv * inv)
        c = np.sqrt(np.abs(nu2 - z2 * np.exp(2.0 * sm))) + _TINY
        th = rematch(c)
        c_prev = c
        th = th - c * h
    # mesh-independent final scale, see _theta_scalar
    th = rematch(nu)
    return -th


def _tol_theta(theta, cfg, base=0):
    """Tolerance on the extrapolated phase; includes the accumulated
    roundoff floor of a sweep with ~11*base angle updates, which no
    amount of refinement can beat."""
    floor = 32.0 * 2.3e-16 * math.sqrt(11.0 * base + 1.0) * max(abs(theta), 1.0)
    return cfg.ode_rel_tol * max(abs(theta), 1.0) + cfg.ode_abs_tol + floor


def _refine_scalar(nu, z, cfg):
    """Richardson table at densities (B, 2B, 4B), refined until the
    extrapolation error estimate meets the config tolerance.

    Returns (theta_best, base) where base is the validated density: the
    two-level value at that base is itself within tolerance, so root
    iterations may use it directly.
    """
    base = _base_hint(nu, z)
    m = cfg.s_max_margin
    while True:
        t0 = _theta_scalar(nu, z, _counts(base), m)
        t1 = _theta_scalar(nu, z, _counts(2 * base), m)
        t2 = _theta_scalar(nu, z, _counts(4 * base), m)
        r11 = t1 + (t1 - t0) / 3.0
        r21 = t2 + (t2 - t1) / 3.0
        r22 = r21 + (r21 - r11) / 15.0
        if abs(r21 - r11) + abs(r22 - r21) <= _tol_theta(r22, cfg, base):
            return r22, base
        base *= 2
        if base > _MAX_BASE:
            raise OdeFailure(
                f"phase mesh refinement exceeded {_MAX_BASE} intervals for "
                f"nu={nu}, z={z}"
            )


def phase_at_origin(nu, z, cfg=DEFAULT_PHASE):
    """Phase theta(nu) at s = 0; nu is the n-th zero iff theta(nu) = n*pi.

    Continuous and strictly increasing in nu (Sturm oscillation theory).
    """
    _validate_nu(nu, z)
    theta, _ = _refine_scalar(float(nu), z, cfg)
    return theta


def _r11_scalar(nu, z, cfg, base):
    t0 = _theta_scalar(nu, z, _counts(base), cfg.s_max_margin)
    t1 = _theta_scalar(nu, z, _counts(2 * base), cfg.s_max_margin)
    return t1 + (t1 - t0) / 3.0


def _slope(nu, z):
    """d(theta)/d(nu) to quasiclassical accuracy, artanh(sqrt(1-(z/nu)^2));
    only steers Newton steps and converts phase residuals to nu errors,
    so percent-level accuracy suffices."""
    r = z / nu
    if r >= 1.0:
        return 1e-3
    return max(math.atanh(math.sqrt(1.0 - r * r)), 1e-3)


def _check_index(n, name="n"):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"{name} must be an integer >= 1, got {n!r}")


def _asymp_value(n, z):
    q = _PI * (n - 0.25)
    return q / w0(2.0 * q / (math.e * z))


def nu_zero(n, z, cfg=DEFAULT_PHASE):
    """The n-th nu-zero of K_inu(z), n >= 1, as an EigenResult.

    Brackets theta(nu) - n*pi around the Lambert-W asymptotic estimate
    using half the asymptotic inter-zero spacing per side (widened
    geometrically if the phase shows no sign change), then solves with
    Brent's method to bisect_tol relative accuracy on a mesh validated at
    the bracket top.
    """
    _check_index(n)
    if not (z > 0.0 and math.isfinite(z)):
        raise DomainError(f"z must be positive and finite, got {z}")
    est = _asymp_value(n, z)
    spacing = _asymp_value(n + 1, z) - est
    lo = max(est - 0.55 * spacing, 1e-6)
    hi = est + 0.55 * spacing
    _, base = _refine_scalar(hi, z, cfg)
    target = n * _PI

    def f(v):
        return _r11_scalar(v, z, cfg, base) - target

    f_lo, f_hi = f(lo), f(hi)
    attempts = 0
    while f_lo * f_hi > 0.0:
        attempts += 1
        if attempts > 8:
            raise BracketFailure(
                f"no phase sign change bracketing zero n={n}, z={z}; "
                f"last bracket ({lo}, {hi})"
            )
        lo = max(lo - 0.8 * attempts * spacing, 1e-6)
        hi = hi + 0.8 * attempts * spacing
        f_lo, f_hi = f(lo), f(hi)
    root = brentq(
        f,
        lo,
        hi,
        rtol=max(0.5 * cfg.bisect_tol, 9e-16),
        xtol=0.25 * cfg.bisect_tol * lo,
    )
    return EigenResult(n=n, z=float(z), nu=root, epsilon=root * root, node_count=n - 1)


def _upsample_max(sub, stride, width):
    """Conservative full-width upsample of subsampled error samples:
    neighborhood rolling max, repeated across the stride."""
    padded = np.concatenate(([sub[0]], sub, [sub[-1]]))
    roll = np.maximum(np.maximum(padded[:-2], padded[1:-1]), padded[2:])
    return np.repeat(roll, stride)[:width]


def batch_zeros(n_max, z, cfg=DEFAULT_PHASE):
    """All nu-zeros for n = 1..n_max at fixed z, ordered by n.

    Processes chunks of consecutive n with vectorized Newton iterations on
    theta(nu) - n*pi, starting from the Lambert-W estimates, steps clipped
    to stay inside each zero's asymptotic spacing. Each chunk is then
    verified a posteriori against Richardson-refined phase values and
    nudged once with the refined residual; any element whose estimated nu
    error exceeds bisect_tol falls back to the bracketed scalar solver.
    Output is deterministic: fixed chunking, fixed iteration counts, no
    run-to-run state.
    """
    _check_index(n_max, "n_max")
    if not (z > 0.0 and math.isfinite(z)):
        raise DomainError(f"z must be positive and finite, got {z}")
    results = [None] * n_max
    margin = cfg.s_max_margin

    q = _PI * (np.arange(1, n_max + 2) - 0.25)
    asymp = q / np.array([w0(v) for v in 2.0 * q / (math.e * z)])

    bounds = []
    lo = 1
    span = 512
    while lo <= n_max:
        hi = min(lo + span - 1, n_max)
        bounds.append((lo, hi))
        lo = hi + 1
        span = min(2 * span, 4096)

    for lo_n, hi_n in bounds:
        idx = np.arange(lo_n, hi_n + 1)
        width = len(idx)
        nus = asymp[lo_n - 1 : hi_n].copy()
        spacing = asymp[lo_n : hi_n + 1] - asymp[lo_n - 1 : hi_n]
        targets = idx * _PI
        slopes = np.array([_slope(v, z) for v in nus])
        _, base = _refine_scalar(float(nus[-1] + 0.6 * spacing[-1]), z, cfg)
        c1, c2, c4 = _counts(base), _counts(2 * base), _counts(4 * base)

        # cheap fixed-level Newton: the one-mesh phase carries an O(h^2)
        # bias, corrected by the refined nudge below
        iters = 3 if hi_n <= 2048 else 2
        for _ in range(iters):
            resid = _theta_batch(nus, z, c1, margin) - targets
            nus = nus - np.clip(resid / slopes, -0.45 * spacing, 0.45 * spacing)

        t0 = _theta_batch(nus, z, c1, margin)
        t1 = _theta_batch(nus, z, c2, margin)
        r11 = t1 + (t1 - t0) / 3.0
        stride = 8 if width >= 64 else 1
        sub = slice(0, width, stride)
        t2s = _theta_batch(nus[sub], z, c4, margin)
        r21s = t2s + (t2s - t1[sub]) / 3.0
        est = _upsample_max(3.0 * np.abs(r21s - r11[sub]) + 1e-15, stride, width)

        resid = r11 - targets
        nudge = np.clip(resid / slopes, -0.45 * spacing, 0.45 * spacing)
        nus = nus - nudge
        nu_err = (est + 2e-3 * np.abs(resid)) / slopes + 0.5 * nudge * nudge / (nus * slopes)
        ok = nu_err <= cfg.bisect_tol * nus

        for j, n in enumerate(idx):
            if ok[j]:
                v = float(nus[j])
                results[n - 1] = EigenResult(
                    n=int(n), z=float(z), nu=v, epsilon=v * v, node_count=int(n) - 1
                )
            else:
                try:
                    results[n - 1] = nu_zero(int(n), z, cfg)
                except Exception as exc:
                    raise type(exc)(f"batch element n={n}: {exc}") from exc
    return results
