"""Closed-form estimates for nu-zeros of K_inu(z) and exponential-well levels.

The main estimator inverts the quasiclassical quantization condition with the
Lambert W function; the truncated-log variants and the three literature
formulas exist for comparison, and ``v_solve``/``nu_exact_wkb`` invert the
quantization condition exactly instead of through the large-energy expansion.

Everything here is a pure function; thread-safe.
"""

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergence
from .lambertw import WSeriesOrder, w0, w_series

_PI = math.pi


class Method(enum.Enum):
    """Identity tags for the zero estimators, in fixed table order."""

    LAMBERT_W = "lambert_w"
    SERIES_1 = "series_1"
    SERIES_2 = "series_2"
    SERIES_3 = "series_3"
    MAGNUS_KOTIN = "mk"
    COCHRAN = "cochran"
    BAGIROVA_KHANMAMEDOV = "bk"
    EXACT_WKB_V = "exact_wkb_v"


@dataclass(frozen=True)
class PotentialParams:
    """Physical parameters of the exponential well U0*exp(2x/a), x > 0."""

    U0: float
    a: float
    m: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("U0", "a", "m", "hbar"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise DomainError(f"{name} must be positive and finite, got {v}")

    @property
    def u(self):
        """Dimensionless well strength U0 * 2*m*a^2 / hbar^2."""
        return self.U0 * 2.0 * self.m * self.a * self.a / (self.hbar * self.hbar)


@dataclass(frozen=True)
class ZeroEstimate:
    """One estimator's value for the n-th nu-zero at fixed argument z."""

    n: int
    z: float
    method: Method
    value: float


def _check_nz(n, z):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"zero index n must be an integer >= 1, got {n!r}")
    if not (z > 0.0 and math.isfinite(z)):
        raise DomainError(f"z must be positive and finite, got {z}")


def nu_asymp_w(n, z):
    """Lambert-W asymptotic zero: pi*(n - 1/4) / W(2*pi*(n - 1/4)/(e*z))."""
    _check_nz(n, z)
    q = _PI * (n - 0.25)
    return ZeroEstimate(n, z, Method.LAMBERT_W, q / w0(2.0 * q / (math.e * z)))


def nu_asymp_series(n, z, terms):
    """Same as nu_asymp_w but with W replaced by its truncated log series.

    Raises DomainError when the truncated series is undefined for the
    W argument (small n); comparison tables leave those cells empty.
    """
    _check_nz(n, z)
    if isinstance(terms, int):
        terms = WSeriesOrder(terms)
    q = _PI * (n - 0.25)
    val = q / w_series(2.0 * q / (math.e * z), terms)
    tag = {1: Method.SERIES_1, 2: Method.SERIES_2, 3: Method.SERIES_3}[terms.terms]
    return ZeroEstimate(n, z, tag, val)


def nu_mk(n, z):
    """Magnus--Kotin asymptotic: pi*(n + 1/4) / ln(pi*(n + 1/4)/(e*z))."""
    _check_nz(n, z)
    q = _PI * (n + 0.25)
    if q <= math.e * z:
        raise DomainError(f"nu_mk needs pi*(n+1/4) > e*z; n={n}, z={z}")
    return ZeroEstimate(n, z, Method.MAGNUS_KOTIN, q / math.log(q / (math.e * z)))


def nu_cochran(n, z):
    """Cochran asymptotic: pi*n / ln(3*pi*n/(e*z))."""
    _check_nz(n, z)
    if 3.0 * _PI * n <= math.e * z:
        raise DomainError(f"nu_cochran needs 3*pi*n > e*z; n={n}, z={z}")
    return ZeroEstimate(
        n, z, Method.COCHRAN, _PI * n / math.log(3.0 * _PI * n / (math.e * z))
    )


def nu_bk(n, z=1.0):
    """Bagirova--Khanmamedov asymptotic pi*n/ln(n); has no z dependence.

    z is accepted only so the result can be tagged with the table's z.
    """
    _check_nz(n, z)
    if n < 2:
        raise DomainError("nu_bk is undefined at n = 1 (ln 1 = 0)")
    return ZeroEstimate(n, z, Method.BAGIROVA_KHANMAMEDOV, _PI * n / math.log(n))


def atanh_minus(s):
    """artanh(s) - s, accurate for small s where direct subtraction cancels."""
    if not 0.0 <= s < 1.0:
        raise DomainError(f"atanh_minus needs 0 <= s < 1, got {s}")
    if s < 0.25:
        # sum s^(2k+1)/(2k+1) from k=1; ratio s^2 < 1/16 so few terms needed
        s2 = s * s
        term = s * s2
        total = 0.0
        k = 1
        while True:
            total += term / (2 * k + 1)
            term *= s2
            k += 1
            if term < 1e-20 * total or k > 60:
                return total
    return math.atanh(s) - s


def v_solve(x, tol=1e-13):
    """Invert (artanh(sqrt(1-1/V)) - sqrt(1-1/V))*V = x for V >= 1.

    Substituting s = sqrt(1 - 1/V) turns the condition into
    g(s) = (artanh(s) - s)/(1 - s^2) = x with g monotone on [0, 1), which a
    safeguarded Newton iteration solves; the initial guess inverts the
    large-V limit through the Lambert W function.

    Returns V(x) with residual |g(s) - x| <= tol * max(x, 1), up to the
    double-precision resolution of s (for very large x the residual floor
    is O(V^2 * eps), while V itself stays accurate to ~V*eps relative);
    V(0) = 1.
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    if not (x >= 0.0 and math.isfinite(x)):
        raise DomainError(f"v_solve requires x >= 0, got {x}")
    if x == 0.0:
        return 1.0

    if x < 0.4:
        s = min((3.0 * x) ** (1.0 / 3.0), 0.97)
    else:
        v0 = 2.0 * x / w0(8.0 * x / (math.e * math.e))
        s = math.sqrt(max(1.0 - 1.0 / v0, 1e-8)) if v0 > 1.0 else 0.5
    lo, hi = 0.0, 1.0 - 1e-14
    scale = max(x, 1.0)
    best_u, best_f = 1.0, math.inf
    for _ in range(100):
        u = 1.0 / ((1.0 - s) * (1.0 + s))
        am = atanh_minus(s)
        f = am * u - x
        if abs(f) < best_f:
            best_u, best_f = u, abs(f)
        if abs(f) <= tol * scale:
            return u
        if f > 0.0:
            hi = s
        else:
            lo = s
        if hi - lo <= 4.0 * math.ulp(s):
            return best_u  # s resolved to adjacent doubles
        df = u * u * s * (s + 2.0 * am)
        step = f / df
        s_new = s - step
        if not lo < s_new < hi:
            s_new = 0.5 * (lo + hi)
        s = s_new
    raise NonConvergence(f"v_solve({x}) did not reach tol={tol}")


def nu_exact_wkb(n, z, tol=1e-13):
    """Zero estimate from the unexpanded quantization condition: the
    unique nu > z satisfying

        nu * (artanh(s) - s) = pi*(n - 1/4),   s = sqrt(1 - (z/nu)^2).

    The Lambert-W estimator is the large-energy expansion of this same
    condition, so the two converge to each other as n grows; keeping the
    condition exact removes the expansion's O(z/nu) remainder only, not
    the quasiclassical error itself.
    """
    _check_nz(n, z)
    target = _PI * (n - 0.25)
    # the expanded form is an excellent starting point everywhere
    nu = target / w0(2.0 * target / (math.e * z))
    lo, hi = z * (1.0 + 1e-15), max(4.0 * nu, nu + 1.0)
    scale = max(target, 1.0)
    best_nu, best_f = nu, math.inf
    for _ in range(100):
        s = math.sqrt(max(1.0 - (z / nu) ** 2, 0.0))
        f = nu * atanh_minus(s) - target
        if abs(f) < best_f:
            best_nu, best_f = nu, abs(f)
        if abs(f) <= tol * scale:
            break
        if f > 0.0:
            hi = nu
        else:
            lo = nu
        if hi - lo <= 4.0 * math.ulp(nu):
            break
        df = math.atanh(s) if 0.0 < s < 1.0 else 1e-12
        nu_new = nu - f / df
        if not lo < nu_new < hi:
            nu_new = 0.5 * (lo + hi)
        nu = nu_new
    else:
        raise NonConvergence(f"nu_exact_wkb({n}, {z}) did not reach tol={tol}")
    return ZeroEstimate(n, z, Method.EXACT_WKB_V, best_nu)


def wkb_action(E, p):
    """Closed-form action integral of the exponential well between x = 0 and
    the turning point:

        sqrt(2m) * a * (sqrt(E)*artanh(sqrt(1 - U0/E)) - sqrt(E - U0))

    which equals sqrt(2m)*a*sqrt(E)*(artanh(s) - s) with s = sqrt(1 - U0/E);
    the latter form survives the E -> U0 cancellation.
    """
    if not isinstance(p, PotentialParams):
        raise DomainError("p must be a PotentialParams")
    if not (E >= p.U0):
        raise DomainError(f"classically allowed region empty: E={E} < U0={p.U0}")
    if E == p.U0:
        return 0.0  # coinciding turning points
    s = math.sqrt(1.0 - p.U0 / E)
    return math.sqrt(2.0 * p.m) * p.a * math.sqrt(E) * atanh_minus(s)


def wkb_energy(n, p):
    """Quasiclassical level E_n of the exponential well, n = 0, 1, 2, ...

    E_n = (hbar^2/2m) * [pi*(n + 3/4)/a]^2 / W((2/e)*pi*hbar*(n + 3/4)/sqrt(2*m*U0*a^2))^2

    n counts wavefunction nodes, so the ground state is n = 0; the zero
    index of nu_asymp_w is this n shifted by one.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"level index n must be an integer >= 0, got {n!r}")
    if not isinstance(p, PotentialParams):
        raise DomainError("p must be a PotentialParams")
    q = _PI * (n + 0.75)
    w = w0(2.0 * q / (math.e * math.sqrt(p.u)))
    return (p.hbar * p.hbar / (2.0 * p.m)) * (q / p.a) ** 2 / (w * w)
