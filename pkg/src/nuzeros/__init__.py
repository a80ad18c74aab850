"""nuzeros: order-zeros of K_inu(z) and exponential-well eigenvalues.

The library computes the values nu_n at which the modified Bessel
function of imaginary order K_inu(z) vanishes, for fixed real z > 0,
three independent ways: a Lambert-W closed-form asymptotic (with its
truncated-log variants and prior literature formulas), a direct
extended-precision quadrature of K_inu good at small orders, and a
phase-function eigenvalue solver good at any order.
"""

from .besselk import QuadratureConfig, k_inu, k_inu_dnu, nu_cap, refine_zero
from .errors import (
    BracketFailure,
    DomainError,
    NonConvergence,
    NoSignChange,
    NuzerosError,
    OdeFailure,
    OverflowGuard,
    PrecisionLoss,
    QuadratureFailure,
)
from .estimators import (
    Method,
    PotentialParams,
    ZeroEstimate,
    nu_asymp_series,
    nu_asymp_w,
    nu_bk,
    nu_cochran,
    nu_exact_wkb,
    nu_mk,
    v_solve,
    wkb_action,
    wkb_energy,
)
from .lambertw import WSeriesOrder, solve_xlog, w0, w_series
from .slprufer import (
    EigenResult,
    PhaseSolverConfig,
    batch_zeros,
    nu_zero,
    phase_at_origin,
)

__version__ = "0.1.0"

__all__ = [
    "BracketFailure",
    "DomainError",
    "EigenResult",
    "Method",
    "NonConvergence",
    "NoSignChange",
    "NuzerosError",
    "OdeFailure",
    "OverflowGuard",
    "PotentialParams",
    "PrecisionLoss",
    "PhaseSolverConfig",
    "QuadratureConfig",
    "QuadratureFailure",
    "WSeriesOrder",
    "ZeroEstimate",
    "batch_zeros",
    "k_inu",
    "k_inu_dnu",
    "nu_asymp_series",
    "nu_asymp_w",
    "nu_bk",
    "nu_cap",
    "nu_cochran",
    "nu_exact_wkb",
    "nu_mk",
    "nu_zero",
    "phase_at_origin",
    "refine_zero",
    "solve_xlog",
    "v_solve",
    "w0",
    "w_series",
    "wkb_action",
    "wkb_energy",
]
