import math

import numpy as np
import pytest
import scipy.special as sp

from conftest import REF_KINU, REF_ZEROS
from nuzeros.besselk import (
    QuadratureConfig,
    k_inu,
    k_inu_dnu,
    noise_floor,
    nu_cap,
    refine_zero,
)
from nuzeros.errors import (
    DomainError,
    NoSignChange,
    PrecisionLoss,
    QuadratureFailure,
)
from nuzeros.estimators import nu_asymp_w


def test_nu0_reduces_to_k0():
    for x in (0.5, 1.0, 2.0, 5.0):
        assert abs(k_inu(0.0, x) / sp.k0(x) - 1.0) < 1e-12


def test_even_in_nu():
    assert k_inu(-3.0, 1.0) == k_inu(3.0, 1.0)


def test_values_match_mpmath_references():
    for (nu, x), ref in REF_KINU.items():
        got = k_inu(nu, x)
        assert abs(got - ref) <= max(1e-12 * abs(ref), 2.0 * noise_floor(x))


def test_values_are_finite_reals():
    for nu in (0.0, 0.7, 3.3, 11.0):
        for x in (0.3, 1.0, 4.0):
            v = k_inu(nu, x)
            assert isinstance(v, float) and math.isfinite(v)


def test_dnu_identically_zero_at_nu0():
    assert k_inu_dnu(0.0, 1.0) == 0.0


def test_dnu_against_finite_difference():
    # five-point central stencil of k_inu
    for nu in (1.0, 5.0, 10.0):
        for x in (1.0, 2.0):
            h = 1e-3
            f = [k_inu(nu + k * h, x) for k in (-2, -1, 1, 2)]
            fd = (f[0] - 8 * f[1] + 8 * f[2] - f[3]) / (12 * h)
            exact = k_inu_dnu(nu, x)
            scale = max(abs(exact), abs(fd), noise_floor(x) / h)
            assert abs(exact - fd) <= 1e-6 * scale
    # the tighter absolute check at the documented point
    h = 1e-5
    fd = (k_inu(1.0 + h, 1.0) - k_inu(1.0 - h, 1.0)) / (2 * h)
    assert abs(k_inu_dnu(1.0, 1.0) - fd) <= 1e-7


def test_dnu_sign_opposite_below_first_zero():
    nu1 = REF_ZEROS[(1, 1)]
    below = k_inu(nu1 - 0.2, 1.0)
    slope = k_inu_dnu(nu1, 1.0)
    assert below * slope < 0.0


def test_value_at_first_zero_is_small():
    nu1 = REF_ZEROS[(1, 1)]
    grid = np.linspace(nu1 - 0.5, nu1 + 0.5, 21)
    biggest = max(abs(k_inu(float(v), 1.0)) for v in grid)
    assert abs(k_inu(nu1, 1.0)) <= 1e-10 * biggest


def test_refine_zero_first_zero_z1():
    est = nu_asymp_w(1, 1.0).value
    root = refine_zero(est, 1.0, (2.7, 3.3))
    assert abs(root / REF_ZEROS[(1, 1)] - 1.0) < 1e-9
    # residual at the root: limited by the nu resolution of the final
    # Newton step plus the quadrature noise floor
    resolution = abs(k_inu_dnu(root, 1.0)) * 1e-13 * root
    assert abs(k_inu(root, 1.0)) <= resolution + 8.0 * noise_floor(1.0)
    # the estimate itself is inside one percent
    assert abs(root - est) / root < 0.01


def test_refine_zero_accuracy_profile_z2():
    est = nu_asymp_w(1, 2.0).value
    root = refine_zero(est, 2.0, (est - 0.9, est + 0.4))
    gap = abs(est / root - 1.0)
    assert 0.02 < gap < 0.04


def test_refine_zero_endpoint_starts_agree():
    a = refine_zero(2.71, 1.0, (2.7, 3.3))
    b = refine_zero(3.29, 1.0, (2.7, 3.3))
    assert abs(a - b) <= 1e-10 * a


def test_refine_zero_no_sign_change():
    with pytest.raises(NoSignChange):
        refine_zero(1.2, 1.0, (1.0, 1.5))


def test_precision_loss_beyond_cap():
    cap = nu_cap(1.0)
    assert 20.0 <= cap <= 25.0
    with pytest.raises(PrecisionLoss):
        k_inu(cap + 1.0, 1.0)
    with pytest.raises(PrecisionLoss):
        k_inu_dnu(cap + 1.0, 1.0)


def test_quadrature_failure_on_panel_cap():
    cfg = QuadratureConfig(max_panels=64)
    with pytest.raises(QuadratureFailure):
        k_inu(22.0, 0.005, cfg)


def test_domain_errors():
    with pytest.raises(DomainError):
        k_inu(1.0, 0.0)
    with pytest.raises(DomainError):
        k_inu(1.0, -2.0)
    with pytest.raises(DomainError):
        QuadratureConfig(rel_tol=1e-3)
    with pytest.raises(DomainError):
        QuadratureConfig(max_panels=32)
    with pytest.raises(DomainError):
        QuadratureConfig(t_max_margin=0.5)
