import math

import mpmath
import numpy as np
import pytest

from nuzeros.errors import DomainError
from nuzeros.estimators import (
    Method,
    PotentialParams,
    atanh_minus,
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
from nuzeros.lambertw import w0
from nuzeros.slprufer import nu_zero

PI = math.pi


def test_nu_asymp_w_first_zero_value():
    est = nu_asymp_w(1, 1.0)
    assert est.method is Method.LAMBERT_W
    arg = 2.0 * PI * 0.75 / math.e
    w = w0(arg)
    assert abs(w * math.exp(w) - arg) < 1e-13 * arg
    assert est.value == PI * 0.75 / w
    assert abs(est.value - 2.9893) < 1e-4


def test_nu_asymp_series_structure():
    # where the W argument is exactly e^e the one-term value is pi*(n-1/4)/e
    n, z = 3, 2.0 * PI * 2.75 / (math.e * math.exp(math.e))
    assert abs(nu_asymp_series(3, z, 1).value - PI * 2.75 / math.e) < 1e-12
    for terms, tag in ((1, Method.SERIES_1), (2, Method.SERIES_2), (3, Method.SERIES_3)):
        assert nu_asymp_series(1000, 1.0, terms).method is tag


def test_literature_formulas_direct_arithmetic():
    q = PI * 1.25
    assert nu_mk(1, 1.0).value == q / math.log(q / math.e)
    assert abs(nu_mk(1, 1.0).value - 10.675) < 1e-3  # wildly above nu_1 ~ 2.96
    assert nu_cochran(1000, 1.0).value == PI * 1000 / math.log(3000 * PI / math.e)
    assert abs(nu_cochran(1000, 1.0).value - PI * 1000 / 8.1506) < 0.1
    for n in (2, 7, 55):
        assert nu_bk(n).value == PI * n / math.log(n)


def test_literature_domain_errors():
    with pytest.raises(DomainError):
        nu_mk(1, 2.0)  # pi*(5/4) < 2e
    with pytest.raises(DomainError):
        nu_cochran(1, 4.0)  # 3*pi < 4e
    with pytest.raises(DomainError):
        nu_bk(1)
    with pytest.raises(DomainError):
        nu_asymp_series(1, 1.0, 2)  # W argument below e


def test_estimates_strictly_increasing_in_n():
    # q/ln(q/c) grows only once the log exceeds one, so the literature
    # formulas get per-method thresholds: MK needs pi*(n+1/4) > e^2*z,
    # Cochran 3*pi*n > e^2*z, BK ln(n) > 1
    e2 = math.e**2
    for z in (1.0, 2.0):
        makers = [
            (2, lambda n: nu_asymp_w(n, z).value),
            (2, lambda n: nu_exact_wkb(n, z).value),
            (2, lambda n: nu_asymp_series(n, z, 3).value),
            (max(2, math.ceil(e2 * z / PI - 0.25)), lambda n: nu_mk(n, z).value),
            (max(2, math.ceil(e2 * z / (3 * PI))), lambda n: nu_cochran(n, z).value),
            (3, lambda n: nu_bk(n, z).value),
        ]
        for start, maker in makers:
            got = []
            for n in range(start, start + 40):
                try:
                    got.append(maker(n))
                except DomainError:
                    pass
            assert all(b > a for a, b in zip(got, got[1:]))


def test_v_solve_at_zero_and_parametric_round_trip():
    assert v_solve(0.0) == 1.0
    for s in np.linspace(0.05, 0.999, 40):
        x = (math.atanh(s) - s) / (1.0 - s * s)
        v = v_solve(float(x))
        assert abs(v * (1.0 - s * s) - 1.0) < 1e-10


def test_v_solve_explicit_point():
    # s = 0.8: x = (artanh 0.8 - 0.8)/0.36, V = 1/0.36
    x = (math.atanh(0.8) - 0.8) / 0.36
    assert abs(v_solve(x) - 1.0 / 0.36) < 1e-10


def test_v_solve_monotone():
    xs = np.logspace(-3, 5, 60)
    vs = [v_solve(float(x)) for x in xs]
    assert all(b > a for a, b in zip(vs, vs[1:]))


def test_exact_wkb_tracks_lambert_form():
    # same quantization condition, expanded vs not: ratio -> 1
    r4 = nu_exact_wkb(10_000, 1.0).value / nu_asymp_w(10_000, 1.0).value
    assert abs(r4 - 1.0) < 1e-4
    r2 = nu_exact_wkb(100, 1.0).value / nu_asymp_w(100, 1.0).value
    assert abs(r2 - 1.0) > abs(r4 - 1.0)


def test_atanh_minus_small_argument_accuracy():
    # reference needs extra digits: atanh(s) - s cancels ~3 log10(1/s) of them
    with mpmath.workdps(40):
        for s in (1e-4, 1e-3, 1e-2, 0.1, 0.2, 0.3, 0.7):
            ref = float(mpmath.atanh(mpmath.mpf(s)) - mpmath.mpf(s))
            assert abs(atanh_minus(s) / ref - 1.0) < 1e-13


def test_wkb_action_closed_form_point():
    # E/U0 = 4 with sqrt(2m)*a*sqrt(U0) = 1
    p = PotentialParams(U0=1.0, a=1.0, m=0.5)
    val = wkb_action(4.0, p)
    assert abs(val - (2.0 * math.atanh(math.sqrt(0.75)) - math.sqrt(3.0))) < 1e-14


def test_wkb_action_turning_point_and_domain():
    p = PotentialParams(U0=2.0, a=1.0, m=1.0)
    assert wkb_action(2.0, p) == 0.0
    with pytest.raises(DomainError):
        wkb_action(1.999, p)


def test_wkb_action_matches_quadrature():
    # independent oracle: tanh-sinh quadrature of the action integral
    p = PotentialParams(U0=0.7, a=1.3, m=2.1, hbar=1.0)
    with mpmath.workdps(30):
        for r in np.logspace(math.log10(1 + 1e-6), 6, 13):
            e = mpmath.mpf(float(r)) * mpmath.mpf(p.U0)
            x2 = mpmath.mpf(p.a) / 2 * mpmath.log(e / p.U0)

            def integrand(x):
                arg = 2.0 * p.m * (e - p.U0 * mpmath.e ** (2.0 * x / p.a))
                return mpmath.sqrt(arg) if arg > 0 else mpmath.mpf(0)

            ref = float(mpmath.quad(integrand, [0, x2]))
            got = wkb_action(float(e), p)
            assert abs(got / ref - 1.0) < 1e-10


def test_wkb_action_increasing_in_energy():
    p = PotentialParams(U0=1.0, a=1.0, m=1.0)
    es = np.logspace(0.001, 5, 50)
    vals = [wkb_action(float(e) + 1.0, p) for e in es]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_wkb_energy_index_shift_identity():
    for u in (1.0, 4.0):
        p = PotentialParams(U0=u / 2.0, a=1.0, m=1.0)  # u = U0*2*m*a^2
        assert abs(p.u - u) < 1e-14
        scale = 2.0 * p.m * p.a**2 / p.hbar**2
        for n in range(0, 101, 10):
            lhs = wkb_energy(n, p) * scale
            rhs = nu_asymp_w(n + 1, math.sqrt(u)).value ** 2
            assert abs(lhs / rhs - 1.0) < 1e-14


def test_wkb_energy_leading_order_growth():
    p = PotentialParams(U0=0.5, a=1.0, m=1.0)
    c = lambda n: wkb_energy(n, p) * math.log(n) ** 2 / n**2
    drift_low = abs(c(1000) / c(100) - 1.0)
    drift_high = abs(c(10_000) / c(1000) - 1.0)
    assert drift_high < drift_low
    assert 0.8 < c(10_000) / c(1000) < 1.2


def test_wkb_energy_against_exact_third_level():
    p = PotentialParams(U0=0.5, a=1.0, m=1.0)  # u = 1
    scale = 2.0 * p.m * p.a**2 / p.hbar**2
    eps_wkb = wkb_energy(2, p) * scale
    eps_exact = nu_zero(3, 1.0).epsilon
    assert abs(eps_wkb / eps_exact - 1.0) < 0.04


def test_potential_params_validation():
    with pytest.raises(DomainError):
        PotentialParams(U0=-1.0, a=1.0, m=1.0)
    with pytest.raises(DomainError):
        PotentialParams(U0=1.0, a=0.0, m=1.0)
    with pytest.raises(DomainError):
        wkb_energy(-1, PotentialParams(U0=1.0, a=1.0, m=1.0))
    with pytest.raises(DomainError):
        nu_asymp_w(1, 0.0)
    with pytest.raises(DomainError):
        nu_asymp_w(0, 1.0)
