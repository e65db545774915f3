import math
import warnings

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aqf.axion import (
    AxionParams,
    SeriesTruncationWarning,
    bessel_j,
    coherence_time,
    derive_axion_quantities,
    sideband_spectrum,
    sigma_x_expectation,
)

REF = AxionParams(m_a=1e-6, rho_DM=0.4, v_wind=1e-3, v0_halo=220e3, cos_theta=1.0, g_ae=1e-11)


def test_coherence_scales():
    d = derive_axion_quantities(REF)
    # mpmath evaluation of 1/(omega_a (v0/c)^2) and hbar c / (m_a v0/c)
    assert d.tau_a == pytest.approx(1.222254968947045e-3, rel=1e-12)
    assert d.ell_a == pytest.approx(268.8960931083356, rel=1e-12)
    assert d.tau_a == pytest.approx(1.22e-3, rel=0.02)


def test_effective_field_anchor():
    d = derive_axion_quantities(REF)
    assert d.B_eff_amp == pytest.approx(4.283191864262594e-22, rel=1e-12)
    assert d.B_eff_amp == pytest.approx(4e-22, rel=0.1)


def test_zero_coupling():
    d = derive_axion_quantities(AxionParams(m_a=1e-6, g_ae=0.0))
    assert d.B_eff_amp == 0.0 and d.beta_mod == 0.0


def test_orientation_multiplies_field_only():
    half = derive_axion_quantities(AxionParams(m_a=1e-6, g_ae=1e-11, cos_theta=-0.5))
    full = derive_axion_quantities(REF)
    assert half.B_eff_amp == pytest.approx(0.5 * full.B_eff_amp, rel=1e-15)


@pytest.mark.parametrize(
    "kw", [dict(m_a=0), dict(m_a=1e-6, rho_DM=-1), dict(m_a=1e-6, v_wind=1.0), dict(m_a=1e-6, cos_theta=1.5)]
)
def test_params_invariants(kw):
    with pytest.raises(ValueError):
        AxionParams(**kw)


@given(st.floats(min_value=1e-9, max_value=1e-2))
def test_tau_times_mass_constant(m):
    ref = coherence_time(1e-6) * 1e-6
    assert math.isclose(coherence_time(m) * m, ref, rel_tol=1e-12)


@given(st.floats(min_value=0, max_value=1e-8), st.floats(min_value=1e-5, max_value=0.1))
def test_linear_in_coupling_and_wind(g, v):
    base = derive_axion_quantities(AxionParams(m_a=1e-6, g_ae=1e-11, v_wind=1e-3))
    d = derive_axion_quantities(AxionParams(m_a=1e-6, g_ae=g, v_wind=v))
    scale = (g / 1e-11) * (v / 1e-3)
    assert math.isclose(d.B_eff_amp, base.B_eff_amp * scale, rel_tol=1e-12, abs_tol=1e-300)
    assert math.isclose(d.beta_mod, base.beta_mod * scale, rel_tol=1e-12, abs_tol=1e-300)


def _series_oracle(n, x):
    mpmath.mp.dps = 40
    x = mpmath.mpf(x)
    s = mpmath.nsum(lambda k: (-1) ** k * (x / 2) ** (n + 2 * k) / (mpmath.factorial(k) * mpmath.factorial(n + k)), [0, mpmath.inf])
    return float(s)


def test_bessel_examples():
    assert bessel_j(0, 0.1) == pytest.approx(0.99750156206604, abs=1e-14)
    assert bessel_j(1, 0.1) == pytest.approx(0.04993752603624, abs=1e-14)
    assert bessel_j(0, 0.0) == 1.0 and bessel_j(3, 0.0) == 0.0
    assert bessel_j(-3, 1.3) == -bessel_j(3, 1.3)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=40), st.floats(min_value=0, max_value=5))
def test_bessel_matches_series_oracle(n, x):
    assert bessel_j(n, x) == pytest.approx(_series_oracle(n, x), abs=1e-14, rel=1e-13)


def test_bessel_range_guard():
    with pytest.raises(ValueError):
        bessel_j(0, 6.0)


def test_sideband_carrier_only():
    spec = dict(sideband_spectrum(0.0, 5))
    assert spec[0] == 1.0
    assert all(v == 0.0 for n, v in spec.items() if n != 0)


@pytest.mark.parametrize("beta", [0.1, 0.5, 2.0, 5.0])
def test_sideband_normalization(beta):
    total = math.fsum(j * j for _, j in sideband_spectrum(beta, int(beta + 30)))
    assert 1 - 1e-10 <= total <= 1 + 1e-14


def test_sideband_symmetry():
    spec = dict(sideband_spectrum(1.7, 6))
    for n in range(1, 7):
        assert spec[-n] == (-1) ** n * spec[n]


def test_sigma_x_trivial():
    assert sigma_x_expectation(0.0, 3.0, 5.0, 0.7) == 1.0
    t = np.linspace(0, 1, 11)
    np.testing.assert_allclose(sigma_x_expectation(t, 7.0, 2.0, 0.0), np.cos(7.0 * t))


def test_sigma_x_modes_agree():
    args = (2 * math.pi * 1e6, 2 * math.pi * 1e3, 0.5)
    d = sigma_x_expectation(1e-4, *args)
    s = sigma_x_expectation(1e-4, *args, mode="series", n_max=20)
    assert abs(d - s) < 1e-9


def test_sigma_x_truncation_warning():
    with pytest.warns(SeriesTruncationWarning):
        sigma_x_expectation(1e-4, 10.0, 1.0, 2.0, mode="series", n_max=5)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        sigma_x_expectation(1e-4, 10.0, 1.0, 2.0, mode="series", n_max=12)
