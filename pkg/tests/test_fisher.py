import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aqf.axion import AxionParams, coherence_time
from aqf.fisher import (
    SegmentPlan,
    block_design,
    eta_max_markovian,
    gain_segment,
    ghz_fisher,
    markovian_gain,
    optimal_k_markovian,
    segment_duration,
    segment_plan,
    sql_fisher,
    susceptibility,
    wallclock_gain,
)

C_LOC = math.exp(-0.3)  # device envelope at 100 us
G_EFF = 260.0676234438100


def test_segment_duration():
    assert segment_duration(1e-6, 100e-6) == 100e-6
    m_cross = 1.222254968947045e-5  # tau_a(m) = 100 us
    assert coherence_time(m_cross) == pytest.approx(100e-6, rel=1e-12)
    assert segment_duration(m_cross, 100e-6) == pytest.approx(100e-6, rel=1e-12)
    assert segment_duration(1e3, 100e-6) == pytest.approx(1.222254968947045e-12, rel=1e-12)


def test_segment_plan_invariants():
    plan = segment_plan(1e-4, 100e-6, 1.0)
    assert plan.T_seg == min(plan.T_lim, plan.tau_a)
    with pytest.raises(ValueError):
        SegmentPlan(T_seg=1.0, T_lim=2.0, tau_a=3.0)


def test_ghz_fisher_examples():
    assert ghz_fisher(13, 14, 2.0, 0, 0, 1e-4) == pytest.approx((13 * 14 * 2.0) ** 2)
    assert ghz_fisher(1, 1, 3.0, 50, 20, 1e-3) == pytest.approx(9 * math.exp(-2 * 70 * 1e-3))
    # mpmath: 182^2 exp(-2 (260.1 + 100) 14e-4)
    assert ghz_fisher(13, 14, 1.0, 260.1, 100, 1e-4) == pytest.approx(12085.15808511240, rel=1e-12)


def test_sql_fisher_examples():
    assert sql_fisher(13, 14, 2.0, 1.0, 0.0, 1e-4) == pytest.approx(182 * 4.0)
    assert sql_fisher(13, 14, 1.0, C_LOC, 100, 1e-4) == pytest.approx(97.90588764223076, rel=1e-12)
    assert sql_fisher(13, 0, 1.0, C_LOC, 100, 1e-4) == 0.0


def test_gain_examples():
    assert gain_segment(1, 1, 500, 100, math.exp(-500 * 1e-4), 1e-4) == pytest.approx(1.0, rel=1e-14)
    eta_sq = gain_segment(13, 14, G_EFF, 100, C_LOC, 1e-4)
    assert eta_sq == pytest.approx(123.44766998260967, rel=1e-12)
    assert math.sqrt(eta_sq) == pytest.approx(11.11, abs=0.01)
    with pytest.raises(ValueError):
        gain_segment(1, 1, 0, 0, 0.0, 1e-4)


def test_zero_code_noise_envelope():
    # gamma_eff = 0: eta^2 = n k exp(2 (g_loc + g_cor - g_cor k) T)
    n, gl, gc, T = 7, 500.0, 100.0, 1e-4
    for k in (1, 3, 10):
        expected = n * k * math.exp(2 * (gl + gc - gc * k) * T)
        assert gain_segment(n, k, 0.0, gc, math.exp(-gl * T), T) == pytest.approx(expected, rel=1e-13)


rates = st.floats(min_value=0, max_value=5e3)


@given(st.integers(1, 15), st.integers(1, 64), rates, rates, rates, st.floats(1e-6, 1e-3))
def test_markovian_form_matches_ratio(n, k, ge, gc, gl, T):
    ratio = gain_segment(n, k, ge, gc, math.exp(-gl * T), T)
    assert markovian_gain(n, k, ge, gc, gl, T) == pytest.approx(ratio, rel=1e-10)


@given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
def test_chi_cancels(chi, c):
    d1 = block_design(13, 14, chi, G_EFF, 100, C_LOC, 1e-4)
    d2 = block_design(13, 14, c * chi, G_EFF, 100, C_LOC, 1e-4)
    assert d1.F_ghz / d1.F_sql == pytest.approx(d2.F_ghz / d2.F_sql, rel=1e-12)
    assert d1.eta_seg**2 == pytest.approx(d1.F_ghz / d1.F_sql, rel=1e-12)
    assert d1.N_phys == 182


def test_optimal_k():
    assert optimal_k_markovian(G_EFF, 100, 1e-4) == pytest.approx(13.88628044970633, rel=1e-12)
    assert optimal_k_markovian(4000, 1000, 1e-4) == pytest.approx(1.0)
    assert optimal_k_markovian(300, 60, 2e-4) == pytest.approx(0.5 * optimal_k_markovian(300, 60, 1e-4))
    assert optimal_k_markovian(0, 0, 1e-4) == math.inf


def test_eta_max_markovian():
    eta_sq = eta_max_markovian(13, 500, 100, G_EFF, 1e-4)
    # 13 k* e^{0.12} / e
    assert eta_sq == pytest.approx(13 * 13.88628044970633 * math.exp(0.12 - 1), rel=1e-12)
    assert math.sqrt(eta_sq) == pytest.approx(8.65, abs=0.01)
    # k* = 1 exactly when 2 gamma T = 1: gain collapses to 1
    assert eta_max_markovian(1, 5000, 0, 5000, 1e-4) == pytest.approx(1.0, rel=1e-14)
    # large rates clamp k* to 1 and use the Markovian gain there
    clamped = eta_max_markovian(13, 500, 100, 1e5, 1e-4, clamp=True)
    assert clamped == pytest.approx(markovian_gain(13, 1, 1e5, 100, 500, 1e-4))


@given(st.integers(1, 15), st.floats(10, 3000), st.floats(0, 200))
def test_integer_argmax_near_continuous_optimum(n, ge, gc):
    T = 1e-4
    ks = np.arange(1, 2000)
    g = markovian_gain(n, ks, ge, gc, 500.0, T)
    k_best = ks[np.argmax(g)]
    k_star = optimal_k_markovian(ge, gc, T)
    assert k_best in {max(1, math.floor(k_star)), max(1, math.ceil(k_star))}
    # unimodal; ignore the subnormal tail where rounding noise dominates
    g = g[g > 1e-250]
    peak = int(np.argmax(g))
    assert np.all(np.diff(g[: peak + 1]) >= 0) and np.all(np.diff(g[peak:]) <= 0)


def test_wallclock():
    w = wallclock_gain(123.4, 1e-4, 5e-5, 5e-5, 1.0)
    assert w.R_duty == 1.0 and w.eta_wall_sq == 123.4
    w = wallclock_gain(123.4, 1e-4, 1e-4, 0.0, 1.0)
    assert w.R_duty == pytest.approx(0.5) and w.eta_wall_sq == pytest.approx(61.7)
    w = wallclock_gain(1.0, 1e-4, 0.0, 0.0, 1.0)
    assert w.N_seg_ghz == pytest.approx(1e4) and w.N_seg_sql == pytest.approx(1e4)


@given(st.floats(0, 1e-3), st.floats(0, 1e-3), st.floats(1e-6, 1e-3))
def test_duty_at_most_one(a, b, T):
    ghz, sql = max(a, b), min(a, b)
    assert wallclock_gain(1.0, T, ghz, sql, 1.0).R_duty <= 1.0


@given(st.floats(0, 1e3), st.floats(0, 1e3), st.floats(0, 1e3))
def test_fisher_monotone_in_rates(a, b, d):
    T = 1e-4
    assert ghz_fisher(5, 4, 1.0, a + d, b, T) <= ghz_fisher(5, 4, 1.0, a, b, T)
    assert ghz_fisher(5, 4, 1.0, a, b + d, T) <= ghz_fisher(5, 4, 1.0, a, b, T)
    assert sql_fisher(5, 4, 1.0, 0.7, b + d, T) <= sql_fisher(5, 4, 1.0, 0.7, b, T)
    assert sql_fisher(5, 4, 1.0, 0.7 * math.exp(-d * T), b, T) <= sql_fisher(5, 4, 1.0, 0.7, b, T)


def test_susceptibility_limits():
    ax = AxionParams(m_a=1e-6, g_ae=0.0)
    T = 1e-4
    chi = susceptibility(ax, T)
    assert chi > 0
    # dc limit: tiny mass makes sinc -> 1
    slow = susceptibility(AxionParams(m_a=1e-20), T)
    assert slow == pytest.approx(susceptibility(AxionParams(m_a=1e-21), T), rel=1e-6)
    assert chi < slow
