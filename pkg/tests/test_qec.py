import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aqf.noise import NoiseParams
from aqf.qec import (
    CodeConfig,
    binomial_tail,
    correctable_weight,
    effective_dephasing_rate,
    logical_error_prob,
    logical_noise,
)

P_Z_TABLE1 = 5.496976108861713e-4


def _enumerate_majority(n, p):
    """Independent oracle: walk every flip pattern and majority-decode it."""
    total = 0.0
    for pattern in itertools.product((0, 1), repeat=n):
        w = sum(pattern)
        if w > n // 2:
            total += p**w * (1 - p) ** (n - w)
    return total


@pytest.mark.parametrize("n,t", [(3, 1), (13, 6), (1, 0)])
def test_correctable_weight(n, t):
    assert correctable_weight(n) == t


@pytest.mark.parametrize("n", [0, 2, -3, 4])
def test_even_or_nonpositive_rejected(n):
    with pytest.raises(ValueError):
        correctable_weight(n)
    with pytest.raises(ValueError):
        CodeConfig(n_rep=n)


def test_logical_error_examples():
    assert logical_error_prob(CodeConfig(3, 2e-6, 0, 0), 0.1) == pytest.approx(0.028, abs=1e-15)
    assert _enumerate_majority(3, 0.1) == pytest.approx(0.028, abs=1e-15)
    assert logical_error_prob(CodeConfig(1, 2e-6, 0, 0), 0.137) == 0.137
    cfg = CodeConfig(13, 2e-6, 1e-5, 1e-5)
    # tail at p_Z = 5.497e-4 is 2.595e-20 (mpmath)
    assert binomial_tail(13, P_Z_TABLE1) == pytest.approx(2.594959690839977e-20, rel=1e-12)
    assert logical_error_prob(cfg, P_Z_TABLE1) == pytest.approx(2.6e-4, abs=1e-12)


def test_logical_error_domain():
    with pytest.raises(ValueError):
        logical_error_prob(CodeConfig(3), 0.5)


def test_clamped_to_one():
    assert logical_error_prob(CodeConfig(13, 2e-6, 0.05, 0.05), 0.0) == 1.0


def test_effective_rate_examples():
    assert effective_dephasing_rate(0.0, 2e-6) == 0.0
    # mpmath: -ln(1 - 5.2e-4) / 2e-6
    assert effective_dephasing_rate(2.6e-4, 2e-6) == pytest.approx(260.0676234438100, rel=1e-13)
    g = effective_dephasing_rate(1e-4, 2e-6)
    assert g == pytest.approx(100.0100013335334, rel=1e-13)
    assert g == pytest.approx(100.0, rel=2e-4)
    with pytest.raises(ValueError, match="fully depolarizing"):
        effective_dephasing_rate(0.5, 2e-6)


def test_logical_noise_chain():
    ln = logical_noise(NoiseParams(), CodeConfig(13, 2e-6, 1e-5, 1e-5))
    assert ln.p_Z == pytest.approx(P_Z_TABLE1, rel=1e-13)
    assert ln.p_L == pytest.approx(2.6e-4, abs=1e-12)
    assert ln.gamma_eff == pytest.approx(260.0676234438100, rel=1e-12)
    assert ln.correctable_weight == 6
    assert ln.p_L >= 13 * 2e-5


@pytest.mark.parametrize("n", range(1, 16, 2))
@pytest.mark.parametrize("p", [0.01, 0.05, 0.1, 0.3])
def test_tail_matches_enumeration(n, p):
    assert binomial_tail(n, p) == pytest.approx(_enumerate_majority(n, p), abs=1e-12)


@given(st.floats(min_value=1e-4, max_value=0.49))
def test_strictly_decreasing_in_distance(p):
    rates = [logical_error_prob(CodeConfig(n, 2e-6, 0, 0), p) for n in range(1, 16, 2)]
    assert all(b < a for a, b in zip(rates, rates[1:]))


def test_fault_floor_turns_upward():
    rates = [logical_error_prob(CodeConfig(n, 2e-6, 1e-4, 1e-4), P_Z_TABLE1) for n in range(1, 40, 2)]
    i = int(np.argmin(rates))
    assert 0 < i < len(rates) - 1
    assert all(b > a for a, b in zip(rates[i:], rates[i + 1:]))


def test_rate_monotone_convex():
    p = np.linspace(0, 0.49, 300)
    g = np.array([effective_dephasing_rate(x, 1.0) for x in p])
    assert np.all(np.diff(g) > 0)
    assert np.all(np.diff(g, 2) > -1e-12)
