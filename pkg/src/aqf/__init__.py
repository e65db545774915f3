"""Forecasts for repetition-code protected GHZ spin-qubit axion searches."""
from .axion import AxionDerived, AxionParams, derive_axion_quantities, sideband_spectrum, sigma_x_expectation
from .fisher import gain_segment, ghz_fisher, optimal_k_markovian, sql_fisher, wallclock_gain
from .noise import NoiseParams, local_envelope, physical_z_error_prob
from .qec import CodeConfig, effective_dephasing_rate, logical_error_prob, logical_noise
from .scan import DeviceScenario, Optimum, optimize_block

__version__ = "0.1.0"
