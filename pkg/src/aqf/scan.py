"""Integer block optimization and the parameter sweeps behind each figure."""
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .axion import AxionParams, derive_axion_quantities
from .fisher import (
    eta_max_markovian,
    gain_segment,
    ghz_fisher,
    optimal_k_markovian,
    segment_duration,
    sql_fisher,
    susceptibility,
    wallclock_gain,
)
from .noise import NoiseParams, correlated_rate, local_envelope, local_rate
from .qec import CodeConfig, logical_noise
from .tables import SweepTable

__all__ = [
    "DeviceScenario",
    "Optimum",
    "DEFAULT_N_REP_SET",
    "gamma_eff_for",
    "gain_curve",
    "optimize_block",
    "best_k",
    "regimes_grid",
    "tradeoff_vs_distance",
    "tiling_scaling",
    "sensitivity_scan",
]

DEFAULT_N_REP_SET = (1, 3, 5, 7, 9, 11, 13)
DEFAULT_K_MAX = 64


@dataclass(frozen=True)
class DeviceScenario:
    noise: NoiseParams = field(default_factory=NoiseParams)
    code: CodeConfig = field(default_factory=CodeConfig)
    T_lim: float = 100e-6  # s
    T_tot: float = 1.0  # s
    axion: AxionParams = field(default_factory=lambda: AxionParams(m_a=1e-6, g_ae=1e-11))
    snr_threshold: float = 1.0
    baseline_mode: str = "fisher"  # or "magnetometer"
    eta_B: float = 100e-9  # T/sqrt(Hz)
    t_dead_ghz: float = 0.0  # s
    t_dead_sql: float = 0.0  # s

    def __post_init__(self):
        errors = self.validation_errors()
        if errors:
            raise ValueError("; ".join(errors))

    def validation_errors(self):
        errors = []
        if not self.snr_threshold > 0:
            errors.append(f"snr_threshold must be > 0 (got {self.snr_threshold})")
        if self.baseline_mode not in ("fisher", "magnetometer"):
            errors.append(f"baseline_mode must be 'fisher' or 'magnetometer' (got {self.baseline_mode!r})")
        if not self.eta_B > 0:
            errors.append(f"eta_B must be > 0 (got {self.eta_B})")
        if not self.T_lim > 0:
            errors.append(f"T_lim must be > 0 (got {self.T_lim})")
        if not self.T_tot > 0:
            errors.append(f"T_tot must be > 0 (got {self.T_tot})")
        for name in ("t_dead_ghz", "t_dead_sql"):
            if not getattr(self, name) >= 0:
                errors.append(f"{name} must be >= 0 (got {getattr(self, name)})")
        return errors

    def with_fidelity(self, p_g, p_m):
        return replace(self, code=replace(self.code, p_g=p_g, p_m=p_m))

    def T_seg(self, m_a=None):
        m_a = self.axion.m_a if m_a is None else m_a
        return segment_duration(m_a, self.T_lim, self.axion.v0_halo)


@dataclass(frozen=True)
class Optimum:
    n_rep: int
    k_L: int
    eta_seg: float
    gamma_eff: float
    N_block: int
    boundary_hit: bool = False


def gamma_eff_for(scenario, n_rep, unencoded_reference=True):
    """Logical dephasing rate at distance n_rep.

    n_rep = 1 is the bare, unencoded GHZ reference (gamma_eff = gamma_loc)
    unless ``unencoded_reference`` is False, in which case it is scored as a
    distance-1 code including gate and measurement faults.
    """
    if n_rep == 1 and unencoded_reference:
        return local_rate(scenario.noise)
    return logical_noise(scenario.noise, scenario.code.with_distance(n_rep)).gamma_eff


def best_k(n_rep, gamma_eff, gamma_cor, C_loc_T, T_seg, k_max):
    """Integer argmax of the full-envelope gain over k in [1, k_max].

    Returns (k, eta_sq); ties resolve to the smaller k.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    ks = np.arange(1, k_max + 1)
    eta_sq = gain_segment(n_rep, ks, gamma_eff, gamma_cor, C_loc_T, T_seg)
    i = int(np.argmax(eta_sq))
    return int(ks[i]), float(eta_sq[i])


def _segment_noise(scenario, m_a=None):
    T = scenario.T_seg(m_a)
    return T, local_envelope(T, scenario.noise), correlated_rate(scenario.noise)


def gain_curve(scenario, n_rep_set=DEFAULT_N_REP_SET, k_max=DEFAULT_K_MAX):
    """eta(k_L) for every (n_rep, k_L) on the grid, at the scenario mass."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    T, c_loc, g_cor = _segment_noise(scenario)
    table = SweepTable("gain_vs_k")
    ks = np.arange(1, k_max + 1)
    for n in n_rep_set:
        g_eff = gamma_eff_for(scenario, n)
        eta = np.sqrt(gain_segment(n, ks, g_eff, g_cor, c_loc, T))
        for k, e in zip(ks, eta):
            table.add(n, k, n * k, g_eff, e)
    return table


def optimize_block(scenario, n_rep_set=DEFAULT_N_REP_SET, k_max=DEFAULT_K_MAX):
    """Best (n_rep, k_L) on the integer grid.

    Ties go to the smaller physical block n_rep * k_L, then the smaller n_rep.
    """
    if not n_rep_set or k_max < 1:
        raise ValueError("empty optimization grid")
    T, c_loc, g_cor = _segment_noise(scenario)
    best = None
    for n in n_rep_set:
        g_eff = gamma_eff_for(scenario, n)
        k, eta_sq = best_k(n, g_eff, g_cor, c_loc, T, k_max)
        key = (-eta_sq, n * k, n)
        if best is None or key < best[0]:
            best = (key, Optimum(n, k, math.sqrt(eta_sq), g_eff, n * k, k == k_max))
    return best[1]


def regimes_grid(
    gamma_loc_T=(1e-3, 1.0),
    gamma_eff_T=(1e-4, 1.0),
    gamma_cor_T=0.01,
    n_rep=13,
    sizes=(200, 200),
    benefit_threshold=0.05,
):
    """Markovian closed-form map of k* and eta_max over (gamma_loc T, gamma_eff T).

    Rates are expressed per segment so T_seg = 1 throughout. Rows are
    row-major with gamma_loc T as the outer loop.
    """
    loc = np.geomspace(gamma_loc_T[0], gamma_loc_T[1], sizes[0])
    eff = np.geomspace(gamma_eff_T[0], gamma_eff_T[1], sizes[1])
    table = SweepTable("regimes_map")
    for gl in loc:
        for ge in eff:
            k_star = max(optimal_k_markovian(ge, gamma_cor_T, 1.0), 1.0)
            eta_sq = eta_max_markovian(n_rep, gl, gamma_cor_T, ge, 1.0, clamp=True)
            benefit = (gamma_cor_T + ge) <= benefit_threshold
            table.add(gl, ge, k_star, math.sqrt(eta_sq), benefit)
    return table


def tradeoff_vs_distance(
    scenario, fidelities=((1e-4, 1e-4), (1e-5, 1e-5)), n_rep_set=(3, 5, 7, 9, 11, 13, 15),
    k_max=DEFAULT_K_MAX, saturation_tol=0.05,
):
    """gamma_eff T_seg and the k-optimized eta_max against code distance.

    ``table.meta["summary"]`` lists, per fidelity pair, the coherence-optimal
    distance (argmin gamma_eff) and the gain-saturation distance (smallest
    n_rep reaching (1 - saturation_tol) of the best eta_max).
    """
    table = SweepTable("distance_tradeoff")
    summary = []
    for p_g, p_m in fidelities:
        sc = scenario.with_fidelity(p_g, p_m)
        T, c_loc, g_cor = _segment_noise(sc)
        rates, etas = [], []
        for n in n_rep_set:
            g_eff = gamma_eff_for(sc, n, unencoded_reference=False)
            k, eta_sq = best_k(n, g_eff, g_cor, c_loc, T, k_max)
            rates.append(g_eff * T)
            etas.append(math.sqrt(eta_sq))
            table.add(p_g, p_m, n, g_eff * T, k, math.sqrt(eta_sq))
        eta_top = max(etas)
        summary.append({
            "p_g": p_g,
            "p_m": p_m,
            "n_rep_coherence_opt": n_rep_set[int(np.argmin(rates))],
            "n_rep_saturation": next(
                n for n, e in zip(n_rep_set, etas) if e >= (1 - saturation_tol) * eta_top
            ),
            "eta_max": eta_top,
        })
    table.meta["summary"] = summary
    return table


def _fisher_context(scenario, m_a=None):
    m_a = scenario.axion.m_a if m_a is None else m_a
    T, c_loc, g_cor = _segment_noise(scenario, m_a)
    chi = susceptibility(replace(scenario.axion, m_a=m_a), T)
    wall = wallclock_gain(1.0, T, scenario.t_dead_ghz, scenario.t_dead_sql, scenario.T_tot)
    return T, c_loc, g_cor, chi, wall


def tiling_scaling(scenario, block, N_values):
    """Minimum detectable coupling vs. qubit count for SQL, tiled blocks, and Heisenberg.

    F_tot(N) = floor(N / N_block) F_block + F_SQL(leftover qubits), each
    multiplied by its protocol's segment count; g = snr / sqrt(F_tot).
    """
    T, c_loc, g_cor, chi, wall = _fisher_context(scenario)
    f_block = wall.N_seg_ghz * ghz_fisher(block.n_rep, block.k_L, chi, block.gamma_eff, g_cor, T)
    f_qubit = wall.N_seg_sql * sql_fisher(1, 1, chi, c_loc, g_cor, T)
    f_heis = wall.N_seg_sql * chi**2
    snr = scenario.snr_threshold
    table = SweepTable("scaling_vs_n")
    for N in N_values:
        N = int(N)
        if N < 1:
            raise ValueError("N must be >= 1")
        blocks, rem = divmod(N, block.N_block)
        f_qec = rem * f_qubit + blocks * f_block
        table.add(
            N,
            snr / math.sqrt(N * f_qubit),
            snr / math.sqrt(f_qec),
            snr / math.sqrt(N * N * f_heis),
        )
    return table


def sensitivity_scan(scenario, block, masses, k_max=DEFAULT_K_MAX):
    """Baseline and QEC-enhanced g_ae reach across a mass grid.

    eta(m_a) re-optimizes k_L at the block's code distance for each mass and
    includes the duty-cycle factor; g_qec = g_base / eta row by row. The
    Fisher-mode baseline is N_block product-state spins over T_tot.
    """
    g_eff = gamma_eff_for(scenario, block.n_rep)
    table = SweepTable("sensitivity_vs_mass")
    snr = scenario.snr_threshold
    if scenario.baseline_mode == "magnetometer":
        b_per_g = derive_axion_quantities(replace(scenario.axion, g_ae=1.0)).B_eff_amp
    for m_a in masses:
        if not m_a > 0:
            raise ValueError("masses must be > 0")
        T, c_loc, g_cor, chi, wall = _fisher_context(scenario, m_a)
        k, eta_sq = best_k(block.n_rep, g_eff, g_cor, c_loc, T, k_max)
        eta = math.sqrt(wall.R_duty * eta_sq)
        if scenario.baseline_mode == "fisher":
            f_sql = wall.N_seg_sql * sql_fisher(1, block.N_block, chi, c_loc, g_cor, T)
            g_base = snr / math.sqrt(f_sql) if f_sql > 0 else math.inf
        else:
            g_base = snr * scenario.eta_B / (b_per_g * math.sqrt(scenario.T_tot))
        table.add(m_a, T, k, eta, g_base, g_base / eta, k == k_max)
    return table
