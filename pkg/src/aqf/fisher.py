"""Segment and wall-clock Fisher information of encoded GHZ blocks vs. the SQL.

Fisher informations are per unit coupling squared: with the susceptibility
chi in rad per GeV^-1 the returned F is in GeV^2 (so 1/sqrt(F) is a coupling
in GeV^-1). All functions broadcast over numpy arrays in ``k_L``.
"""
import math
from dataclasses import dataclass

import numpy as np

from .axion import coherence_time, wind_gradient_eV2
from .units import CODATA2018, GEV_INV_TO_EV_INV

__all__ = [
    "SegmentPlan",
    "BlockDesign",
    "WallClockGain",
    "segment_duration",
    "segment_plan",
    "susceptibility",
    "ghz_fisher",
    "sql_fisher",
    "gain_segment",
    "markovian_gain",
    "optimal_k_markovian",
    "eta_max_markovian",
    "wallclock_gain",
    "block_design",
]


@dataclass(frozen=True)
class SegmentPlan:
    T_seg: float
    T_lim: float
    tau_a: float
    t_dead_ghz: float = 0.0
    t_dead_sql: float = 0.0
    T_tot: float = 1.0

    def __post_init__(self):
        if self.T_seg != min(self.T_lim, self.tau_a):
            raise ValueError("T_seg must equal min(T_lim, tau_a)")
        for name in ("T_seg", "T_lim", "tau_a", "t_dead_ghz", "t_dead_sql", "T_tot"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.T_tot < self.T_seg:
            raise ValueError("T_tot must be >= T_seg")


@dataclass(frozen=True)
class BlockDesign:
    n_rep: int
    k_L: int
    N_phys: int
    chi: float  # rad per GeV^-1
    gamma_eff: float
    gamma_cor: float
    F_ghz: float
    F_sql: float
    eta_seg: float


@dataclass(frozen=True)
class WallClockGain:
    eta_wall_sq: float
    R_duty: float
    N_seg_ghz: float
    N_seg_sql: float
    T_rep_ghz: float
    T_rep_sql: float


def segment_duration(m_a, T_lim, v0_halo=220e3, const=CODATA2018):
    """Interrogation time per segment, min(T_lim, tau_a(m_a))."""
    if not T_lim > 0:
        raise ValueError(f"T_lim must be > 0 (got {T_lim})")
    return min(T_lim, coherence_time(m_a, v0_halo, const))


def segment_plan(m_a, T_lim, T_tot, v0_halo=220e3, t_dead_ghz=0.0, t_dead_sql=0.0):
    tau_a = coherence_time(m_a, v0_halo)
    return SegmentPlan(
        T_seg=min(T_lim, tau_a), T_lim=T_lim, tau_a=tau_a,
        t_dead_ghz=t_dead_ghz, t_dead_sql=t_dead_sql, T_tot=T_tot,
    )


def susceptibility(axion, T_seg, const=CODATA2018):
    """Phase accumulated per unit g_ae over one segment [rad per GeV^-1].

    chi = 2 v sqrt(2 rho) T_seg |sinc(omega_a T_seg / 2)| / hbar, i.e. the peak
    linear-response phase of a spin driven at omega_a for T_seg.
    """
    omega_a = axion.m_a / const.hbar_eV_s
    x = 0.5 * omega_a * T_seg
    sinc = 1.0 if x == 0 else math.sin(x) / x
    rate_per_g = 2.0 * wind_gradient_eV2(axion, const) * GEV_INV_TO_EV_INV / const.hbar_eV_s
    return rate_per_g * T_seg * abs(sinc)


def ghz_fisher(n_rep, k_L, chi, gamma_eff, gamma_cor, T_seg):
    """F_GHZ = (n_rep k_L chi)^2 exp(-2 (gamma_eff + gamma_cor) k_L T_seg)."""
    k = np.asarray(k_L, dtype=float)
    out = (n_rep * k * chi) ** 2 * np.exp(-2.0 * (gamma_eff + gamma_cor) * k * T_seg)
    return float(out) if out.ndim == 0 else out


def sql_fisher(n_rep, k_L, chi, C_loc_T, gamma_cor, T_seg):
    """F_SQL = n_rep k_L chi^2 [C_loc(T_seg) exp(-gamma_cor T_seg)]^2."""
    k = np.asarray(k_L, dtype=float)
    out = n_rep * k * chi**2 * (C_loc_T * math.exp(-gamma_cor * T_seg)) ** 2
    return float(out) if out.ndim == 0 else out


def gain_segment(n_rep, k_L, gamma_eff, gamma_cor, C_loc_T, T_seg):
    """Fisher gain eta^2 = F_GHZ / F_SQL; chi cancels identically."""
    if not C_loc_T > 0:
        raise ValueError("C_loc(T_seg) = 0: degenerate SQL benchmark")
    k = np.asarray(k_L, dtype=float)
    log_ratio = (
        -2.0 * (gamma_eff + gamma_cor) * k * T_seg
        + 2.0 * gamma_cor * T_seg
        - 2.0 * math.log(C_loc_T)
    )
    out = n_rep * k * np.exp(log_ratio)
    return float(out) if out.ndim == 0 else out


def markovian_gain(n_rep, k_L, gamma_eff, gamma_cor, gamma_loc, T_seg):
    """eta^2 with C_loc = exp(-gamma_loc T)."""
    k = np.asarray(k_L, dtype=float)
    expo = -2.0 * ((gamma_eff + gamma_cor) * k - (gamma_loc + gamma_cor)) * T_seg
    out = n_rep * k * np.exp(expo)
    return float(out) if out.ndim == 0 else out


def optimal_k_markovian(gamma_eff, gamma_cor, T_seg):
    """Continuous optimum k* = 1 / (2 (gamma_eff + gamma_cor) T_seg); inf if noiseless."""
    if not T_seg > 0:
        raise ValueError("T_seg must be > 0")
    total = gamma_eff + gamma_cor
    if total <= 0:
        return math.inf
    return 1.0 / (2.0 * total * T_seg)


def eta_max_markovian(n_rep, gamma_loc, gamma_cor, gamma_eff, T_seg, clamp=False):
    """Markovian peak gain eta_max^2 = n_rep k* exp(2 (gamma_loc + gamma_cor) T) / e.

    With ``clamp=True`` k* is first clamped to >= 1 and the Markovian gain is
    evaluated there (identical to the closed form whenever k* >= 1).
    """
    k_star = optimal_k_markovian(gamma_eff, gamma_cor, T_seg)
    if math.isinf(k_star):
        return math.inf
    if clamp and k_star < 1:
        return markovian_gain(n_rep, 1.0, gamma_eff, gamma_cor, gamma_loc, T_seg)
    return n_rep * k_star * math.exp(2.0 * (gamma_loc + gamma_cor) * T_seg - 1.0)


def wallclock_gain(eta_seg_sq, T_seg, t_dead_ghz, t_dead_sql, T_tot):
    """Convert a segment gain to a wall-clock gain for a fixed budget T_tot."""
    if min(T_seg, t_dead_ghz, t_dead_sql) < 0:
        raise ValueError("durations must be >= 0")
    if not T_tot > 0:
        raise ValueError("T_tot must be > 0")
    t_rep_ghz = T_seg + t_dead_ghz
    t_rep_sql = T_seg + t_dead_sql
    r_duty = t_rep_sql / t_rep_ghz
    return WallClockGain(
        eta_wall_sq=r_duty * eta_seg_sq,
        R_duty=r_duty,
        N_seg_ghz=T_tot / t_rep_ghz,
        N_seg_sql=T_tot / t_rep_sql,
        T_rep_ghz=t_rep_ghz,
        T_rep_sql=t_rep_sql,
    )


def block_design(n_rep, k_L, chi, gamma_eff, gamma_cor, C_loc_T, T_seg):
    f_ghz = ghz_fisher(n_rep, k_L, chi, gamma_eff, gamma_cor, T_seg)
    f_sql = sql_fisher(n_rep, k_L, chi, C_loc_T, gamma_cor, T_seg)
    eta_sq = gain_segment(n_rep, k_L, gamma_eff, gamma_cor, C_loc_T, T_seg)
    return BlockDesign(
        n_rep=n_rep, k_L=k_L, N_phys=n_rep * k_L, chi=chi,
        gamma_eff=gamma_eff, gamma_cor=gamma_cor,
        F_ghz=f_ghz, F_sql=f_sql, eta_seg=math.sqrt(eta_sq),
    )
