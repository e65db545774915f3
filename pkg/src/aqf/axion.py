"""Axion field quantities and the sideband response of a bare spin qubit."""
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .units import CODATA2018, GEV_INV_TO_EV_INV, energy_density_to_natural

__all__ = [
    "AxionParams",
    "AxionDerived",
    "SeriesTruncationWarning",
    "derive_axion_quantities",
    "coherence_time",
    "wind_gradient_eV2",
    "bessel_j",
    "sideband_spectrum",
    "sigma_x_expectation",
]

# Ascending series is accurate to ~1e-14 absolute up to here; the physical
# modulation index is many orders of magnitude smaller.
BESSEL_SERIES_MAX_ARG = 5.0


class SeriesTruncationWarning(UserWarning):
    """Jacobi-Anger sum truncated before the sidebands have died out."""


@dataclass(frozen=True)
class AxionParams:
    m_a: float  # eV
    rho_DM: float = 0.4  # GeV/cm^3
    v_wind: float = 1e-3  # fraction of c
    v0_halo: float = 220e3  # m/s
    cos_theta: float = 1.0
    g_ae: float = 0.0  # GeV^-1
    phi_perp: float = 0.0  # rad; carried for bookkeeping only

    def __post_init__(self):
        errors = self.validation_errors()
        if errors:
            raise ValueError("; ".join(errors))

    def validation_errors(self):
        errors = []
        if not self.m_a > 0:
            errors.append(f"m_a must be > 0 (got {self.m_a})")
        if not self.rho_DM >= 0:
            errors.append(f"rho_DM must be >= 0 (got {self.rho_DM})")
        if not 0 < self.v_wind < 1:
            errors.append(f"v_wind must lie in (0, 1) (got {self.v_wind})")
        if not self.v0_halo > 0:
            errors.append(f"v0_halo must be > 0 (got {self.v0_halo})")
        if not abs(self.cos_theta) <= 1:
            errors.append(f"cos_theta must satisfy |cos_theta| <= 1 (got {self.cos_theta})")
        if not math.isfinite(self.g_ae):
            errors.append(f"g_ae must be finite (got {self.g_ae})")
        return errors


@dataclass(frozen=True)
class AxionDerived:
    omega_a: float  # rad/s
    a0: float  # eV
    tau_a: float  # s
    ell_a: float  # m
    B_eff_amp: float  # T
    beta_mod: float


def wind_gradient_eV2(p, const=CODATA2018):
    """|grad a| = v sqrt(2 rho) in eV^2."""
    return p.v_wind * math.sqrt(2.0 * energy_density_to_natural(p.rho_DM, const))


def coherence_time(m_a, v0_halo=220e3, const=CODATA2018):
    """tau_a = 1 / (m_a (v0/c)^2), returned in seconds."""
    if not m_a > 0:
        raise ValueError(f"m_a must be > 0 (got {m_a})")
    omega_a = m_a / const.hbar_eV_s
    return 1.0 / (omega_a * (v0_halo / const.c_m_s) ** 2)


def derive_axion_quantities(p, const=CODATA2018):
    rho_nat = energy_density_to_natural(p.rho_DM, const)
    omega_a = p.m_a / const.hbar_eV_s
    u0 = p.v0_halo / const.c_m_s
    g_eV = abs(p.g_ae) * GEV_INV_TO_EV_INV
    grad = p.v_wind * math.sqrt(2.0 * rho_nat)
    # coupling energy 2 g |grad a| in eV, converted to field via g_e mu_B
    b_eff = abs(p.cos_theta) * 2.0 * g_eV * grad / (const.g_e * const.mu_B_eV_per_T)
    return AxionDerived(
        omega_a=omega_a,
        a0=math.sqrt(2.0 * rho_nat) / p.m_a,
        tau_a=1.0 / (omega_a * u0**2),
        ell_a=const.hbar_c_eV_m / (p.m_a * u0),
        B_eff_amp=b_eff,
        beta_mod=2.0 * g_eV * grad / p.m_a,
    )


def bessel_j(n, x):
    """Bessel function of the first kind J_n(x) for integer n, 0 <= x <= 5.

    Summed from the ascending power series
    J_n(x) = sum_k (-1)^k (x/2)^(n+2k) / (k! (n+k)!)
    until terms drop below 1e-16 of the running total.
    """
    n = int(n)
    if x < 0 or x > BESSEL_SERIES_MAX_ARG:
        raise ValueError(f"bessel_j supports 0 <= x <= {BESSEL_SERIES_MAX_ARG}, got {x}")
    if n < 0:
        return (-1) ** (-n) * bessel_j(-n, x)
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    half = 0.5 * x
    log_first = n * (math.log(x) - math.log(2.0)) - math.lgamma(n + 1)
    if log_first < -745.0:
        return 0.0
    term = math.exp(log_first)
    terms = [term]
    q = half * half
    k = 0
    while True:
        term *= -q / ((k + 1) * (n + k + 1))
        k += 1
        terms.append(term)
        # past the peak term the magnitudes fall monotonically
        if k > q and abs(term) < 1e-16 * abs(math.fsum(terms)):
            break
        if term == 0.0:
            break
    return math.fsum(terms)


def sideband_spectrum(beta_mod, n_max):
    """Sideband amplitudes [(n, J_n(beta)) for n = -n_max..n_max]."""
    if beta_mod < 0:
        raise ValueError("beta_mod must be >= 0")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    positive = [bessel_j(n, beta_mod) for n in range(n_max + 1)]
    out = []
    for n in range(-n_max, n_max + 1):
        j = positive[abs(n)]
        out.append((n, j if n >= 0 or n % 2 == 0 else -j))
    return out


def sigma_x_expectation(t, omega_0, omega_a, beta_mod, mode="direct", n_max=None):
    """<sigma_x(t)> for a qubit prepared along +x under FM by the axion field.

    ``mode="direct"`` evaluates cos(omega_0 t - beta sin(omega_a t)).
    ``mode="series"`` evaluates the truncated Jacobi-Anger sum
    sum_{|n|<=n_max} J_n(beta) cos((omega_0 - n omega_a) t) and warns with
    :class:`SeriesTruncationWarning` when n_max < ceil(beta + 10).
    Accepts scalar or array ``t``.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise ValueError("t must be >= 0")
    if mode == "direct":
        out = np.cos(omega_0 * t_arr - beta_mod * np.sin(omega_a * t_arr))
    elif mode == "series":
        if n_max is None:
            raise ValueError("series mode requires n_max")
        if n_max < math.ceil(beta_mod + 10):
            warnings.warn(
                f"n_max={n_max} < ceil(beta+10)={math.ceil(beta_mod + 10)}; "
                "Jacobi-Anger truncation not converged",
                SeriesTruncationWarning,
                stacklevel=2,
            )
        out = np.zeros_like(t_arr)
        for n, j in sideband_spectrum(beta_mod, n_max):
            if j != 0.0:
                out += j * np.cos((omega_0 - n * omega_a) * t_arr)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return float(out) if out.ndim == 0 else out
