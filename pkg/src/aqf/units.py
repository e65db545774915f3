"""Physical constants (CODATA 2018) and natural-unit conversions.

Natural units here mean hbar = c = 1 with energies in eV. Everything that
leaves this module is in SI-ish laboratory units (s, m, T) and the unit is
spelled out in the function name.
"""
from dataclasses import dataclass

__all__ = [
    "PhysicalConstants",
    "CODATA2018",
    "energy_to_angular_frequency",
    "angular_frequency_to_energy",
    "energy_density_to_natural",
    "GEV_INV_TO_EV_INV",
]

# 1 GeV^-1 expressed in eV^-1
GEV_INV_TO_EV_INV = 1e-9


@dataclass(frozen=True)
class PhysicalConstants:
    hbar_eV_s: float
    hbar_c_eV_m: float
    c_m_s: float
    mu_B_eV_per_T: float
    g_e: float = 2.0

    def __post_init__(self):
        for name in ("hbar_eV_s", "hbar_c_eV_m", "c_m_s", "mu_B_eV_per_T", "g_e"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        ratio = self.hbar_c_eV_m / self.hbar_eV_s
        if abs(ratio / self.c_m_s - 1.0) > 1e-9:
            raise ValueError("hbar_c_eV_m / hbar_eV_s is inconsistent with c_m_s")


CODATA2018 = PhysicalConstants(
    hbar_eV_s=6.582119569e-16,
    hbar_c_eV_m=1.973269804e-7,
    c_m_s=299792458.0,
    mu_B_eV_per_T=5.7883818060e-5,
    g_e=2.0,
)


def energy_to_angular_frequency(energy_eV, const=CODATA2018):
    """Angular frequency [rad/s] of a quantum of energy ``energy_eV``."""
    if not energy_eV > 0:
        raise ValueError(f"energy must be positive, got {energy_eV!r}")
    return energy_eV / const.hbar_eV_s


def angular_frequency_to_energy(omega_rad_s, const=CODATA2018):
    if not omega_rad_s > 0:
        raise ValueError(f"angular frequency must be positive, got {omega_rad_s!r}")
    return omega_rad_s * const.hbar_eV_s


def energy_density_to_natural(rho_GeV_per_cm3, const=CODATA2018):
    """Convert an energy density from GeV/cm^3 to eV^4.

    eV/m^3 times (hbar c)^3 in eV^3 m^3 gives eV^4.
    """
    if rho_GeV_per_cm3 < 0:
        raise ValueError(f"energy density must be non-negative, got {rho_GeV_per_cm3!r}")
    rho_eV_per_m3 = rho_GeV_per_cm3 * 1e9 * 1e6
    return rho_eV_per_m3 * const.hbar_c_eV_m**3
