"""Device dephasing envelopes and per-cycle physical phase-flip probability."""
import math
import warnings
from dataclasses import dataclass

__all__ = [
    "NoiseParams",
    "CoarseGrainingWarning",
    "local_envelope",
    "local_rate",
    "correlated_rate",
    "physical_z_error_prob",
    "check_coarse_graining",
]


class CoarseGrainingWarning(UserWarning):
    """QEC cycle is not short compared with the low-frequency noise scale."""


@dataclass(frozen=True)
class NoiseParams:
    """Local and correlated dephasing of a single spin.

    Times are in seconds; ``math.inf`` switches a channel off. Defaults are
    the Si/SiGe operating point: 2 ms Markovian (Hahn echo) component,
    200 us 1/f-like component with stretch exponent 2, 10 ms correlated.
    """

    T2_markov: float = 2e-3
    T2_oneoverf: float = 200e-6
    stretch_beta: float = 2.0
    T2_corr: float = 10e-3

    def __post_init__(self):
        errors = self.validation_errors()
        if errors:
            raise ValueError("; ".join(errors))

    def validation_errors(self):
        errors = []
        for name in ("T2_markov", "T2_oneoverf", "T2_corr"):
            v = getattr(self, name)
            if math.isnan(v) or not v > 0:
                errors.append(f"{name} must be > 0 or inf (got {v})")
        if not self.stretch_beta >= 1:
            errors.append(f"stretch_beta must be >= 1 (got {self.stretch_beta})")
        return errors


def local_rate(n):
    """Markovian local dephasing rate 1/T2_markov in 1/s (0 if disabled)."""
    return 0.0 if math.isinf(n.T2_markov) else 1.0 / n.T2_markov


def correlated_rate(n):
    """Common-mode dephasing rate 1/T2_corr in 1/s (0 if disabled)."""
    return 0.0 if math.isinf(n.T2_corr) else 1.0 / n.T2_corr


def _local_exponent(t, n):
    x = t / n.T2_markov
    if not math.isinf(n.T2_oneoverf):
        x += (t / n.T2_oneoverf) ** n.stretch_beta
    return x


def local_envelope(t, n):
    """C_loc(t) = exp(-t/T2_markov - (t/T2_oneoverf)^stretch_beta)."""
    if t < 0:
        raise ValueError(f"t must be >= 0 (got {t})")
    return math.exp(-_local_exponent(t, n))


def physical_z_error_prob(n, tau_cyc):
    """Per-cycle phase-flip probability p_Z = (1 - C_loc(tau_cyc)) / 2."""
    if not tau_cyc > 0:
        raise ValueError(f"tau_cyc must be > 0 (got {tau_cyc})")
    # -expm1 keeps full precision when the exponent is tiny
    p = -0.5 * math.expm1(-_local_exponent(tau_cyc, n))
    # an underflowed envelope must not round p_Z up to exactly 1/2
    return min(p, math.nextafter(0.5, 0.0))


def check_coarse_graining(n, tau_cyc):
    """Warn when tau_cyc > T2_oneoverf / 10. Returns True if the check passed."""
    if tau_cyc > n.T2_oneoverf / 10:
        warnings.warn(
            f"tau_cyc={tau_cyc:g} s is not short against T2_oneoverf={n.T2_oneoverf:g} s; "
            "per-cycle coarse graining is questionable",
            CoarseGrainingWarning,
            stacklevel=2,
        )
        return False
    return True
