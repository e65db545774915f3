"""Phase-flip repetition code: logical error per cycle and logical dephasing rate."""
import math
from dataclasses import dataclass
from fractions import Fraction

from .noise import physical_z_error_prob

__all__ = [
    "CodeConfig",
    "LogicalNoise",
    "correctable_weight",
    "binomial_tail",
    "logical_error_prob",
    "effective_dephasing_rate",
    "logical_noise",
]


@dataclass(frozen=True)
class CodeConfig:
    n_rep: int = 13
    tau_cyc: float = 2e-6  # s
    p_g: float = 1e-5
    p_m: float = 1e-5

    def __post_init__(self):
        errors = self.validation_errors()
        if errors:
            raise ValueError("; ".join(errors))

    def validation_errors(self):
        errors = []
        if not (isinstance(self.n_rep, int) and self.n_rep >= 1 and self.n_rep % 2 == 1):
            errors.append(f"n_rep must be an odd integer >= 1 (got {self.n_rep!r})")
        if not self.tau_cyc > 0 or math.isinf(self.tau_cyc):
            errors.append(f"tau_cyc must be finite and > 0 (got {self.tau_cyc})")
        for name in ("p_g", "p_m"):
            v = getattr(self, name)
            if not 0 <= v < 1:
                errors.append(f"{name} must lie in [0, 1) (got {v})")
        return errors

    def with_distance(self, n_rep):
        return CodeConfig(n_rep=n_rep, tau_cyc=self.tau_cyc, p_g=self.p_g, p_m=self.p_m)


@dataclass(frozen=True)
class LogicalNoise:
    p_Z: float
    p_L: float
    gamma_eff: float  # 1/s
    correctable_weight: int


def correctable_weight(n_rep):
    """Largest number of phase flips a distance-n_rep majority vote undoes."""
    if isinstance(n_rep, bool) or int(n_rep) != n_rep or n_rep < 1 or n_rep % 2 == 0:
        raise ValueError(f"n_rep must be an odd integer >= 1 (got {n_rep!r})")
    return (int(n_rep) - 1) // 2


def binomial_tail(n_rep, p_Z):
    """P(more than t of n_rep independent flips), summed exactly in rationals."""
    t = correctable_weight(n_rep)
    p = Fraction(p_Z)
    q = 1 - p
    total = sum(math.comb(n_rep, k) * p**k * q ** (n_rep - k) for k in range(t + 1, n_rep + 1))
    return float(total)


def logical_error_prob(cfg, p_Z):
    """Binomial tail plus the first-order fault floor n_rep (p_m + p_g), clamped to [0, 1]."""
    if not 0 <= p_Z < 0.5:
        raise ValueError(f"p_Z={p_Z} is outside [0, 1/2): code beyond pseudo-threshold")
    p_L = binomial_tail(cfg.n_rep, p_Z) + cfg.n_rep * (cfg.p_m + cfg.p_g)
    return min(max(p_L, 0.0), 1.0)


def effective_dephasing_rate(p_L, tau_cyc):
    """gamma_eff = -ln(1 - 2 p_L) / tau_cyc in 1/s."""
    if not tau_cyc > 0:
        raise ValueError(f"tau_cyc must be > 0 (got {tau_cyc})")
    if p_L >= 0.5:
        raise ValueError(f"p_L={p_L} >= 1/2: logical channel fully depolarizing")
    if p_L < 0:
        raise ValueError(f"p_L must be >= 0 (got {p_L})")
    return -math.log1p(-2.0 * p_L) / tau_cyc


def logical_noise(noise, cfg):
    p_Z = physical_z_error_prob(noise, cfg.tau_cyc)
    p_L = logical_error_prob(cfg, p_Z)
    return LogicalNoise(
        p_Z=p_Z,
        p_L=p_L,
        gamma_eff=effective_dephasing_rate(p_L, cfg.tau_cyc),
        correctable_weight=correctable_weight(cfg.n_rep),
    )
