"""Exhaustive and Monte Carlo oracles for the repetition code and GHZ dephasing.

Randomness comes from numpy's Philox counter-based generator. Trials are cut
into fixed chunks of ``CHUNK`` and chunk ``c`` is keyed by (seed, c), so the
stream a trial sees never depends on how chunks are scheduled across workers.
Per-chunk accumulators are integers or exactly rounded sums, which makes the
totals independent of accumulation order.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .qec import correctable_weight

__all__ = [
    "McConfig",
    "CHUNK",
    "MAX_EXHAUSTIVE_N",
    "chunk_generator",
    "exhaustive_logical_rate",
    "mc_repetition_logical_rate",
    "mc_ghz_envelope",
    "validation_table",
]

CHUNK = 1 << 16
MAX_EXHAUSTIVE_N = 15


@dataclass(frozen=True)
class McConfig:
    seed: int = 20240611
    trials: int = 100_000
    dt: float = None  # s; None means T / 100
    cycles: int = 1
    workers: int = 1

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.cycles < 1:
            raise ValueError("cycles must be >= 1")
        if self.dt is not None and not self.dt > 0:
            raise ValueError("dt must be > 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def chunk_generator(seed, chunk_index):
    return np.random.Generator(np.random.Philox(key=(chunk_index << 64) | seed))


def _chunks(total):
    return [(c, min(CHUNK, total - c * CHUNK)) for c in range(-(-total // CHUNK))]


def _map_chunks(fn, total, workers):
    chunks = _chunks(total)
    if workers == 1:
        return [fn(c, m) for c, m in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda cm: fn(*cm), chunks))


def exhaustive_logical_rate(n_rep, p_Z):
    """Probability that majority voting fails, by enumerating all 2^n flip patterns."""
    if n_rep > MAX_EXHAUSTIVE_N:
        raise ValueError(f"n_rep={n_rep} exceeds the exhaustive cost guard ({MAX_EXHAUSTIVE_N})")
    t = correctable_weight(n_rep)
    if not 0 <= p_Z < 0.5:
        raise ValueError("p_Z must lie in [0, 1/2)")
    q = 1.0 - p_Z
    failing = []
    for pattern in range(1 << n_rep):
        w = bin(pattern).count("1")
        if w > t:
            failing.append(p_Z**w * q ** (n_rep - w))
    return math.fsum(failing)


def mc_repetition_logical_rate(n_rep, p_Z, mc=McConfig()):
    """Sampled majority-vote failure rate.

    Every cycle flips each of the n_rep qubits independently with probability
    p_Z and decodes by majority. Returns (estimate, binomial standard error).
    """
    t = correctable_weight(n_rep)
    total = mc.trials * mc.cycles

    def run(c, m):
        rng = chunk_generator(mc.seed, c)
        flips = (rng.random((m, n_rep)) < p_Z).sum(axis=1)
        return int(np.count_nonzero(flips > t))

    failures = sum(_map_chunks(run, total, mc.workers))
    p = failures / total
    return p, math.sqrt(p * (1.0 - p) / total)


def mc_ghz_envelope(gamma, k_L, T, mc=McConfig()):
    """|E exp(i sum_j phi_j)| for k_L spins under independent white frequency noise.

    Each spin's phase is a Wiener process with increment variance
    2 gamma dt; the analytic value is exp(-gamma k_L T). Returns
    (|mean phasor|, standard error of its projection on the mean direction).
    """
    if gamma < 0 or not T > 0 or k_L < 1:
        raise ValueError("need gamma >= 0, T > 0, k_L >= 1")
    dt = T / 100 if mc.dt is None else mc.dt
    if dt > T / 100 * (1 + 1e-12):
        raise ValueError(f"dt={dt} is too coarse; need dt <= T/100 = {T / 100}")
    n_full = int(math.floor(T / dt + 1e-9))
    tail = T - n_full * dt
    steps = [dt] * n_full + ([tail] if tail > 1e-12 * T else [])

    def run(c, m):
        rng = chunk_generator(mc.seed, c)
        phase = np.zeros(m)
        for h in steps:
            phase += rng.standard_normal((m, k_L)).sum(axis=1) * math.sqrt(2.0 * gamma * h)
        cos, sin = np.cos(phase), np.sin(phase)
        return (
            math.fsum(cos), math.fsum(sin),
            math.fsum(cos * cos), math.fsum(sin * sin), math.fsum(cos * sin),
        )

    parts = _map_chunks(run, mc.trials, mc.workers)
    n = mc.trials
    sc = math.fsum(p[0] for p in parts) / n
    ss = math.fsum(p[1] for p in parts) / n
    scc = math.fsum(p[2] for p in parts) / n
    sss = math.fsum(p[3] for p in parts) / n
    scs = math.fsum(p[4] for p in parts) / n
    mag = math.hypot(sc, ss)
    if mag > 0:
        ux, uy = sc / mag, ss / mag
        second = ux * ux * scc + 2.0 * ux * uy * scs + uy * uy * sss
    else:
        second = 0.5 * (scc + sss)
    var = max(second - mag * mag, 0.0)
    return mag, math.sqrt(var / n)


def validation_table(
    mc_rep, mc_env, repetition_n=(3, 5, 7, 9, 11, 13, 15), repetition_p=(0.01, 0.05, 0.1, 0.3),
    envelope_cases=((0.0, 1), (0.1, 1), (0.1, 5), (0.5, 1), (1.0, 1)),
    sigma_tol=3.0, envelope_tol=0.02, closed_tol=1e-12, T=1e-4,
):
    """Run every oracle comparison and return (SweepTable, all_passed).

    check 0: closed binomial tail vs. exhaustive enumeration (|delta| <= closed_tol)
    check 1: repetition MC vs. exhaustive (|delta| <= sigma_tol * sigma, sigma
             from the exact rate so that a zero-count estimate is still scored)
    check 2: GHZ envelope MC vs. exp(-gamma k T) (relative delta <= envelope_tol);
             ``param`` holds gamma T
    """
    from .qec import binomial_tail
    from .tables import SweepTable

    table = SweepTable("mc_validation")
    ok = True
    for n in repetition_n:
        for p in repetition_p:
            exact = exhaustive_logical_rate(n, p)
            closed = binomial_tail(n, p)
            delta = closed - exact
            passed = abs(delta) <= closed_tol
            ok &= passed
            table.add(0, n, p, exact, closed, 0.0, delta, passed)
    for n in repetition_n:
        for p in repetition_p:
            exact = exhaustive_logical_rate(n, p)
            est, se = mc_repetition_logical_rate(n, p, mc_rep)
            sigma = math.sqrt(exact * (1 - exact) / (mc_rep.trials * mc_rep.cycles))
            delta = est - exact
            passed = abs(delta) <= sigma_tol * sigma
            ok &= passed
            table.add(1, n, p, exact, est, se, delta, passed)
    for gamma_T, k in envelope_cases:
        expected = math.exp(-gamma_T * k)
        est, se = mc_ghz_envelope(gamma_T / T, int(k), T, mc_env)
        delta = est - expected
        passed = abs(delta) <= envelope_tol * expected
        ok &= passed
        table.add(2, k, gamma_T, expected, est, se, delta, passed)
    return table, bool(ok)
