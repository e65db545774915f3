"""Run configuration: YAML ingestion, strict key checking, defaults.

An empty document yields the built-in device profile (Si/SiGe operating
point with the high-fidelity p_g = p_m = 1e-5 control budget). Every invalid
or unknown entry is reported at once, by dotted path.
"""
import difflib
import math
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .axion import AxionParams
from .mc import McConfig
from .noise import NoiseParams
from .qec import CodeConfig
from .scan import DEFAULT_K_MAX, DEFAULT_N_REP_SET, DeviceScenario

__all__ = ["ConfigError", "RunConfig", "PROFILES", "load_config", "build_config", "parse_masses"]

PROFILES = {
    "high-fidelity": {"p_g": 1e-5, "p_m": 1e-5},
    "realistic": {"p_g": 1e-4, "p_m": 1e-4},
}

# common names people reach for, mapped to the field we actually use
ALIASES = {
    "T2_star": "scenario.noise.T2_markov",
    "T2": "scenario.noise.T2_markov",
    "T2_loc": "scenario.noise.T2_markov",
    "T2_cor": "scenario.noise.T2_corr",
    "beta": "scenario.noise.stretch_beta",
    "T_seg": "scenario.T_lim",
}


class ConfigError(Exception):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("invalid configuration:\n  " + "\n  ".join(self.problems))


# section -> {key: default}; a nested dict marks a sub-section
SCHEMA = {
    "profile": "high-fidelity",
    "output_dir": "out",
    "format": "csv",
    "scenario": {
        "T_lim": 100e-6,
        "T_tot": 1.0,
        "snr_threshold": 1.0,
        "baseline_mode": "fisher",
        "eta_B": 100e-9,
        "t_dead_ghz": 0.0,
        "t_dead_sql": 0.0,
        "noise": {"T2_markov": 2e-3, "T2_oneoverf": 200e-6, "stretch_beta": 2.0, "T2_corr": 10e-3},
        "code": {"tau_cyc": 2e-6, "p_g": None, "p_m": None},
        "axion": {
            "m_a": 1e-6, "rho_DM": 0.4, "v_wind": 1e-3, "v0_halo": 220e3,
            "cos_theta": 1.0, "g_ae": 1e-11, "phi_perp": 0.0,
        },
    },
    "gain_curve": {"n_rep_set": list(DEFAULT_N_REP_SET), "k_max": DEFAULT_K_MAX},
    "regimes": {
        "gamma_loc_T": [1e-3, 1.0], "gamma_eff_T": [1e-4, 1.0], "gamma_cor_T": 0.01,
        "n_rep": 13, "sizes": [200, 200],
    },
    "tradeoff": {
        "fidelities": [[1e-4, 1e-4], [1e-5, 1e-5]],
        "n_rep_set": [3, 5, 7, 9, 11, 13, 15],
        "k_max": DEFAULT_K_MAX,
    },
    "scaling": {"N_max": 20000},
    "sensitivity": {"masses": "1e-6:1e-3:61", "k_max": DEFAULT_K_MAX},
    "mc": {
        "seed": 20240611,
        "trials_repetition": 1_000_000,
        "trials_envelope": 100_000,
        "dt": None,
        "workers": 1,
        "repetition_n": [3, 5, 7, 9, 11, 13, 15],
        "repetition_p": [0.01, 0.05, 0.1, 0.3],
        "envelope_cases": [[0.0, 1], [0.1, 1], [0.1, 5], [0.5, 1], [1.0, 1]],
        "envelope_tol": 0.02,
        "sigma_tol": 3.0,
    },
}


@dataclass
class RunConfig:
    scenario: DeviceScenario = field(default_factory=DeviceScenario)
    gain_curve: dict = field(default_factory=lambda: dict(SCHEMA["gain_curve"]))
    regimes: dict = field(default_factory=lambda: dict(SCHEMA["regimes"]))
    tradeoff: dict = field(default_factory=lambda: dict(SCHEMA["tradeoff"]))
    scaling: dict = field(default_factory=lambda: dict(SCHEMA["scaling"]))
    sensitivity: dict = field(default_factory=lambda: dict(SCHEMA["sensitivity"]))
    mc: dict = field(default_factory=lambda: dict(SCHEMA["mc"]))
    output_dir: Path = Path("out")
    format: str = "csv"
    profile: str = "high-fidelity"

    def mc_config(self, trials):
        m = self.mc
        return McConfig(seed=int(m["seed"]), trials=int(trials), dt=m["dt"], workers=int(m["workers"]))


def _all_paths(schema, prefix=""):
    for k, v in schema.items():
        path = f"{prefix}{k}"
        yield path
        if isinstance(v, dict):
            yield from _all_paths(v, path + ".")


def _suggest(key):
    if key in ALIASES:
        return ALIASES[key]
    paths = list(_all_paths(SCHEMA))
    leaves = {p.rsplit(".", 1)[-1]: p for p in paths}
    hit = difflib.get_close_matches(key, list(leaves), n=1, cutoff=0.5)
    return leaves[hit[0]] if hit else None


def _merge(schema, user, prefix, problems):
    """Overlay ``user`` on schema defaults, recording unknown keys."""
    out = {}
    if user is None:
        user = {}
    if not isinstance(user, dict):
        problems.append(f"{prefix.rstrip('.') or '<root>'}: expected a mapping, got {type(user).__name__}")
        user = {}
    for k in user:
        if k not in schema:
            hint = _suggest(str(k))
            msg = f"{prefix}{k}: unknown key"
            if hint:
                msg += f" (did you mean '{hint}'?)"
            problems.append(msg)
    for k, default in schema.items():
        if isinstance(default, dict):
            out[k] = _merge(default, user.get(k), f"{prefix}{k}.", problems)
        else:
            out[k] = user.get(k, default)
    return out


def _num(value, path, problems, integer=False):
    try:
        if isinstance(value, bool):
            raise TypeError
        x = float(value)
    except (TypeError, ValueError):
        problems.append(f"{path}: expected a number, got {value!r}")
        return math.nan
    if integer:
        if not math.isfinite(x) or x != int(x):
            problems.append(f"{path}: expected an integer, got {value!r}")
            return 0
        return int(x)
    return x


def parse_masses(spec):
    """'start:stop:points' -> log-spaced list; a YAML list passes through."""
    import numpy as np

    if isinstance(spec, (list, tuple)):
        return [float(m) for m in spec]
    start, stop, points = str(spec).split(":")
    return [float(m) for m in np.geomspace(float(start), float(stop), int(points))]


def _prefixed(prefix, errors):
    return [f"{prefix}: {e}" for e in errors]


def build_config(raw):
    """Validate a parsed mapping and return a :class:`RunConfig`."""
    problems = []
    d = _merge(SCHEMA, raw, "", problems)
    sc = d["scenario"]

    profile = d["profile"]
    if profile not in PROFILES:
        problems.append(f"profile: must be one of {sorted(PROFILES)} (got {profile!r})")
        profile = "high-fidelity"
    for key in ("p_g", "p_m"):
        if sc["code"][key] is None:
            sc["code"][key] = PROFILES[profile][key]

    noise_kw = {k: _num(v, f"scenario.noise.{k}", problems) for k, v in sc["noise"].items()}
    code_kw = {k: _num(v, f"scenario.code.{k}", problems) for k, v in sc["code"].items()}
    axion_kw = {k: _num(v, f"scenario.axion.{k}", problems) for k, v in sc["axion"].items()}
    scen_kw = {
        k: _num(v, f"scenario.{k}", problems)
        for k, v in sc.items()
        if k not in ("noise", "code", "axion", "baseline_mode")
    }

    noise = axion = code = scenario = None
    try:
        noise = NoiseParams(**noise_kw)
    except ValueError:
        problems += _prefixed("scenario.noise", NoiseParams.validation_errors(_Bare(noise_kw)))
    try:
        code = CodeConfig(n_rep=13, **code_kw)
    except ValueError:
        problems += _prefixed("scenario.code", CodeConfig.validation_errors(_Bare(dict(n_rep=13, **code_kw))))
    try:
        axion = AxionParams(**axion_kw)
    except ValueError:
        problems += _prefixed("scenario.axion", AxionParams.validation_errors(_Bare(axion_kw)))
    if noise and code and axion:
        try:
            scenario = DeviceScenario(
                noise=noise, code=code, axion=axion, baseline_mode=sc["baseline_mode"], **scen_kw
            )
        except ValueError:
            bare = _Bare(dict(baseline_mode=sc["baseline_mode"], **scen_kw))
            problems += _prefixed("scenario", DeviceScenario.validation_errors(bare))

    if d["format"] not in ("csv", "json"):
        problems.append(f"format: must be 'csv' or 'json' (got {d['format']!r})")

    for section in ("gain_curve", "tradeoff", "sensitivity"):
        k_max = _num(d[section]["k_max"], f"{section}.k_max", problems, integer=True)
        if k_max < 1:
            problems.append(f"{section}.k_max: must be >= 1 (got {k_max})")
        d[section]["k_max"] = k_max
    for section in ("gain_curve", "tradeoff"):
        nset = d[section]["n_rep_set"]
        if not isinstance(nset, list) or not nset:
            problems.append(f"{section}.n_rep_set: expected a non-empty list")
        else:
            ints = [_num(n, f"{section}.n_rep_set", problems, integer=True) for n in nset]
            bad = [n for n in ints if n < 1 or n % 2 == 0]
            if bad:
                problems.append(f"{section}.n_rep_set: distances must be odd and >= 1 (bad: {bad})")
            d[section]["n_rep_set"] = ints
    try:
        d["sensitivity"]["masses"] = parse_masses(d["sensitivity"]["masses"])
        if any(not m > 0 for m in d["sensitivity"]["masses"]):
            problems.append("sensitivity.masses: masses must be > 0")
    except (ValueError, TypeError):
        problems.append(f"sensitivity.masses: expected 'start:stop:points' or a list (got {d['sensitivity']['masses']!r})")
    n_max = _num(d["scaling"]["N_max"], "scaling.N_max", problems, integer=True)
    if n_max < 1:
        problems.append(f"scaling.N_max: must be >= 1 (got {n_max})")
    d["scaling"]["N_max"] = n_max
    seed = _num(d["mc"]["seed"], "mc.seed", problems, integer=True)
    if not 0 <= seed < 2**64:
        problems.append(f"mc.seed: must be a 64-bit unsigned integer (got {seed})")
    d["mc"]["seed"] = seed

    if problems:
        raise ConfigError(problems)
    return RunConfig(
        scenario=scenario,
        gain_curve=d["gain_curve"],
        regimes=d["regimes"],
        tradeoff=d["tradeoff"],
        scaling=d["scaling"],
        sensitivity=d["sensitivity"],
        mc=d["mc"],
        output_dir=Path(d["output_dir"]),
        format=d["format"],
        profile=profile,
    )


class _Bare:
    """Attribute bag so validation_errors() can run on values that failed construction."""

    def __init__(self, kw):
        self.__dict__.update(kw)


def load_config(path=None):
    if path is None:
        return build_config({})
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError([f"{path}: cannot read ({exc.strerror})"]) from exc
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark else "unknown position"
        problem = getattr(exc, "problem", None) or str(exc)
        raise ConfigError([f"{path}: parse error at {where}: {problem}"]) from exc
    return build_config(raw or {})
