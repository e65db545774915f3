"""Command line entry point: ``aqf <command> [options]``.

Exit status: 0 success, 1 configuration or input error, 2 when
``validate-mc`` finds an oracle mismatch.
"""
import argparse
import logging
import sys
from dataclasses import replace

from . import scan
from .axion import derive_axion_quantities
from .config import ConfigError, load_config, parse_masses
from .fisher import segment_duration
from .mc import validation_table
from .tables import SweepTable, write_table

log = logging.getLogger("aqf")

COMMANDS = ("derive", "gain-curve", "regimes", "tradeoff", "scaling", "sensitivity", "validate-mc")


def _int_list(text):
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser():
    p = argparse.ArgumentParser(prog="aqf", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="YAML run configuration")
    p.add_argument("--out", help="output directory")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--seed", type=int, help="Monte Carlo seed")
    p.add_argument("--m-a", "--m_a", dest="m_a", type=float, help="axion mass [eV]")
    p.add_argument("--n-rep-set", type=_int_list, help="comma separated odd distances")
    p.add_argument("--k-max", type=int, help="largest logical GHZ size")
    p.add_argument("--pg", type=float, help="gate error per cycle")
    p.add_argument("--pm", type=float, help="measurement error per cycle")
    p.add_argument("--masses", help="start:stop:points, log spaced [eV]")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def apply_overrides(cfg, args):
    sc = cfg.scenario
    if args.m_a is not None:
        sc = replace(sc, axion=replace(sc.axion, m_a=args.m_a))
    if args.pg is not None or args.pm is not None:
        sc = sc.with_fidelity(
            sc.code.p_g if args.pg is None else args.pg,
            sc.code.p_m if args.pm is None else args.pm,
        )
    cfg.scenario = sc
    if args.n_rep_set:
        for n in args.n_rep_set:
            if n < 1 or n % 2 == 0:
                raise ConfigError([f"--n-rep-set: distances must be odd and >= 1 (bad: {n})"])
        cfg.gain_curve["n_rep_set"] = args.n_rep_set
    if args.k_max is not None:
        if args.k_max < 1:
            raise ConfigError([f"--k-max: must be >= 1 (got {args.k_max})"])
        for section in (cfg.gain_curve, cfg.tradeoff, cfg.sensitivity):
            section["k_max"] = args.k_max
    if args.masses:
        try:
            cfg.sensitivity["masses"] = parse_masses(args.masses)
        except ValueError as exc:
            raise ConfigError([f"--masses: expected start:stop:points ({exc})"]) from exc
    if args.seed is not None:
        if not 0 <= args.seed < 2**64:
            raise ConfigError([f"--seed: must be a 64-bit unsigned integer (got {args.seed})"])
        cfg.mc["seed"] = args.seed
    if args.out:
        cfg.output_dir = type(cfg.output_dir)(args.out)
    if args.format:
        cfg.format = args.format
    return cfg


def _block(cfg):
    return scan.optimize_block(cfg.scenario, cfg.gain_curve["n_rep_set"], cfg.gain_curve["k_max"])


def run_command(cfg, cmd):
    """Execute one command; returns (exit_status, SweepTable, summary line)."""
    sc = cfg.scenario
    status = 0
    if cmd == "derive":
        d = derive_axion_quantities(sc.axion)
        t_seg = segment_duration(sc.axion.m_a, sc.T_lim, sc.axion.v0_halo)
        table = SweepTable("axion_derived")
        table.add(sc.axion.m_a, sc.axion.g_ae, d.omega_a, d.a0, d.tau_a, d.ell_a,
                  d.B_eff_amp, d.beta_mod, t_seg)
        summary = (f"m_a={sc.axion.m_a:g} eV tau_a={d.tau_a:.4g} s ell_a={d.ell_a:.4g} m "
                   f"B_eff={d.B_eff_amp:.3g} T T_seg={t_seg:.3g} s")
    elif cmd == "gain-curve":
        table = scan.gain_curve(sc, cfg.gain_curve["n_rep_set"], cfg.gain_curve["k_max"])
        opt = _block(cfg)
        summary = (f"optimum (n_rep, k_L)=({opt.n_rep}, {opt.k_L}) eta_seg={opt.eta_seg:.4g} "
                   f"N_block={opt.N_block}" + (" [k_max boundary]" if opt.boundary_hit else ""))
    elif cmd == "regimes":
        r = cfg.regimes
        table = scan.regimes_grid(
            tuple(float(x) for x in r["gamma_loc_T"]), tuple(float(x) for x in r["gamma_eff_T"]),
            float(r["gamma_cor_T"]), int(r["n_rep"]), tuple(int(x) for x in r["sizes"]),
        )
        benefit = sum(table.column("benefit"))
        summary = f"regimes grid {len(table)} points, QEC-benefit region {int(benefit)} points"
    elif cmd == "tradeoff":
        t = cfg.tradeoff
        table = scan.tradeoff_vs_distance(
            sc, tuple(tuple(float(x) for x in f) for f in t["fidelities"]),
            tuple(t["n_rep_set"]), t["k_max"],
        )
        summary = "; ".join(
            f"p=({s['p_g']:g},{s['p_m']:g}) n_coh={s['n_rep_coherence_opt']} "
            f"n_sat={s['n_rep_saturation']} eta_max={s['eta_max']:.3g}"
            for s in table.meta["summary"]
        )
    elif cmd == "scaling":
        opt = _block(cfg)
        table = scan.tiling_scaling(sc, opt, range(1, cfg.scaling["N_max"] + 1))
        summary = f"tiled block ({opt.n_rep}, {opt.k_L}) N_block={opt.N_block} eta_seg={opt.eta_seg:.4g}"
    elif cmd == "sensitivity":
        opt = _block(cfg)
        table = scan.sensitivity_scan(sc, opt, cfg.sensitivity["masses"], cfg.sensitivity["k_max"])
        etas = table.column("eta")
        summary = (f"n_rep={opt.n_rep} eta(m_a) in [{min(etas):.3g}, {max(etas):.3g}] "
                   f"over {len(table)} masses ({sc.baseline_mode} baseline)")
    elif cmd == "validate-mc":
        m = cfg.mc
        table, ok = validation_table(
            cfg.mc_config(m["trials_repetition"]), cfg.mc_config(m["trials_envelope"]),
            tuple(m["repetition_n"]), tuple(m["repetition_p"]),
            tuple((float(g), int(k)) for g, k in m["envelope_cases"]),
            float(m["sigma_tol"]), float(m["envelope_tol"]),
        )
        failed = len(table) - int(sum(table.column("passed")))
        worst = max(abs(d) for d in table.column("delta"))
        summary = f"{len(table)} oracle checks, {failed} failed, max |delta|={worst:.3g}"
        status = 0 if ok else 2
    else:
        raise ValueError(f"unknown command {cmd!r}")
    if table.dropped:
        summary += f" ({table.dropped} non-finite rows dropped)"
    return status, table, summary


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = apply_overrides(load_config(args.config), args)
        status, table, summary = run_command(cfg, args.command)
        path = cfg.output_dir / f"{table.schema_name}.{cfg.format}"
        write_table(table, path, cfg.format)
    except ConfigError as exc:
        print(f"aqf: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"aqf: error: {exc}", file=sys.stderr)
        return 1
    print(f"{args.command}: {summary} -> {path}")
    return status


if __name__ == "__main__":
    sys.exit(main())
