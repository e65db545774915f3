#!/usr/bin/env python3
"""Run every aqf command with one config and collect the tables in one directory.

usage: python3 scripts/run_all.py [--config run.yaml] [--out results] [--format csv|json]
"""
import argparse
import sys

from aqf.cli import COMMANDS, main


def run(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--config")
    p.add_argument("--out", default="results")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--skip", nargs="*", default=[], choices=COMMANDS)
    args = p.parse_args(argv)
    worst = 0
    for cmd in COMMANDS:
        if cmd in args.skip:
            continue
        extra = ["--config", args.config] if args.config else []
        status = main([cmd, "--out", args.out, "--format", args.format, *extra])
        worst = max(worst, status)
    return worst


if __name__ == "__main__":
    sys.exit(run())
