"""Command line interface.

Exit codes: 0 success, 2 config/validation problem, 3 runtime physics or
numerics failure.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

from .config import load_config
from .errors import ConfigError, OptomechError, ValidationError
from .presets import PRESETS, get_preset
from .sweep import run_sweep, write_csv

WORKERS_ENV = "OPTOMECH_WORKERS"


def _resolve_workers(flag) -> int:
    if flag is not None:
        value = flag
    elif WORKERS_ENV in os.environ:
        raw = os.environ[WORKERS_ENV]
        try:
            value = int(raw)
        except ValueError:
            raise ValidationError([f"{WORKERS_ENV}={raw!r} is not an integer"])
    else:
        return 1
    if value < 1:
        raise ValidationError(["workers must be >= 1"])
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optomech",
        description="Steady states of a driven cavity coupled to mechanical modes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run the sweep described by a config file")
    p_sim.add_argument("config", type=Path)
    p_sim.add_argument("--out", type=Path, default=None,
                       help="output CSV path (default: config name with .csv)")
    p_sim.add_argument("--workers", type=int, default=None)

    p_pre = sub.add_parser("preset", help="run a built-in figure preset")
    p_pre.add_argument("name")
    p_pre.add_argument("--out", type=Path, default=Path("."),
                       help="output directory (default: current)")
    p_pre.add_argument("--coupling", choices=("fixed-power", "fixed-G"),
                       default=None, help="override the preset coupling mode")
    p_pre.add_argument("--workers", type=int, default=None)

    sub.add_parser("list-presets", help="list preset names")

    p_val = sub.add_parser("validate", help="check a config file and exit")
    p_val.add_argument("config", type=Path)
    return parser


def _cmd_simulate(args) -> int:
    params, spec = load_config(args.config)
    workers = _resolve_workers(args.workers)
    rows = run_sweep(params, spec, workers=workers)
    out = args.out if args.out is not None else args.config.with_suffix(".csv")
    with open(out, "w", encoding="utf-8", newline="") as fh:
        write_csv(rows, fh, spec=spec, n_modes=params.n_modes)
    print(out)
    return 0


def _cmd_preset(args) -> int:
    preset = get_preset(args.name)
    spec = preset.sweep
    if args.coupling is not None:
        spec = replace(spec, coupling_mode=args.coupling)
    workers = _resolve_workers(args.workers)
    rows = run_sweep(preset.params, spec, workers=workers)
    args.out.mkdir(parents=True, exist_ok=True)
    out = args.out / f"{preset.name}.csv"
    with open(out, "w", encoding="utf-8", newline="") as fh:
        write_csv(rows, fh, spec=spec, n_modes=preset.params.n_modes,
                  preset=preset.name)
    print(out)
    return 0


def _cmd_list_presets() -> int:
    width = max(len(name) for name in PRESETS)
    for name in sorted(PRESETS):
        print(f"{name:<{width}}  {PRESETS[name].description}")
    return 0


def _cmd_validate(args) -> int:
    params, spec = load_config(args.config)
    print(f"ok: {params.n_modes} mode(s), sweep {spec.variable} "
          f"[{spec.start:g}, {spec.stop:g}] x{spec.points}, "
          f"outputs {','.join(spec.outputs)}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "preset":
            return _cmd_preset(args)
        if args.command == "list-presets":
            return _cmd_list_presets()
        return _cmd_validate(args)
    except ConfigError as exc:
        if isinstance(exc, ValidationError):
            for problem in exc.problems:
                print(f"error: {problem}", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    except OptomechError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
