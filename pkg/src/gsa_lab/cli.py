"""``gsa-lab`` command line interface.

Errors are reported as a single JSON object on stderr with a nonzero exit code.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import benchmarks
from .config import Pairing, load_config
from .experiment import run_experiment
from .model import GsaLabError
from .report import compare_strategies, export

EXIT_ERROR = 1
EXIT_USAGE = 2


def _u64(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed out of unsigned 64-bit range: {text}")
    return value


def _point(text: str) -> list:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gsa-lab", description="Gravitational Search Algorithm experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run an experiment described by a YAML config")
    p_run.add_argument("--config", required=True, help="path to the experiment config")
    p_run.add_argument("--out", help="output directory (overrides output.dir)")
    p_run.add_argument("--seed", type=_u64, help="base seed (overrides base_seed)")
    p_run.add_argument("--format", choices=["csv", "json"], help="output format (overrides output.format)")
    p_run.add_argument("--workers", type=int, help="parallel runs (default: $GSA_LAB_WORKERS or 1)")

    sub.add_parser("list-functions", help="list registered benchmark functions")

    p_eval = sub.add_parser("eval", help="evaluate a benchmark function at a point")
    p_eval.add_argument("--function", required=True)
    p_eval.add_argument("--point", required=True, type=_point, help="comma-separated coordinates")
    return parser


def cmd_run(args) -> int:
    config = load_config(args.config).with_overrides(seed=args.seed, out=args.out, fmt=args.format)
    results = run_experiment(config, workers=args.workers)
    table = compare_strategies(results, strict=False, same_seed=config.pairing is Pairing.PAIRED)
    for path in export(results, table, config.output_format, config.output_dir):
        print(path)
    for h in table.head_to_head:
        print(f"{h.function} d={h.dimension}: {h.proposed} vs {h.fixed}: "
              f"wins={h.wins} ties={h.ties} losses={h.losses}")
    return 0


def cmd_list(args) -> int:
    for fid in benchmarks.list_functions():
        print(fid)
    return 0


def cmd_eval(args) -> int:
    print(repr(benchmarks.evaluate(args.function, args.point)))
    return 0


COMMANDS = {"run": cmd_run, "list-functions": cmd_list, "eval": cmd_eval}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except GsaLabError as exc:
        print(json.dumps(exc.to_dict()), file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(json.dumps({"error": "value", "message": str(exc)}), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
