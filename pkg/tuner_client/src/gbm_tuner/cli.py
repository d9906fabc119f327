"""Command line: serve the protocol, evaluate one vector, or write a report."""

from __future__ import annotations

import argparse
import json
import sys

from .box import DEFAULT_VECTOR, DIMENSIONS, lower_bounds, upper_bounds
from .model import evaluate_vector
from .report import report_run
from .server import serve


def _parse_vector(text: str) -> list[float]:
    return [float(v) for v in text.replace(",", " ").split()]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="gbm-tuner",
        description="Gradient-boosted classifier evaluator speaking the nawoa-extobj protocol",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sub.add_parser("serve", help="serve fitness requests on stdin/stdout")

    box_cmd = sub.add_parser("box", help="print the tuning box as JSON")

    eval_cmd = sub.add_parser("eval", help="evaluate one raw vector")
    eval_cmd.add_argument("--x", required=True, help="vector, e.g. '0.1 3 100 1 1 1'")

    report_cmd = sub.add_parser("report", help="write default-vs-tuned report files")
    report_cmd.add_argument("--x", required=True, help="tuned vector")
    report_cmd.add_argument("--out", required=True, help="output directory")

    args = parser.parse_args(argv)
    if args.subcommand == "serve":
        return serve()
    if args.subcommand == "box":
        print(
            json.dumps(
                {
                    "dimensions": [d.name for d in DIMENSIONS],
                    "lower": lower_bounds(),
                    "upper": upper_bounds(),
                    "default": list(DEFAULT_VECTOR),
                },
                indent=2,
            )
        )
        return 0
    if args.subcommand == "eval":
        fitness, panel = evaluate_vector(_parse_vector(args.x))
        print(json.dumps({"fitness": fitness, "metrics": panel.as_dict()}, indent=2))
        return 0
    if args.subcommand == "report":
        path = report_run(_parse_vector(args.x), args.out)
        print(f"wrote {path}")
        return 0
    return 2


if __name__ == "__main__":
    sys.exit(main())
