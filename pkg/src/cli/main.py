"""
Command-line entry point for the monomial joint-reduction workbench
"""

import argparse
import json
import logging
import sys
import textwrap
from typing import List, Optional

import pandas as pd

from src.cli.commands import COMMANDS, run_command
from src.config.settings import CACHE_PATH, CORPUS_SEED, DEFAULT_BOUND, DEFAULT_VARIABLES, LOG_FORMAT, LOG_LEVEL
from src.models.reports import Report

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jr",
        description="Integral closures, normal Hilbert coefficients and joint reductions of monomial ideals",
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="Computation to run")
    parser.add_argument("expressions", nargs="*", help="Ideal expressions, e.g. \"(x^2,y,z)\"")

    parser.add_argument("--ring", default=",".join(DEFAULT_VARIABLES), help="Comma separated variable names")
    parser.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="Verification bound")
    parser.add_argument("--json", action="store_true", help="Machine-readable output")
    parser.add_argument("--cache", default=CACHE_PATH, help="CSV file persisting the filtration cache")
    parser.add_argument("--seed", type=int, default=CORPUS_SEED, help="Corpus sampling seed")
    parser.add_argument("--count", type=int, default=5, help="Corpus triples wanted")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="Logging level")

    parser.add_argument("--I", dest="I", default=None, help="Ideal bound to the name I")
    parser.add_argument("--J", dest="J", default=None, help="Ideal bound to the name J")
    parser.add_argument("--K", dest="K", default=None, help="Ideal bound to the name K")
    parser.add_argument("--a", dest="a", default=None, help="Element of I")
    parser.add_argument("--b", dest="b", default=None, help="Element of J")
    parser.add_argument("--c", dest="c", default=None, help="Element of K")

    parser.add_argument("--point", default=None, help="Exponent tuple r,s,t")
    parser.add_argument("--arity", type=int, default=None, help="Number of ideals the polynomial uses")
    parser.add_argument("--offset", type=int, default=0, help="Offset of the fitting grid")
    parser.add_argument("--stabilize", action="store_true", help="Increase the offset until the fit is stable")
    parser.add_argument("--reduction", default=None, help="Candidate reduction for reduction-number")
    parser.add_argument("--adic", action="store_true", help="Compare the normal polynomial with the adic Hilbert function")
    return parser


def _table(frame: pd.DataFrame, indent: str) -> str:
    return textwrap.indent(frame.to_string(index=False), indent)


def render(report: Report, as_json: bool) -> str:
    """Machine-readable JSON with sorted keys, or plain text with pandas tables"""
    if as_json:
        return json.dumps(report.to_wire(), indent=2, sort_keys=True)

    lines = [f"{report.command}"]
    for section in ("inputs", "outputs", "verdicts"):
        values = getattr(report, section)
        if not values:
            continue
        lines.append(f"{section}:")
        for key, value in values.items():
            if isinstance(value, pd.DataFrame):
                lines.append(f"  {key}:")
                lines.append(_table(value, "    ") if not value.empty else "    (empty)")
            else:
                lines.append(f"  {key}: {value}")
    if report.witnesses:
        lines.append("witnesses:")
        lines.append(_table(pd.DataFrame(report.witnesses), "  "))
    for error in report.errors:
        lines.append(f"error: {error}")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2

    logging.basicConfig(level=args.log_level.upper(), format=LOG_FORMAT, stream=sys.stderr)
    logger.info(f"Running {args.command}")

    report, code = run_command(args.command, args)
    print(render(report, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
