"""Entrypoint for the cyclotomic signature lab."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from rich.console import Console
from rich.markup import escape

from agents.signature_agent import RunResult, SignatureAgent
from core.constants import DEFAULT_APPROXIMATION_DIGITS, REPORT_FORMATS
from core.errors import EXIT_INTERNAL, SignatureLabError
from core.report_builder import emit_report
from support.settings import load_settings

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _add_modulus(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-p", type=int, required=True, help="Prime p.")
    parser.add_argument("-n", type=int, default=1, help="Exponent n, N = p^n (default: 1).")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=REPORT_FORMATS, default="text", help="Output format (default: text).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Signature ranks of cyclotomic units and parity statements.")
    parser.add_argument("--config", type=Path, default=None, help="Path to project config (default: config/project.json).")
    parser.add_argument("--no-log", action="store_true", help="Do not append the run to the progress log.")
    parser.add_argument("--verbose", action="store_true", help="Enable debug logging.")
    commands = parser.add_subparsers(dest="command", required=True)

    sigrank = commands.add_parser("sigrank", help="Rank of the circular unit signature matrix.")
    _add_modulus(sigrank)
    sigrank.add_argument("--matrix-out", type=Path, default=None, help="Write the signature matrix to this file.")
    _add_format(sigrank)

    periods = commands.add_parser("periods", help="Minimal polynomial and real roots of a Gaussian period.")
    _add_modulus(periods)
    periods.add_argument("-d", type=int, required=True, help="Degree of the period subfield.")
    periods.add_argument("--digits", type=int, default=DEFAULT_APPROXIMATION_DIGITS, help="Digits shown for root approximations.")
    _add_format(periods)

    augment = commands.add_parser("augment", help="Signature rank after adding units of a period subfield.")
    _add_modulus(augment)
    augment.add_argument("-d", type=int, required=True, help="Degree of the period subfield.")
    augment.add_argument("-u", dest="units", action="append", required=True, help="Unit expression in a; may be repeated.")
    _add_format(augment)

    prop1 = commands.add_parser("prop1", help="Status of the parity statements.")
    _add_modulus(prop1)
    prop1.add_argument("-d", type=int, default=None, help="Degree of the period subfield for -u units.")
    prop1.add_argument("-u", dest="units", action="append", default=[], help="Unit expression in a; may be repeated.")
    data = prop1.add_mutually_exclusive_group()
    data.add_argument("--class-data", type=Path, default=None, help="Class parity CSV (default: bundled data).")
    data.add_argument("--no-class-data", action="store_true", help="Evaluate without class-number data.")
    _add_format(prop1)

    oracle = commands.add_parser("oracle-check", help="Compare exact signs with floating-point evaluation.")
    _add_modulus(oracle)
    _add_format(oracle)
    return parser


def _dispatch(agent: SignatureAgent, args: argparse.Namespace, default_class_data: Optional[Path]) -> RunResult:
    if args.command == "sigrank":
        return agent.sigrank(args.p, args.n, matrix_out=args.matrix_out)
    if args.command == "periods":
        return agent.periods(args.p, args.n, d=args.d, digits=args.digits)
    if args.command == "augment":
        return agent.augment(args.p, args.n, d=args.d, expressions=args.units)
    if args.command == "prop1":
        class_data = None if args.no_class_data else (args.class_data or default_class_data)
        return agent.prop1(args.p, args.n, d=args.d, expressions=args.units, class_data=class_data)
    return agent.oracle_check(args.p, args.n)


def main(argv: Optional[Sequence[str]] = None, console: Optional[Console] = None) -> int:
    console = console or Console()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format=LOG_FORMAT)

    try:
        settings = load_settings(args.config)
        agent = SignatureAgent(settings, journal=not args.no_log)
        result = _dispatch(agent, args, settings.class_data_path)
    except SignatureLabError as exc:
        console.print(f"[red]❌ {exc.error_code}:[/red] {escape(exc.message)}")
        return exc.exit_code
    except Exception as exc:
        logger.exception("Unexpected failure")
        console.print(f"[red]❌ internal_error:[/red] {escape(str(exc))}")
        return EXIT_INTERNAL

    if result.report is not None:
        document = emit_report(result.report, args.format)
        if args.format == "json":
            console.print_json(document)
        else:
            console.print(document, markup=False, highlight=False)
    if result.success:
        if args.format == "json":
            return result.exit_code
        console.print(f"[green]✓[/green] {result.command} N={result.modulus}: {escape(result.message)}")
    else:
        label = result.error_code or "failed"
        console.print(f"[red]❌ {label}:[/red] {escape(result.message)}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
