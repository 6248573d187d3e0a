"""Utility for appending structured progress log entries."""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional, Sequence, Tuple

from rich.console import Console
from rich.markup import escape

from core.errors import SignatureLabError
from support.settings import LabSettings, load_settings

STATUS_EMOJI = {
    "info": "ℹ️",
    "success": "✅",
    "warn": "⚠️",
    "error": "❌",
    "contradiction": "🧨",
}


def format_entry(
    message: str,
    emoji: str,
    agent: Optional[str],
    project_name: Optional[str],
    meta: Tuple[Tuple[str, str], ...],
    timestamp: Optional[str],
) -> str:
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S UTC")

    if not emoji:
        emoji = "📝"

    segments = [f"[{emoji}]", f"[{timestamp}]"]
    if agent:
        segments.append(f"[Agent: {agent}]")
    if project_name:
        segments.append(f"[Project: {project_name}]")

    entry = " ".join(segments) + f" {message}"
    if meta:
        entry += " | " + "; ".join(f"{key}={value}" for key, value in meta)
    return entry


def append_log(path: Path, entry: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a", encoding="utf-8") as handle:
        handle.write(entry)
        if not entry.endswith("\n"):
            handle.write("\n")


def log_progress(
    message: str,
    *,
    emoji: Optional[str] = None,
    status: Optional[str] = None,
    agent: Optional[str] = None,
    meta: Optional[Mapping[str, Any]] = None,
    settings: Optional[LabSettings] = None,
    config_path: Optional[Path] = None,
    timestamp: Optional[str] = None,
    dry_run: bool = False,
) -> str:
    """Format one journal line and append it unless ``dry_run``; returns the line."""
    settings = settings or load_settings(config_path)

    resolved_emoji = emoji
    if not resolved_emoji and status:
        resolved_emoji = STATUS_EMOJI.get(status)
    if not resolved_emoji:
        resolved_emoji = settings.default_emoji

    meta_pairs: Tuple[Tuple[str, str], ...] = ()
    if meta:
        meta_pairs = tuple((str(key), str(value)) for key, value in meta.items())

    entry = format_entry(
        message=message,
        emoji=resolved_emoji,
        agent=agent or settings.default_agent,
        project_name=settings.project_name,
        meta=meta_pairs,
        timestamp=timestamp,
    )
    if not dry_run:
        append_log(settings.progress_log_path, entry)
    return entry


def parse_meta(pairs: Iterable[str]) -> Tuple[Tuple[str, str], ...]:
    extracted = []
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise SystemExit(f"Meta value must be key=value, received: {pair}")
        extracted.append((key.strip(), value.strip()))
    return tuple(extracted)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Append a manual entry to the lab progress log.")
    parser.add_argument("message", help="Primary log message.")
    parser.add_argument("-e", "--emoji", help="Emoji to lead the entry with.")
    parser.add_argument("-s", "--status", choices=sorted(STATUS_EMOJI), help="Named status mapped to an emoji.")
    parser.add_argument("-a", "--agent", help="Agent or component producing the entry.")
    parser.add_argument("-m", "--meta", action="append", default=[], help="key=value metadata; may be repeated.")
    parser.add_argument("-c", "--config", type=Path, default=None, help="Path to project config.")
    parser.add_argument("-t", "--timestamp", help="Override timestamp text (default: current UTC time).")
    parser.add_argument("--dry-run", action="store_true", help="Print the entry without writing it.")
    return parser


def main(argv: Optional[Sequence[str]] = None, console: Optional[Console] = None) -> int:
    console = console or Console()
    try:
        args = build_parser().parse_args(argv)
        meta = parse_meta(args.meta)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            console.print(f"[red]❌[/red] {escape(exc.code)}")
            return 2
        return int(exc.code or 0)
    try:
        settings = load_settings(args.config)
        entry = log_progress(
            args.message,
            emoji=args.emoji,
            status=args.status,
            agent=args.agent,
            meta=dict(meta),
            settings=settings,
            timestamp=args.timestamp,
            dry_run=args.dry_run,
        )
    except SignatureLabError as exc:
        console.print(f"[red]❌ {exc.error_code}:[/red] {escape(exc.message)}")
        return exc.exit_code
    if not args.dry_run:
        console.print(f"Wrote entry to {settings.progress_log_path}:", markup=False, highlight=False)
    console.print(entry, markup=False, highlight=False)
    return 0


if __name__ == "__main__":
    sys.exit(main())
