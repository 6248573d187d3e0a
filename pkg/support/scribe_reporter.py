"""Helpers for recording signature-lab runs via Scribe."""

from __future__ import annotations

from typing import Any, Mapping, Optional

from support.scribe import log_progress
from support.settings import LabSettings


def report_run(
    *,
    command: str,
    modulus: str,
    success: bool,
    message: str,
    settings: LabSettings,
    latency_ms: Optional[float] = None,
    status: Optional[str] = None,
    meta: Optional[Mapping[str, Any]] = None,
    agent_name: str = "SignatureAgent",
    dry_run: bool = False,
) -> Optional[str]:
    """Append one entry for a finished run; returns it, or None when journaling is off."""
    if not settings.log_runs and not dry_run:
        return None
    resolved_status = status or ("success" if success else "error")
    entry_meta = {
        "command": command,
        "modulus": modulus,
        "result": "success" if success else "failure",
    }
    if latency_ms is not None:
        entry_meta["latency_ms"] = f"{latency_ms:.2f}"
    if meta:
        entry_meta.update({key: value for key, value in meta.items() if value is not None})

    return log_progress(
        message=f"{agent_name} {command} for N={modulus}: {message}",
        status=resolved_status,
        agent=agent_name,
        meta=entry_meta,
        settings=settings,
        dry_run=dry_run,
    )
