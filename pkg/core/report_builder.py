"""Text and JSON rendering of run reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Callable, Dict, List, Type

from pydantic import BaseModel

from .constants import REPORT_FORMATS, STATEMENTS
from .schemas import (
    AugmentReport,
    IndexInfo,
    ModulusInfo,
    OracleReport,
    PeriodsReport,
    Prop1Report,
    SigRankReport,
)


def emit_report(report: BaseModel, fmt: str = "text") -> str:
    """Deterministic JSON (sorted keys) or markdown-style text for any report model."""
    if fmt not in REPORT_FORMATS:
        raise ValueError(f"unknown report format {fmt!r}; expected one of {', '.join(REPORT_FORMATS)}")
    if fmt == "json":
        return json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False)
    renderer = _TEXT_RENDERERS.get(type(report))
    if renderer is None:
        raise TypeError(f"no text renderer for {type(report).__name__}")
    return "\n".join(renderer(report))


def _modulus_line(modulus: ModulusInfo) -> str:
    return f"- **Modulus:** N = {modulus.N} (p = {modulus.p}, n = {modulus.n}), phi(N)/2 = {modulus.half_degree}"


def _index_line(indices: IndexInfo) -> str:
    return f"- **Indices:** [C:C⁺] = 2^{indices.c_to_cplus}, [C⁺:C²] = 2^{indices.cplus_to_csq}"


def _sigrank_lines(report: SigRankReport) -> List[str]:
    lines = [
        f"# Circular signature rank — N = {report.modulus.N}",
        "",
        _modulus_line(report.modulus),
        f"- **Rank:** {report.rank} of {report.modulus.half_degree}",
        _index_line(report.indices),
        f"- **Full rank:** {'yes' if report.full_rank else f'no (deficiency {report.deficiency})'}",
    ]
    if report.matrix_path:
        lines.append(f"- **Matrix:** {report.matrix_path}")
    return lines


def _periods_lines(report: PeriodsReport) -> List[str]:
    lines = [
        f"# Period subfield of degree {report.degree} — N = {report.modulus.N}",
        "",
        _modulus_line(report.modulus),
        f"- **Generator of (Z/N)^x/±1:** {report.generator}",
        f"- **Minimal polynomial:** {report.min_poly_expression}",
        f"- **Coefficients (constant first):** {report.min_poly}",
        "",
        "| Root | Isolating interval | Approximation | Coset |",
        "| ---- | ------------------ | ------------- | ----- |",
    ]
    coset_for_root = {root: coset for coset, root in report.matching.items()}
    for index, (interval, approx) in enumerate(zip(report.intervals, report.approximations)):
        lo, hi = interval
        lines.append(f"| {index} | [{lo}, {hi}] | {approx} | {coset_for_root.get(index, '?')} |")
    return lines


def _augment_lines(report: AugmentReport) -> List[str]:
    lines = [
        f"# Augmented signature rank — N = {report.modulus.N}, degree {report.degree}",
        "",
        _modulus_line(report.modulus),
        f"- **Circular rank:** {report.circular_rank}",
        f"- **Augmented rank:** {report.augmented_rank} of {report.modulus.half_degree}",
        f"- **Signature gain:** {report.signature_gain}",
        f"- **Remaining exponent:** {report.remaining_exponent}",
        "",
        "| Unit | Polynomial | Root signs | Signature |",
        "| ---- | ---------- | ---------- | --------- |",
    ]
    for unit in report.units:
        signs = " ".join("+" if s > 0 else "-" for s in unit.root_signs)
        lines.append(f"| {unit.source} | {unit.polynomial} | {signs} | `{unit.signature}` |")
    return lines


def _prop1_lines(report: Prop1Report) -> List[str]:
    augmented = report.ranks.augmented if report.ranks.augmented is not None else "n/a"
    lines = [
        f"# Parity statements — N = {report.modulus.N}",
        "",
        _modulus_line(report.modulus),
        f"- **Circular rank:** {report.ranks.circular} of {report.ranks.half_degree}",
        f"- **Augmented rank:** {augmented}",
        _index_line(report.indices),
        f"- **Class data:** {report.data_source or 'none'}",
        "",
        "| Statement | Status | Provenance | Meaning |",
        "| --------- | ------ | ---------- | ------- |",
    ]
    for key, entry in report.statements.items():
        provenance = entry.provenance.value if entry.provenance is not None else "-"
        lines.append(f"| ({key}) | {entry.status.value} | {provenance} | {STATEMENTS[key].label} |")
    return lines


def _oracle_lines(report: OracleReport) -> List[str]:
    lines = [
        f"# Sign oracle check — N = {report.modulus.N}",
        "",
        _modulus_line(report.modulus),
        f"- **Compared:** {report.compared}",
        f"- **Mismatches:** {len(report.mismatches)}",
    ]
    for a, b in report.mismatches[:20]:
        lines.append(f"  - a = {a}, b = {b}")
    return lines


_TEXT_RENDERERS: Dict[Type[BaseModel], Callable] = {
    SigRankReport: _sigrank_lines,
    PeriodsReport: _periods_lines,
    AugmentReport: _augment_lines,
    Prop1Report: _prop1_lines,
    OracleReport: _oracle_lines,
}


def write_report(content: str, report_path: Path) -> None:
    report_path.parent.mkdir(parents=True, exist_ok=True)
    report_path.write_text(content, encoding="utf-8")
