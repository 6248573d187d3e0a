"""Signature agent: runs one lab command, times it and records it via Scribe."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from core.circsig import circular_generators, indices_from_rank, oracle_mismatches, signature_matrix
from core.constants import DEFAULT_APPROXIMATION_DIGITS
from core.errors import EXIT_INTERNAL, Contradiction, MissingDegree, SignatureLabError
from core.gf2mat import append_rows, rank
from core.paritylab import evaluate_prop1, find_record, load_class_data
from core.realalg import PeriodField, build_period_field
from core.report_builder import write_report
from core.resgroup import Modulus, coset_decomposition, group_generator, make_modulus, modulus_label
from core.schemas import (
    AugmentReport,
    IndexInfo,
    ModulusInfo,
    OracleReport,
    PeriodsReport,
    SigRankReport,
    UnitSignature,
)
from core.unitexpr import expr_signature, format_unit_expr, parse_unit_expr, root_signs
from support.scribe_reporter import report_run
from support.settings import LabSettings

logger = logging.getLogger(__name__)

AGENT_NAME = "SignatureAgent"


@dataclass(slots=True)
class RunResult:
    command: str
    modulus: str
    success: bool
    message: str
    report: Optional[BaseModel] = None
    exit_code: int = 0
    error_code: Optional[str] = None
    latency_ms: Optional[float] = None
    meta: Dict[str, Any] = field(default_factory=dict)


@dataclass(slots=True)
class _Outcome:
    report: BaseModel
    message: str
    meta: Dict[str, Any]
    success: bool = True


def _modulus_info(mod: Modulus) -> ModulusInfo:
    return ModulusInfo(p=mod.p, n=mod.n, N=mod.N, half_degree=mod.half_degree)


class SignatureAgent:
    """Coordinates the lab commands; returns results and never prints."""

    def __init__(self, settings: LabSettings, *, journal: bool = True) -> None:
        self.settings = settings
        self.journal = journal and settings.log_runs

    def _period_field(self, mod: Modulus, d: int) -> PeriodField:
        cosets = coset_decomposition(group_generator(mod), d)
        return build_period_field(
            cosets,
            initial_bits=self.settings.initial_precision_bits,
            max_bits=self.settings.max_precision_bits,
        )

    def _execute(self, command: str, p: int, n: int, work: Callable[[Modulus], _Outcome]) -> RunResult:
        label = modulus_label(p, n)
        start = time.perf_counter()
        try:
            outcome = work(make_modulus(p, n))
        except SignatureLabError as exc:
            latency_ms = (time.perf_counter() - start) * 1000
            status = "contradiction" if isinstance(exc, Contradiction) else "error"
            logger.warning(f"{command} for N={label} failed: {exc.error_code}: {exc.message}")
            self._journal(command, label, False, exc.message, latency_ms, status, {"error_code": exc.error_code})
            return RunResult(
                command=command,
                modulus=label,
                success=False,
                message=exc.message,
                exit_code=exc.exit_code,
                error_code=exc.error_code,
                latency_ms=latency_ms,
            )
        latency_ms = (time.perf_counter() - start) * 1000
        self._journal(command, label, outcome.success, outcome.message, latency_ms, None, outcome.meta)
        return RunResult(
            command=command,
            modulus=label,
            success=outcome.success,
            message=outcome.message,
            report=outcome.report,
            exit_code=0 if outcome.success else EXIT_INTERNAL,
            latency_ms=latency_ms,
            meta=outcome.meta,
        )

    def _journal(
        self,
        command: str,
        label: str,
        success: bool,
        message: str,
        latency_ms: float,
        status: Optional[str],
        meta: Dict[str, Any],
    ) -> None:
        if not self.journal:
            return
        report_run(
            command=command,
            modulus=label,
            success=success,
            message=message,
            settings=self.settings,
            latency_ms=latency_ms,
            status=status,
            meta=meta,
            agent_name=AGENT_NAME,
        )

    def sigrank(self, p: int, n: int = 1, *, matrix_out: Optional[Path] = None) -> RunResult:
        def work(mod: Modulus) -> _Outcome:
            matrix = signature_matrix(mod)
            r = rank(matrix)
            indices = indices_from_rank(mod, r)
            if matrix_out is not None:
                write_report(matrix.to_text(), Path(matrix_out))
            report = SigRankReport(
                modulus=_modulus_info(mod),
                rank=r,
                indices=IndexInfo(c_to_cplus=indices.c_to_cplus, cplus_to_csq=indices.cplus_to_csq),
                deficiency=mod.half_degree - r,
                full_rank=r == mod.half_degree,
                matrix_path=str(matrix_out) if matrix_out is not None else None,
            )
            return _Outcome(report, f"rank {r} of {mod.half_degree}", {"rank": r, "half_degree": mod.half_degree})

        return self._execute("sigrank", p, n, work)

    def periods(self, p: int, n: int = 1, *, d: int, digits: int = DEFAULT_APPROXIMATION_DIGITS) -> RunResult:
        def work(mod: Modulus) -> _Outcome:
            pf = self._period_field(mod, d)
            report = PeriodsReport(
                modulus=_modulus_info(mod),
                degree=d,
                generator=pf.cosets.group.generator,
                min_poly=pf.min_poly.to_csv(),
                min_poly_expression=pf.min_poly.to_expression("x"),
                intervals=[[str(interval.lo), str(interval.hi)] for interval in pf.roots],
                approximations=pf.approximate_roots(digits),
                matching={str(j): k for j, k in sorted(pf.matching.items())},
            )
            return _Outcome(report, f"minimal polynomial {pf.min_poly}", {"degree": d, "min_poly": pf.min_poly.to_csv()})

        return self._execute("periods", p, n, work)

    def _augmented(self, mod: Modulus, d: int, expressions: Sequence[str]) -> Tuple[int, int, List[UnitSignature]]:
        units = [parse_unit_expr(text) for text in expressions]
        pf = self._period_field(mod, d)
        matrix = signature_matrix(mod)
        extra = []
        summaries: List[UnitSignature] = []
        for unit in units:
            vector = expr_signature(unit, pf, mod)
            extra.append((unit.source, vector))
            summaries.append(
                UnitSignature(
                    source=unit.source,
                    polynomial=format_unit_expr(unit.poly),
                    root_signs=list(root_signs(unit, pf)),
                    signature=str(vector),
                )
            )
        circular = rank(matrix)
        augmented = rank(append_rows(matrix, extra))
        logger.debug(f"Augmented rank for N={mod.N}: {circular} -> {augmented}")
        return circular, augmented, summaries

    def augment(self, p: int, n: int = 1, *, d: int, expressions: Sequence[str]) -> RunResult:
        def work(mod: Modulus) -> _Outcome:
            circular, augmented, units = self._augmented(mod, d, expressions)
            report = AugmentReport(
                modulus=_modulus_info(mod),
                degree=d,
                circular_rank=circular,
                augmented_rank=augmented,
                signature_gain=augmented - circular,
                remaining_exponent=mod.half_degree - augmented,
                units=units,
            )
            meta = {"degree": d, "rank": circular, "augmented_rank": augmented, "units": len(units)}
            return _Outcome(report, f"augmented rank {augmented} of {mod.half_degree}", meta)

        return self._execute("augment", p, n, work)

    def prop1(
        self,
        p: int,
        n: int = 1,
        *,
        d: Optional[int] = None,
        expressions: Sequence[str] = (),
        class_data: Optional[Path] = None,
    ) -> RunResult:
        def work(mod: Modulus) -> _Outcome:
            if expressions and d is None:
                raise MissingDegree()
            if expressions:
                circular, augmented, _ = self._augmented(mod, d, expressions)
            else:
                circular, augmented = rank(signature_matrix(mod)), None
            record = find_record(load_class_data(class_data), mod) if class_data is not None else None
            report = evaluate_prop1(mod, circular, augmented, record)
            statuses = {key: entry.status.value for key, entry in report.statements.items()}
            meta = {
                "rank": circular,
                "augmented_rank": augmented,
                "class_data": record.source if record else None,
                "statement_6": statuses["6"],
                "statement_1": statuses["1"],
            }
            return _Outcome(report, f"(1) {statuses['1']}, (6) {statuses['6']}", meta)

        return self._execute("prop1", p, n, work)

    def oracle_check(self, p: int, n: int = 1) -> RunResult:
        def work(mod: Modulus) -> _Outcome:
            mismatches = oracle_mismatches(mod)
            compared = len(circular_generators(mod)) * mod.half_degree
            report = OracleReport(
                modulus=_modulus_info(mod),
                compared=compared,
                mismatches=[[a, b] for a, b in mismatches],
            )
            message = f"{len(mismatches)} mismatches in {compared} signs"
            return _Outcome(report, message, {"compared": compared, "mismatches": len(mismatches)}, success=not mismatches)

        return self._execute("oracle-check", p, n, work)