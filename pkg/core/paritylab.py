"""Status of the parity statements from computed ranks and class-number data.

The statements fall into three equivalence classes::

    X = (1) = (2) = (3) = (4) = (6)
    A = (a1) = (a2) = (a3)
    B = (b1) = (b2) = (b3)

tied together by X <=> (A and B). Known values are propagated to a fixpoint;
a derived value that disagrees with a recorded one raises Contradiction.
"""

from __future__ import annotations

import csv
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import ValidationError

from .circsig import indices_from_rank
from .constants import CLASS_DATA_HEADER, STATEMENT_ORDER, STATEMENTS
from .errors import ClassDataParseError, Contradiction, InconsistentParities, RankOutOfRange
from .report_builder import emit_report
from .resgroup import Modulus
from .schemas import (
    ClassParityRecord,
    IndexInfo,
    ModulusInfo,
    Parity,
    Prop1Report,
    Provenance,
    RankInfo,
    StatementStatus,
    Status,
)

logger = logging.getLogger(__name__)

__all__ = [
    "GROUPS",
    "check_consistency",
    "close_report",
    "emit_report",
    "evaluate_prop1",
    "find_record",
    "load_class_data",
]

_PRIORITY = {Provenance.INFERRED: 1, Provenance.FROM_DATA: 2, Provenance.COMPUTED: 3}


def _group_members(group: str) -> Tuple[str, ...]:
    return tuple(key for key in STATEMENT_ORDER if STATEMENTS[key].group == group)


GROUPS: Dict[str, Tuple[str, ...]] = {name: _group_members(name) for name in ("X", "A", "B")}


def check_consistency(record: ClassParityRecord) -> None:
    """Enforce |C(K)| = |C^-(K)| * |C(K+)| and h(K+) | h+(K+) on parities."""
    odd, even = Parity.ODD, Parity.EVEN
    if record.h_K == odd and (record.h_minus == even or record.h_Kplus == even):
        raise InconsistentParities("h_K is odd but one of its factors is even", record.p, record.n)
    if record.h_K == even and record.h_minus == odd and record.h_Kplus == odd:
        raise InconsistentParities("h_K is even but both of its factors are odd", record.p, record.n)
    if record.h_Kplus == even and record.h_strict_Kplus == odd:
        raise InconsistentParities("h_Kplus is even but the strict class number is odd", record.p, record.n)


def load_class_data(path: Path) -> List[ClassParityRecord]:
    path = Path(path)
    if not path.exists():
        raise ClassDataParseError(f"class data file not found: {path}")
    records: List[ClassParityRecord] = []
    seen: Dict[Tuple[int, int], int] = {}
    with path.open(encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or tuple(column.strip() for column in header) != CLASS_DATA_HEADER:
            raise ClassDataParseError(f"expected header {','.join(CLASS_DATA_HEADER)}", line=1)
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(CLASS_DATA_HEADER):
                raise ClassDataParseError(f"expected {len(CLASS_DATA_HEADER)} fields, got {len(row)}", line=line_no)
            try:
                record = ClassParityRecord(**dict(zip(CLASS_DATA_HEADER, (cell.strip() for cell in row))))
            except ValidationError as exc:
                first = exc.errors()[0]
                field = ".".join(str(part) for part in first.get("loc", ()))
                raise ClassDataParseError(f"invalid {field}: {first.get('msg')}", line=line_no) from exc
            key = (record.p, record.n)
            if key in seen:
                raise ClassDataParseError(f"duplicate row for p={record.p}, n={record.n} (first on line {seen[key]})", line=line_no)
            check_consistency(record)
            seen[key] = line_no
            records.append(record)
    logger.debug(f"Loaded {len(records)} class parity records from {path}")
    return records


def find_record(records: Iterable[ClassParityRecord], mod: Modulus) -> Optional[ClassParityRecord]:
    for record in records:
        if record.p == mod.p and record.n == mod.n:
            return record
    return None


class _Closure:
    def __init__(self) -> None:
        self.values: Dict[str, Tuple[Status, Provenance]] = {}

    def assign(self, key: str, status: Status, provenance: Provenance, reason: str) -> bool:
        """Record a value; returns True when anything changed."""
        if status == Status.UNKNOWN:
            return False
        current = self.values.get(key)
        if current is None:
            self.values[key] = (status, provenance)
            return True
        existing, existing_provenance = current
        if existing != status:
            raise Contradiction(key, existing.value, status.value, reason)
        if _PRIORITY[provenance] > _PRIORITY[existing_provenance]:
            self.values[key] = (status, provenance)
            return True
        return False

    def group_status(self, group: str) -> Status:
        for key in GROUPS[group]:
            if key in self.values:
                return self.values[key][0]
        return Status.UNKNOWN

    def _fill(self, group: str, status: Status, reason: str) -> bool:
        changed = False
        for key in GROUPS[group]:
            changed |= self.assign(key, status, Provenance.INFERRED, reason)
        return changed

    def run(self) -> None:
        changed = True
        while changed:
            changed = False
            for group, members in GROUPS.items():
                for key in members:
                    if key in self.values:
                        changed |= self._fill(group, self.values[key][0], f"({key}) is equivalent to the rest of its group")
            x, a, b = (self.group_status(name) for name in ("X", "A", "B"))
            if x == Status.HOLDS:
                changed |= self._fill("A", Status.HOLDS, "(1) implies (a1)")
                changed |= self._fill("B", Status.HOLDS, "(1) implies (b1)")
            if a == Status.HOLDS and b == Status.HOLDS:
                changed |= self._fill("X", Status.HOLDS, "(a1) and (b1) together imply (1)")
            if a == Status.FAILS or b == Status.FAILS:
                changed |= self._fill("X", Status.FAILS, "(1) needs both (a1) and (b1)")
            if x == Status.FAILS and a == Status.HOLDS:
                changed |= self._fill("B", Status.FAILS, "(1) fails while (a1) holds")
            if x == Status.FAILS and b == Status.HOLDS:
                changed |= self._fill("A", Status.FAILS, "(1) fails while (b1) holds")

    def statements(self) -> Dict[str, StatementStatus]:
        out = {}
        for key in STATEMENT_ORDER:
            if key in self.values:
                status, provenance = self.values[key]
                out[key] = StatementStatus(id=key, status=status, provenance=provenance)
            else:
                out[key] = StatementStatus(id=key)
        return out


def _parity_status(parity: Parity) -> Status:
    if parity == Parity.ODD:
        return Status.HOLDS
    if parity == Parity.EVEN:
        return Status.FAILS
    return Status.UNKNOWN


def _seed_from_data(closure: _Closure, data: ClassParityRecord) -> None:
    reason = f"class data ({data.source or 'unnamed source'})"
    closure.assign("1", _parity_status(data.h_K), Provenance.FROM_DATA, reason)
    closure.assign("2", _parity_status(data.h_minus), Provenance.FROM_DATA, reason)
    closure.assign("4", _parity_status(data.h_strict_Kplus), Provenance.FROM_DATA, reason)
    closure.assign("a1", _parity_status(data.h_Kplus), Provenance.FROM_DATA, reason)
    # h+(K+) = h(K+) * [E+:E^2]; with h(K+) odd the strict number is odd iff E+ = E^2
    if data.h_Kplus == Parity.ODD and data.h_strict_Kplus != Parity.UNKNOWN:
        closure.assign("b1", _parity_status(data.h_strict_Kplus), Provenance.FROM_DATA, reason)


def evaluate_prop1(
    mod: Modulus,
    circular_rank: int,
    augmented_rank: Optional[int] = None,
    data: Optional[ClassParityRecord] = None,
) -> Prop1Report:
    indices = indices_from_rank(mod, circular_rank)
    if augmented_rank is not None and not circular_rank <= augmented_rank <= mod.half_degree:
        raise RankOutOfRange(augmented_rank, mod.half_degree)
    if data is not None:
        if (data.p, data.n) != (mod.p, mod.n):
            raise InconsistentParities(f"record does not belong to N = {mod.label}", data.p, data.n)
        check_consistency(data)

    closure = _Closure()
    full = Status.HOLDS if circular_rank == mod.half_degree else Status.FAILS
    closure.assign("6", full, Provenance.COMPUTED, f"circular signature rank {circular_rank}")
    # a deficient augmented rank only says a subgroup of E misses some signatures
    if augmented_rank is not None and augmented_rank == mod.half_degree:
        closure.assign("b3", Status.HOLDS, Provenance.COMPUTED, f"augmented signature rank {augmented_rank}")
    if data is not None:
        _seed_from_data(closure, data)
    closure.run()

    report = Prop1Report(
        modulus=ModulusInfo(p=mod.p, n=mod.n, N=mod.N, half_degree=mod.half_degree),
        ranks=RankInfo(circular=circular_rank, augmented=augmented_rank, half_degree=mod.half_degree),
        indices=IndexInfo(c_to_cplus=indices.c_to_cplus, cplus_to_csq=indices.cplus_to_csq),
        statements=closure.statements(),
        data_source=data.source if data is not None else None,
    )
    logger.debug(f"Parity statements for N={mod.N}: " + ", ".join(
        f"{key}={entry.status.value}" for key, entry in report.statements.items()
    ))
    return report


def close_report(report: Prop1Report) -> Prop1Report:
    """Re-run the inference on an existing report; a closed report comes back unchanged."""
    closure = _Closure()
    for key, entry in report.statements.items():
        if entry.status != Status.UNKNOWN and entry.provenance is not None:
            closure.assign(key, entry.status, entry.provenance, "recorded value")
    closure.run()
    return report.model_copy(update={"statements": closure.statements()})
