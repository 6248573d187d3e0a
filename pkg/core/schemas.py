"""Pydantic v2 models for class-parity data and run reports."""

from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"
    UNKNOWN = "unknown"


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


class Provenance(str, Enum):
    COMPUTED = "computed"
    FROM_DATA = "from-data"
    INFERRED = "inferred"


class ClassParityRecord(BaseModel):
    """Parities of |C(K)|, |C^-(K)|, |C(K+)| and the strict class number of K+."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2)
    n: int = Field(1, ge=1)
    h_K: Parity = Parity.UNKNOWN
    h_minus: Parity = Parity.UNKNOWN
    h_Kplus: Parity = Parity.UNKNOWN
    h_strict_Kplus: Parity = Parity.UNKNOWN
    source: str = ""

    @field_validator("h_K", "h_minus", "h_Kplus", "h_strict_Kplus", mode="before")
    @classmethod
    def normalise_parity(cls, v):
        if isinstance(v, str):
            v = v.strip().lower()
            return v or Parity.UNKNOWN.value
        return v

    @field_validator("source", mode="before")
    @classmethod
    def strip_source(cls, v):
        if v is None:
            return ""
        return v.strip() if isinstance(v, str) else v


class ModulusInfo(BaseModel):
    p: int
    n: int
    N: int
    half_degree: int


class IndexInfo(BaseModel):
    """Exponents e with [C:C+] = 2^c_to_cplus and [C+:C^2] = 2^cplus_to_csq."""

    c_to_cplus: int
    cplus_to_csq: int


class RankInfo(BaseModel):
    circular: int
    augmented: Optional[int] = None
    half_degree: int


class StatementStatus(BaseModel):
    id: str
    status: Status = Status.UNKNOWN
    provenance: Optional[Provenance] = None


class Prop1Report(BaseModel):
    modulus: ModulusInfo
    ranks: RankInfo
    indices: IndexInfo
    statements: Dict[str, StatementStatus]
    data_source: Optional[str] = None


class SigRankReport(BaseModel):
    modulus: ModulusInfo
    rank: int
    indices: IndexInfo
    deficiency: int
    full_rank: bool
    matrix_path: Optional[str] = None


class PeriodsReport(BaseModel):
    modulus: ModulusInfo
    degree: int
    generator: int
    min_poly: str
    min_poly_expression: str
    intervals: List[List[str]]
    approximations: List[str]
    matching: Dict[str, int]


class UnitSignature(BaseModel):
    source: str
    polynomial: str
    root_signs: List[int]
    signature: str


class AugmentReport(BaseModel):
    modulus: ModulusInfo
    degree: int
    circular_rank: int
    augmented_rank: int
    signature_gain: int
    remaining_exponent: int = Field(..., description="half_degree - augmented_rank")
    units: List[UnitSignature]


class OracleReport(BaseModel):
    modulus: ModulusInfo
    compared: int
    mismatches: List[List[int]]
