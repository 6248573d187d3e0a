"""Shared constants: statement registry, class-data layout and numeric defaults."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple


@dataclass(frozen=True)
class Statement:
    key: str
    label: str
    group: str


# group "X": the class-number statements and the circular signature statement,
# "A": unit-index statements, "B": signature statements for all units.
STATEMENTS: Dict[str, Statement] = {
    "1": Statement("1", "h(K) is odd", "X"),
    "2": Statement("2", "relative class number h^-(K) is odd", "X"),
    "3": Statement("3", "plus part of the 2-class group of K is trivial", "X"),
    "4": Statement("4", "strict class number of K+ is odd", "X"),
    "a1": Statement("a1", "h(K+) is odd", "A"),
    "a2": Statement("a2", "[E:C] is odd", "A"),
    "a3": Statement("a3", "C meets E^2 exactly in C^2", "A"),
    "b1": Statement("b1", "class number and strict class number of K+ agree", "B"),
    "b2": Statement("b2", "every totally positive unit is a square (E+ = E^2)", "B"),
    "b3": Statement("b3", "units of K+ realise every signature", "B"),
    "6": Statement("6", "circular units realise every signature (C+ = C^2)", "X"),
}

STATEMENT_ORDER: Tuple[str, ...] = tuple(STATEMENTS)

CLASS_DATA_HEADER: Tuple[str, ...] = ("p", "n", "h_K", "h_minus", "h_Kplus", "h_strict_Kplus", "source")

DEFAULT_INITIAL_PRECISION_BITS = 64
DEFAULT_MAX_PRECISION_BITS = 16384

DEFAULT_APPROXIMATION_DIGITS = 20

UNIT_VARIABLE = "a"

REPORT_FORMATS: Tuple[str, ...] = ("text", "json")
