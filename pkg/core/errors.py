"""Exception hierarchy for the cyclotomic signature lab."""

from __future__ import annotations

from typing import Any, Dict, Optional

EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_CONTRADICTION = 3


class SignatureLabError(Exception):
    """Base exception; carries a stable error code and the CLI exit code."""

    def __init__(
        self,
        message: str,
        error_code: str = "lab_error",
        exit_code: int = EXIT_INPUT,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        self.details = details
        super().__init__(self.message)


class CompositeP(SignatureLabError):
    """The supplied p is not a prime."""

    def __init__(self, p: int) -> None:
        super().__init__(f"p = {p} is not prime", error_code="composite_p", details={"p": p})


class BadExponent(SignatureLabError):
    """The exponent n violates n >= 1 (n >= 2 when p = 2)."""

    def __init__(self, p: int, n: int) -> None:
        super().__init__(
            f"exponent n = {n} is not allowed for p = {p}",
            error_code="bad_exponent",
            details={"p": p, "n": n},
        )


class BadDegree(SignatureLabError):
    def __init__(self, degree: int, order: int) -> None:
        super().__init__(
            f"degree {degree} does not divide the group order {order}",
            error_code="bad_degree",
            details={"degree": degree, "order": order},
        )


class LengthMismatch(SignatureLabError):
    def __init__(self, expected: int, received: int) -> None:
        super().__init__(
            f"vector length {received} does not match row length {expected}",
            error_code="length_mismatch",
            details={"expected": expected, "received": received},
        )


class ZeroArgument(SignatureLabError):
    def __init__(self, m: int, modulus: int) -> None:
        super().__init__(
            f"sin(pi*{m}/{modulus}) vanishes",
            error_code="zero_argument",
            details={"m": m, "N": modulus},
        )


class RankOutOfRange(SignatureLabError):
    def __init__(self, rank: int, half_degree: int) -> None:
        super().__init__(
            f"rank {rank} is outside 1..{half_degree}",
            error_code="rank_out_of_range",
            details={"rank": rank, "half_degree": half_degree},
        )


class NonRationalCoefficient(SignatureLabError):
    """A period polynomial coefficient did not reduce to a rational integer."""

    def __init__(self, index: int) -> None:
        super().__init__(
            f"coefficient of x^{index} is not a rational integer",
            error_code="non_rational_coefficient",
            exit_code=EXIT_INTERNAL,
            details={"index": index},
        )


class NotSquarefree(SignatureLabError):
    def __init__(self, polynomial: str) -> None:
        super().__init__(
            f"polynomial {polynomial} has a repeated factor",
            error_code="not_squarefree",
            details={"polynomial": polynomial},
        )


class PrecisionExhausted(SignatureLabError):
    def __init__(self, max_precision: int) -> None:
        super().__init__(
            f"root matching did not separate within {max_precision} bits",
            error_code="precision_exhausted",
            exit_code=EXIT_INTERNAL,
            details={"max_precision": max_precision},
        )


class RootMatchingError(SignatureLabError):
    def __init__(self, message: str) -> None:
        super().__init__(message, error_code="root_matching", exit_code=EXIT_INTERNAL)


class VanishesAtRoot(SignatureLabError):
    def __init__(self, polynomial: str) -> None:
        super().__init__(
            f"{polynomial} shares a factor with the minimal polynomial",
            error_code="vanishes_at_root",
            details={"polynomial": polynomial},
        )


class ExpressionSyntaxError(SignatureLabError):
    def __init__(self, message: str, position: int, source: str) -> None:
        self.position = position
        super().__init__(
            f"{message} at position {position}",
            error_code="syntax_error",
            details={"position": position, "source": source},
        )


class ZeroExpression(SignatureLabError):
    def __init__(self, source: str) -> None:
        super().__init__(
            f"expression {source!r} expands to zero",
            error_code="zero_expression",
            details={"source": source},
        )


class ClassDataParseError(SignatureLabError):
    def __init__(self, message: str, line: Optional[int] = None) -> None:
        location = f" (line {line})" if line is not None else ""
        super().__init__(
            f"{message}{location}",
            error_code="parse_error",
            details={"line": line},
        )


class InconsistentParities(SignatureLabError):
    def __init__(self, message: str, p: int, n: int) -> None:
        super().__init__(
            f"p={p}, n={n}: {message}",
            error_code="inconsistent_parities",
            details={"p": p, "n": n},
        )


class Contradiction(SignatureLabError):
    """Class-number data disagrees with the computed ranks once the equivalences are applied."""

    def __init__(self, statement: str, existing: str, derived: str, reason: str) -> None:
        super().__init__(
            f"statement ({statement}) is '{existing}' but {reason} forces '{derived}'",
            error_code="contradiction",
            exit_code=EXIT_CONTRADICTION,
            details={"statement": statement, "existing": existing, "derived": derived},
        )


class ConfigError(SignatureLabError):
    def __init__(self, message: str) -> None:
        super().__init__(message, error_code="config_error")


class MissingDegree(SignatureLabError):
    def __init__(self) -> None:
        super().__init__("unit expressions need a subfield degree (-d)", error_code="missing_degree")


class PeriodNotPrimitive(SignatureLabError):
    """The degree-d period of a prime-power modulus has a smaller conductor and degenerates."""

    def __init__(self, degree: int, modulus: int) -> None:
        super().__init__(
            f"the degree-{degree} period mod {modulus} does not generate its subfield; "
            f"use the smaller prime-power modulus",
            error_code="period_not_primitive",
            details={"degree": degree, "N": modulus},
        )
