"""
Correlation, operator and construction related exceptions
"""
from typing import Sequence, Tuple


class CorrelationException(Exception):

    def __repr__(self) -> str:
        return self.args[0] if len(self.args) > 0 else "Unexpected error"

    def __str__(self) -> str:
        return repr(self)


class ShapeMismatch(CorrelationException):

    def __init__(self, expected: Tuple, received: Tuple) -> None:
        super().__init__(f"Shape mismatch: expected {tuple(expected)}, received {tuple(received)}")


class ScenarioMismatch(CorrelationException):

    def __init__(self, n_a: int, n_b: int) -> None:
        super().__init__(f"Operation needs n_a == n_b, received n_a={n_a} and n_b={n_b}")


class NegativeEntry(CorrelationException):

    def __init__(self, value: float, tol: float) -> None:
        super().__init__(f"Entry {value!r} is below the clamping tolerance -{tol!r}")


class WeightSumError(CorrelationException):

    def __init__(self, total: object) -> None:
        super().__init__(f"Weights must be nonnegative and sum to 1, received sum {total}")


class DimensionCapExceeded(CorrelationException):

    def __init__(self, dimension: int, cap: int, factor: int = None) -> None:
        message = f"Dimension {dimension} exceeds the cap {cap}"
        if factor is not None:
            message += f" (blow-up factor {factor})"
        super().__init__(message)


class VertexCapExceeded(CorrelationException):

    def __init__(self, count: int, cap: int) -> None:
        super().__init__(f"{count} deterministic vertices exceed the cap {cap}")


class NotUnitNorm(CorrelationException):

    def __init__(self, norm: float) -> None:
        super().__init__(f"State must be a unit vector, received norm {norm!r}")


class ZeroVector(CorrelationException):

    def __init__(self) -> None:
        super().__init__("Zero vector has no Schmidt decomposition")


class NotMaximallyEntangled(CorrelationException):

    def __init__(self, coefficients: Sequence[float]) -> None:
        rounded = [round(float(c), 12) for c in coefficients]
        super().__init__(f"State is not maximally entangled, Schmidt coefficients {rounded}")


class RankSumMismatch(CorrelationException):

    def __init__(self, ranks: Sequence[int], d: int) -> None:
        super().__init__(f"Ranks {list(ranks)} must sum to the dimension {d}")


class ProjectionRequired(CorrelationException):

    def __init__(self, operation: str) -> None:
        super().__init__(f"{operation} requires projection-valued measures")


class InfeasibleDenominator(CorrelationException):

    def __init__(self, max_den: int, needed: int) -> None:
        super().__init__(f"Denominator bound {max_den} is too small, a denominator of {needed} is needed")


class IrrationalSpectrum(CorrelationException):

    def __init__(self, value: float, max_den: int) -> None:
        super().__init__(f"Eigenvalue {value!r} is not within 1e-9 of a rational with denominator <= {max_den}")


class NonCommutingFamily(CorrelationException):

    def __init__(self, norm: float) -> None:
        super().__init__(f"Measure elements do not commute, worst commutator norm {norm!r}")


class SignallingCorrelation(CorrelationException):

    def __init__(self, defect: float, tol: float) -> None:
        super().__init__(f"Correlation is signalling, defect {defect!r} exceeds tolerance {tol!r}")


class MalformedInput(CorrelationException):

    def __init__(self, reason: str, line: int = None, column: int = None) -> None:
        if line is not None:
            reason = f"{reason} (line {line}, column {column})"
        super().__init__(f"Malformed input: {reason}")


class NonLocalCorrelation(CorrelationException):

    def __init__(self, status: str) -> None:
        super().__init__(f"Correlation has no certified local decomposition, membership verdict {status}")


class ComplexProbability(CorrelationException):

    def __init__(self, imaginary: float, tol: float) -> None:
        super().__init__(f"Trace has imaginary part {imaginary!r} above {tol!r}, operators are not Hermitian")
