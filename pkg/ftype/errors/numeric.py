from enum import IntEnum

from .base import FTypeError
from .input import InputError, PresentationSyntaxError, WordSyntaxError, UnknownGeneratorError, AlphabetError, \
    FactorError


class NumericError(FTypeError):
    """Base class for failures of the floating point constructions."""

    def __init__(self, code: 'ExitCode', message: str) -> None:
        self.code = code
        self.message = message
        super().__init__(message)


class SingularMatrixError(NumericError):
    """A matrix has (numerically) zero determinant."""

    def __init__(self, message: str) -> None:
        super().__init__(ExitCode.NUMERIC, message)


class EvaluationError(NumericError):
    """A Laurent polynomial with negative exponents was evaluated at t = 0."""

    def __init__(self, message: str) -> None:
        super().__init__(ExitCode.NUMERIC, message)


class DegeneratePolynomialError(NumericError):
    """A trace polynomial is constant, so the pair is reducible."""

    def __init__(self, message: str) -> None:
        super().__init__(ExitCode.NUMERIC, message)


class NonDiagonalBoundaryError(NumericError):
    """The boundary matrix is not in the requested family."""

    def __init__(self, message: str) -> None:
        super().__init__(ExitCode.NUMERIC, message)


class DegenerateBoundaryError(NumericError):
    """The boundary image is parabolic or ±I and cannot be diagonalized."""

    def __init__(self, message: str) -> None:
        super().__init__(ExitCode.NUMERIC, message)


class RetriesExhaustedError(NumericError):
    """Verification failed on every reseeded draw."""

    def __init__(self, what: str, attempts: int) -> None:
        self.attempts = attempts
        super().__init__(ExitCode.NUMERIC, f"{what}: verification failed after {attempts} attempts")


class ExitCode(IntEnum):
    OK = 0
    VALIDATION = 1
    NUMERIC = 2
    PARSE = 3

    @classmethod
    def of(cls, exception: BaseException) -> 'ExitCode':
        if isinstance(exception, NumericError):
            return exception.code
        if isinstance(exception, (PresentationSyntaxError, WordSyntaxError, UnknownGeneratorError,
                                  AlphabetError, FactorError)):
            return cls.PARSE
        if isinstance(exception, InputError):
            return cls.VALIDATION
        raise exception
