from .base import FTypeError
from .input import \
    InputError, \
    PresentationSyntaxError, \
    WordSyntaxError, \
    UnknownGeneratorError, \
    AlphabetError, \
    AlphabetMismatchError, \
    FactorError, \
    EmptyWordError, \
    InvalidPresentationError, \
    GeneratorOmittedError, \
    PreconditionError, \
    FiniteOrderError, \
    NotSpecialError, \
    RelatorInAmalgamError, \
    RelatorNotAlternatingError, \
    CiInUError, \
    DiInVError, \
    DiInV1Error
from .numeric import \
    NumericError, \
    SingularMatrixError, \
    EvaluationError, \
    DegeneratePolynomialError, \
    NonDiagonalBoundaryError, \
    DegenerateBoundaryError, \
    RetriesExhaustedError, \
    ExitCode

__all__ = (
    'FTypeError',

    'InputError',
    'PresentationSyntaxError',
    'WordSyntaxError',
    'UnknownGeneratorError',
    'AlphabetError',
    'AlphabetMismatchError',
    'FactorError',
    'EmptyWordError',
    'InvalidPresentationError',
    'GeneratorOmittedError',
    'PreconditionError',
    'FiniteOrderError',
    'NotSpecialError',
    'RelatorInAmalgamError',
    'RelatorNotAlternatingError',
    'CiInUError',
    'DiInVError',
    'DiInV1Error',

    'NumericError',
    'SingularMatrixError',
    'EvaluationError',
    'DegeneratePolynomialError',
    'NonDiagonalBoundaryError',
    'DegenerateBoundaryError',
    'RetriesExhaustedError',
    'ExitCode',
)
