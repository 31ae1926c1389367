from .model import \
    FTypePresentation, \
    Severity, \
    Finding, \
    FreeProductSplit, \
    ValidationReport, \
    AmalgamDecomposition
from .parser import parse, format_presentation
from .checks import validate, require_valid, decompose, is_special

__all__ = (
    'FTypePresentation',
    'Severity',
    'Finding',
    'FreeProductSplit',
    'ValidationReport',
    'AmalgamDecomposition',

    'parse',
    'format_presentation',

    'validate',
    'require_valid',
    'decompose',
    'is_special',
)
