from .config import Settings, DEFAULT_SETTINGS
from .errors import *
from .presentation import FTypePresentation, parse, validate, decompose
from .represent import Representer
from .reports import analyze
from .words import Alphabet, Word, parse_word

__all__ = (
    'Settings',
    'DEFAULT_SETTINGS',
    'FTypePresentation',
    'parse',
    'validate',
    'decompose',
    'Representer',
    'analyze',
    'Alphabet',
    'Word',
    'parse_word',
)
