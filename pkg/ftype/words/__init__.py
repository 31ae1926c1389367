from .alphabet import Alphabet, GeneratorRef
from .word import \
    Syllable, \
    Word, \
    Order, \
    INFINITE, \
    identity, \
    generator, \
    normalize, \
    multiply, \
    invert, \
    power, \
    cyclically_reduce, \
    is_cyclically_reduced, \
    power_exponent, \
    order_of, \
    parse_word, \
    format_word
from .decisions import \
    Power, \
    InvolutionPair, \
    is_proper_power, \
    is_involution, \
    are_conjugate, \
    is_product_of_two_involutions

__all__ = (
    'Alphabet',
    'GeneratorRef',

    'Syllable',
    'Word',
    'Order',
    'INFINITE',
    'identity',
    'generator',
    'normalize',
    'multiply',
    'invert',
    'power',
    'cyclically_reduce',
    'is_cyclically_reduced',
    'power_exponent',
    'order_of',
    'parse_word',
    'format_word',

    'Power',
    'InvolutionPair',
    'is_proper_power',
    'is_involution',
    'are_conjugate',
    'is_product_of_two_involutions',
)
