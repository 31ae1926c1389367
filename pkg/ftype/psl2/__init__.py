from .matrix import \
    ProjectiveMatrix, \
    IDENTITY, \
    mul, \
    inv, \
    power, \
    trace, \
    commutator_trace, \
    irreducibility_margin, \
    is_irreducible_pair, \
    order_margins, \
    has_order, \
    elliptic_trace
from .laurent import \
    LaurentPolynomial, \
    LaurentMatrix, \
    laurent_add, \
    laurent_mul, \
    laurent_matrix_mul, \
    evaluate, \
    solve_on_target

__all__ = (
    'ProjectiveMatrix',
    'IDENTITY',
    'mul',
    'inv',
    'power',
    'trace',
    'commutator_trace',
    'irreducibility_margin',
    'is_irreducible_pair',
    'order_margins',
    'has_order',
    'elliptic_trace',

    'LaurentPolynomial',
    'LaurentMatrix',
    'laurent_add',
    'laurent_mul',
    'laurent_matrix_mul',
    'evaluate',
    'solve_on_target',
)
