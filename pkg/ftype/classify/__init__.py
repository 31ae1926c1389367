from .invariants import \
    Rational, \
    euler_characteristic, \
    riemann_hurwitz, \
    Deficiency, \
    deficiency, \
    QuotientConditions, \
    quotient_conditions, \
    TorsionReport, \
    torsion, \
    freiheitssatz
from .tits import \
    TitsPattern, \
    TitsClass, \
    tits_classify, \
    sq_universal, \
    factor_contains_free_rank2
from .hyperbolicity import \
    ProperPower, \
    TwoInvolutions, \
    Obstruction, \
    obstruction, \
    HyperbolicityVerdict, \
    hyperbolicity, \
    MalnormalityReport, \
    malnormal_amalgam

__all__ = (
    'Rational',
    'euler_characteristic',
    'riemann_hurwitz',
    'Deficiency',
    'deficiency',
    'QuotientConditions',
    'quotient_conditions',
    'TorsionReport',
    'torsion',
    'freiheitssatz',

    'TitsPattern',
    'TitsClass',
    'tits_classify',
    'sq_universal',
    'factor_contains_free_rank2',

    'ProperPower',
    'TwoInvolutions',
    'Obstruction',
    'obstruction',
    'HyperbolicityVerdict',
    'hyperbolicity',
    'MalnormalityReport',
    'malnormal_amalgam',
)
