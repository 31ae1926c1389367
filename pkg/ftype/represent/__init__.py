from .model import \
    Seed, \
    FaithfulnessClass, \
    BoundaryFamily, \
    FactorRepresentation, \
    Alignment, \
    Certificate, \
    Representation, \
    QuotientCertificate, \
    CrossValidation
from .representer import Representer, sample_words, EXTREME, NO_FAITHFUL, SAMPLED_PAIRS

__all__ = (
    'Seed',
    'FaithfulnessClass',
    'BoundaryFamily',
    'FactorRepresentation',
    'Alignment',
    'Certificate',
    'Representation',
    'QuotientCertificate',
    'CrossValidation',

    'Representer',
    'sample_words',
    'EXTREME',
    'NO_FAITHFUL',
    'SAMPLED_PAIRS',
)
