from .machinery import Encoder, SCHEMA, document, encode
from .analysis import REPORTED, StatedFact, STATED_FACTS, AnalysisReport, analyze

__all__ = (
    'Encoder',
    'SCHEMA',
    'document',
    'encode',

    'REPORTED',
    'StatedFact',
    'STATED_FACTS',
    'AnalysisReport',
    'analyze',
)
