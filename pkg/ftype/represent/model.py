from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Optional, Union

import numpy as np

from ..errors import FactorError
from ..presentation import FTypePresentation
from ..psl2 import IDENTITY, LaurentPolynomial, ProjectiveMatrix, mul, power
from ..words import Alphabet, Word


Seed = Union[int, np.random.SeedSequence]


class FaithfulnessClass(str, Enum):
    # neither U nor V is a proper power
    FAITHFUL = 'Faithful'
    # faithful on G1 and G2 only
    ESSENTIAL_ONLY = 'EssentialOnly'
    # representation of a one-relator quotient G / N(R^m)
    QUOTIENT = 'Quotient'


class BoundaryFamily(str, Enum):
    DIAGONAL = 'Diagonal'
    PARABOLIC = 'Parabolic'


def _image(assignment: dict[int, ProjectiveMatrix], w: Word) -> ProjectiveMatrix:
    result = IDENTITY
    for g, k in w.syllables:
        result = mul(result, power(assignment[g], k))
    return result


def _conditioned_image(assignment: dict[int, ProjectiveMatrix], w: Word) -> tuple[ProjectiveMatrix, float]:
    """The image of w and max |prefix| |suffix| / 2 over its splittings, which is 1 for short words near ±I.

    Rounding errors in the product grow with this number rather than with the
    size of the result, so a conjugate x R x^-1 of a relator is only as exact
    as |x|^2 allows.
    """
    factors = [power(assignment[g], k) for g, k in w.syllables]
    prefixes = [IDENTITY]
    for m in factors:
        prefixes.append(mul(prefixes[-1], m))
    suffixes = [IDENTITY]
    for m in reversed(factors):
        suffixes.append(mul(m, suffixes[-1]))
    conditioning = max(
        np.linalg.norm(prefix.entries) * np.linalg.norm(suffix.entries)
        for prefix, suffix in zip(prefixes, reversed(suffixes))
    )
    return prefixes[-1], float(conditioning) / 2


@dataclass(frozen=True)
class FactorRepresentation:
    """Images of the generators of one free-product factor."""

    alphabet: Alphabet
    generators: tuple[int, ...]
    assignment: dict[int, ProjectiveMatrix]
    # U^-1 or V once the factor has been aligned
    boundary: Optional[Word] = None

    def image(self, w: Word) -> ProjectiveMatrix:
        outside = w.generators.difference(self.generators)
        if outside:
            raise FactorError(f"{w} uses generators outside the factor {self.alphabet.describe(self.generators)}")
        return _image(self.assignment, w)

    def conjugated(self, g: ProjectiveMatrix) -> 'FactorRepresentation':
        """x -> g x g^-1 on every generator."""
        return replace(self, assignment={i: m.conjugate_by(g) for i, m in self.assignment.items()})

    def with_generator(self, generator: int, m: ProjectiveMatrix) -> 'FactorRepresentation':
        return replace(self, assignment={**self.assignment, generator: m})

    def with_boundary(self, boundary: Word) -> 'FactorRepresentation':
        return replace(self, boundary=boundary)


@dataclass(frozen=True)
class Alignment:
    """Both factors conjugated so that rho_1(U^-1) = rho_2(V) = diag(s, 1/s)."""

    left: FactorRepresentation
    right: FactorRepresentation
    s: complex
    # twist parameter used to match the traces, None for a single-generator right factor
    twist: Optional[complex]
    boundary_residual: float
    margins: dict[str, float]


@dataclass
class Certificate:
    """Residuals and margins backing a constructed representation."""

    relation_residuals: dict[str, float] = field(default_factory=dict)
    pair_margins: dict[str, float] = field(default_factory=dict)
    order_margins: dict[str, float] = field(default_factory=dict)
    boundary_residual: float = 0.0
    elementary: bool = False
    elementarity_samples: int = 0
    passed: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max(self.relation_residuals.values(), default=0.0)

    @property
    def min_margin(self) -> float:
        return min((*self.pair_margins.values(), *self.order_margins.values()), default=float('inf'))


@dataclass
class Representation:
    """rho: G -> PSL(2,C) given on the generators."""

    presentation: FTypePresentation
    left: FactorRepresentation
    right: FactorRepresentation
    seed: Seed
    faithfulness: FaithfulnessClass
    certificate: Optional[Certificate] = None
    t0: Optional[complex] = None
    notes: list[str] = field(default_factory=list)

    @property
    def assignment(self) -> dict[int, ProjectiveMatrix]:
        return {**self.left.assignment, **self.right.assignment}

    def image(self, w: Word) -> ProjectiveMatrix:
        return _image(self.assignment, w)

    def conditioned_image(self, w: Word) -> tuple[ProjectiveMatrix, float]:
        return _conditioned_image(self.assignment, w)

    def to_json(self) -> dict[str, Any]:
        alphabet = self.presentation.alphabet
        certificate = self.certificate or Certificate()
        return {
            'class': self.faithfulness.value,
            'matrices': {alphabet.name(g): m.to_json() for g, m in sorted(self.assignment.items())},
            'residuals': {**certificate.relation_residuals, 'boundary': certificate.boundary_residual},
            'margins': {**certificate.pair_margins, **certificate.order_margins},
            'elementary': certificate.elementary,
            'passed': certificate.passed,
            'seed': _seed_json(self.seed),
            't0': None if self.t0 is None else [self.t0.real, self.t0.imag],
            'notes': [*self.notes, *certificate.notes],
        }


def _seed_json(seed: Seed) -> Any:
    if isinstance(seed, np.random.SeedSequence):
        return {'entropy': seed.entropy, 'spawn_key': list(seed.spawn_key)}
    return seed


@dataclass
class QuotientCertificate:
    """rho(R) has exact order m in the representation of H = G / N(R^m)."""

    representation: Representation
    relator: Word
    m: int
    t0: complex
    trace: complex
    trace_residual: float
    order_check: bool
    # distance of rho(R)^m from ±I
    order_residual: float
    # smallest distance of rho(R)^j from ±I, 1 <= j < m
    power_margin: float
    polynomial: LaurentPolynomial
    pairs: list[tuple[Word, Word]]
    roots: int
    route: str = 'special'

    @property
    def k(self) -> int:
        return len(self.pairs)

    def to_json(self) -> dict[str, Any]:
        f = self.polynomial
        return {
            **self.representation.to_json(),
            'relator': str(self.relator),
            'm': self.m,
            'route': self.route,
            'pairs': [[str(c), str(d)] for c, d in self.pairs],
            'trace': [self.trace.real, self.trace.imag],
            'trace_residual': self.trace_residual,
            'order_check': self.order_check,
            'order_residual': self.order_residual,
            'power_margin': self.power_margin,
            'polynomial': {
                'degree': [f.min_degree, f.max_degree],
                'extreme_coefficients': [abs(f.coefficient(f.min_degree)), abs(f.coefficient(f.max_degree))],
                'roots': self.roots,
            },
        }


@dataclass
class CrossValidation:
    """Outcome of checking sampled words against rho."""

    checked: int = 0
    mismatches: list[Word] = field(default_factory=list)
    # too close to the rounding noise of their product to call
    undecided: list[Word] = field(default_factory=list)

    @property
    def agreed(self) -> int:
        return self.checked - len(self.mismatches) - len(self.undecided)
