from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Sequence

from ..presentation import FTypePresentation, require_valid
from ..words import Alphabet, Word


class TitsPattern(str, Enum):
    # <a, b | a^2 b^2 = 1>
    H1 = 'H1'
    # <a, b, c | a^2 = b^2 = a b c^2 = 1>
    H2 = 'H2'
    # <a, b, c, d | a^2 = b^2 = c^2 = d^2 = a b c d = 1>
    H3 = 'H3'


@dataclass(frozen=True)
class TitsClass:
    """Solvable with one of the three exceptional patterns, or containing a free subgroup of rank 2."""

    pattern: Optional[TitsPattern] = None

    @property
    def solvable(self) -> bool:
        return self.pattern is not None

    @property
    def contains_free_rank2(self) -> bool:
        return self.pattern is None

    def __str__(self) -> str:
        return f"Solvable({self.pattern.value})" if self.solvable else 'ContainsFreeRank2'

    def to_json(self) -> dict[str, Any]:
        return {'class': str(self), 'pattern': self.pattern, 'solvable': self.solvable}


def _square_of_infinite_generator(w: Word) -> bool:
    return len(w) == 1 and abs(w.syllables[0].power) == 2 and not w.alphabet.is_finite(w.syllables[0].generator)


def _involution_product(w: Word, generators: Sequence[int]) -> bool:
    """w = x y for the two order-2 generators of a Z2 * Z2 factor."""
    alphabet = w.alphabet
    return (
        len(generators) == 2
        and all(alphabet.order(g) == 2 for g in generators)
        and len(w) == 2
        and all(s.power == 1 for s in w.syllables)
    )


def _matches_h2(one: Word, one_generators: Sequence[int], two: Word, two_generators: Sequence[int]) -> bool:
    return len(one_generators) == 1 and _square_of_infinite_generator(one) and _involution_product(two, two_generators)


def tits_classify(presentation: FTypePresentation) -> TitsClass:
    """Pattern match against the three solvable groups of F-type.

    Matching is up to relabeling generators within a factor, swapping the
    factors and inverting U and V together; anything else contains a free
    subgroup of rank 2.
    """
    require_valid(presentation)
    n = presentation.n
    u, v = presentation.u, presentation.v
    left, right = presentation.left, presentation.right
    if n == 2 and presentation.exponents == (0, 0) and \
            _square_of_infinite_generator(u) and _square_of_infinite_generator(v):
        return TitsClass(TitsPattern.H1)
    if n == 3 and (_matches_h2(u, left, v, right) or _matches_h2(v, right, u, left)):
        return TitsClass(TitsPattern.H2)
    if n == 4 and presentation.p == 2 and _involution_product(u, left) and _involution_product(v, right):
        return TitsClass(TitsPattern.H3)
    return TitsClass()


def sq_universal(presentation: FTypePresentation) -> bool:
    """A non-solvable group of F-type has a finite-index subgroup onto F2, so it is SQ-universal."""
    return tits_classify(presentation).contains_free_rank2


def factor_contains_free_rank2(alphabet: Alphabet, generators: Sequence[int]) -> bool:
    """A free product of cyclics contains F2 unless it is cyclic or Z2 * Z2."""
    if len(generators) <= 1:
        return False
    if len(generators) == 2:
        return any(alphabet.order(g) != 2 for g in generators)
    return True
