from dataclasses import dataclass, field
from logging import getLogger
from typing import Any, Optional, Union

from ..presentation import FTypePresentation, require_valid
from ..words import Word, is_product_of_two_involutions, is_proper_power

_logger = getLogger(__name__)


@dataclass(frozen=True)
class ProperPower:
    root: Word
    k: int

    def __str__(self) -> str:
        return f"ProperPower({self.root}, {self.k})"

    def to_json(self) -> dict[str, Any]:
        return {'kind': 'ProperPower', 'root': str(self.root), 'k': self.k}


@dataclass(frozen=True)
class TwoInvolutions:
    x: Word
    y: Word

    def __str__(self) -> str:
        return f"TwoInvolutions({self.x}, {self.y})"

    def to_json(self) -> dict[str, Any]:
        return {'kind': 'TwoInvolutions', 'x': str(self.x), 'y': str(self.y)}


Obstruction = Union[ProperPower, TwoInvolutions]


def obstruction(w: Word) -> Optional[Obstruction]:
    """Witness that w is a proper power or a product of two involutions, else None."""
    found = is_proper_power(w)
    if found is not None:
        return ProperPower(found.root, found.k)
    pair = is_product_of_two_involutions(w)
    if pair is not None:
        return TwoInvolutions(pair.x, pair.y)
    return None


@dataclass(frozen=True)
class HyperbolicityVerdict:
    hyperbolic: bool
    obstruction_u: Optional[Obstruction]
    obstruction_v: Optional[Obstruction]
    notes: tuple[str, ...] = ()


def hyperbolicity(presentation: FTypePresentation) -> HyperbolicityVerdict:
    """G is hyperbolic iff U or V is neither a proper power nor a product of two involutions."""
    require_valid(presentation)
    obstruction_u = obstruction(presentation.u)
    obstruction_v = obstruction(presentation.v)
    hyperbolic = obstruction_u is None or obstruction_v is None
    if hyperbolic:
        notes = (
            "G is hyperbolic",
            "G is hyperbolic if and only if G has a faithful representation in PSL(2,R), so such a representation "
            "exists",
        )
    else:
        notes = (
            "G is not hyperbolic",
            "G has non-positive combinatorial curvature; in particular it satisfies a quadratic isoperimetric "
            "inequality",
            "G has no faithful representation in PSL(2,R)",
        )
    _logger.debug(f"hyperbolic = {hyperbolic}: U {obstruction_u}, V {obstruction_v}")
    return HyperbolicityVerdict(hyperbolic, obstruction_u, obstruction_v, notes)


@dataclass(frozen=True)
class MalnormalityReport:
    criterion_holds: bool
    witnesses: dict[str, Obstruction] = field(default_factory=dict)
    consequences: tuple[str, ...] = ()


def malnormal_amalgam(presentation: FTypePresentation) -> MalnormalityReport:
    """Sufficient criterion for <U> = <V> to be malnormal in G.

    Neither U nor V may be a proper power or conjugate to x y with x, y of
    order 2; a conjugate of such a product is again one, so the involution
    decision covers it.
    """
    require_valid(presentation, allow_omission=True)
    witnesses = {}
    for name, w in (('U', presentation.u), ('V', presentation.v)):
        found = obstruction(w)
        if found is not None:
            witnesses[name] = found
    if witnesses:
        return MalnormalityReport(False, witnesses)
    return MalnormalityReport(True, consequences=(
        "any two-generator subgroup of G is a free product of cyclics",
        "rank(G) >= 3",
    ))
