from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
from typing import Iterable, Optional

from ..errors import NotSpecialError, PreconditionError
from ..presentation import FTypePresentation, is_special, require_valid
from ..words import GeneratorRef, is_proper_power

_logger = getLogger(__name__)

# Exact rationals throughout; the name follows the invariants it carries
Rational = Fraction


def _reciprocal(e: int) -> Rational:
    return Rational(1, e) if e else Rational(0)


def euler_characteristic(presentation: FTypePresentation) -> Rational:
    """chi(G) = 2 + sum a_i, a_i = -1 for e_i = 0 and -1 + 1/e_i otherwise."""
    return 2 + sum((-1 + _reciprocal(e) for e in presentation.exponents), Rational(0))


def riemann_hurwitz(chi: Rational, index: int) -> Rational:
    """chi(H) = |G:H| chi(G) for a subgroup H of finite index."""
    if index < 1:
        raise PreconditionError(f"index must be a positive integer, got {index}")
    return index * Rational(chi)


@dataclass(frozen=True)
class Deficiency:
    index: int
    d: Rational
    # d >= 2: a subgroup of finite index maps onto a free group of rank 2
    maps_onto_free_rank2: bool
    # some e_i = 0 was read as 1/e_i = 0, outside the hypothesis e_i >= 2
    extends_hypothesis: bool
    # chi of the subgroup, index * chi(G)
    subgroup_chi: Rational


def deficiency(presentation: FTypePresentation, index: int) -> Deficiency:
    """d = 1 + j (n - 2 - sum 1/e_i) for the finite-index subgroup of index j."""
    if index < 1:
        raise PreconditionError(f"index must be a positive integer, got {index}")
    n = presentation.n
    d = 1 + index * (n - 2 - sum((_reciprocal(e) for e in presentation.exponents), Rational(0)))
    return Deficiency(index, d, d >= 2, 0 in presentation.exponents,
                      riemann_hurwitz(euler_characteristic(presentation), index))


@dataclass(frozen=True)
class QuotientConditions:
    """Evaluated hypotheses of the one-relator quotient theorem for H = G / N(R^m)."""

    m: int
    alphas: tuple[Rational, ...]
    # sum alpha_i + 1/m
    quantity: Rational
    # printed as ">= 2"; evaluated verbatim, see DESIGN.md
    finite_index_onto_z: bool
    # < n - 2
    finite_index_onto_free_rank2: bool
    # n >= 5, or n = 4 with some e_i != 2
    free_subgroup_rank2: bool
    # m >= 8
    virtually_torsion_free: bool
    stated_facts: tuple[str, ...] = (
        "H is a non-trivial free product with amalgamation",
    )


def quotient_conditions(presentation: FTypePresentation, m: int) -> QuotientConditions:
    if m < 2:
        raise PreconditionError(f"m must be at least 2, got {m}")
    if not is_special(presentation):
        exception = NotSpecialError()
        _logger.error(exception)
        raise exception
    n = presentation.n
    alphas = tuple(_reciprocal(e) for e in presentation.exponents)
    quantity = sum(alphas, Rational(0)) + Rational(1, m)
    return QuotientConditions(
        m=m,
        alphas=alphas,
        quantity=quantity,
        finite_index_onto_z=quantity >= 2,
        finite_index_onto_free_rank2=quantity < n - 2,
        free_subgroup_rank2=n >= 5 or (n == 4 and any(e != 2 for e in presentation.exponents)),
        virtually_torsion_free=m >= 8,
    )


@dataclass(frozen=True)
class TorsionReport:
    # a_i has order exactly e_i (None: infinite)
    generator_orders: dict[str, Optional[int]]
    # every order > 1 some element of finite order has
    element_orders: tuple[int, ...]
    # conjugacy separable, hence residually finite and Hopfian
    residually_finite: bool = True
    virtually_torsion_free: bool = True
    facts: tuple[str, ...] = field(default=(
        "Any element of finite order in G is conjugate to a power of some a_i",
        "Any finite subgroup is cyclic and conjugate to a subgroup of some <a_i>",
        "Any Abelian subgroup is cyclic or free Abelian of rank 2",
    ))


def torsion(presentation: FTypePresentation) -> TorsionReport:
    require_valid(presentation)
    alphabet = presentation.alphabet
    orders = sorted({
        d
        for e in presentation.exponents if e
        for d in range(2, e + 1) if e % d == 0
    })
    return TorsionReport(
        generator_orders={alphabet.name(i): alphabet.order(i) or None for i in range(len(alphabet))},
        element_orders=tuple(orders),
    )


def freiheitssatz(presentation: FTypePresentation, generators: Iterable[GeneratorRef]) -> bool:
    """Whether the generators are known to span the free product of their cyclics.

    Any n - 2 of them do; n - 1 of them do when both U and V are proper powers.
    """
    require_valid(presentation)
    subset = set(presentation.alphabet.indices(generators))
    n = presentation.n
    if len(subset) <= n - 2:
        return True
    if len(subset) == n - 1:
        return is_proper_power(presentation.u) is not None and is_proper_power(presentation.v) is not None
    return False

