from logging import getLogger
from typing import NamedTuple, Optional

from ..errors import EmptyWordError, FiniteOrderError
from .word import Word, Syllable, cyclically_reduce, identity, invert, multiply, order_of, power

_logger = getLogger(__name__)


class Power(NamedTuple):
    """w = root^k with k >= 2."""

    root: Word
    k: int


class InvolutionPair(NamedTuple):
    """w = x * y with x and y of order 2."""

    x: Word
    y: Word


def is_proper_power(w: Word) -> Optional[Power]:
    """Primitive root and maximal exponent of w, or None when w is not a proper power."""
    if w.is_identity:
        raise EmptyWordError("is_proper_power needs a nonempty word")
    alphabet = w.alphabet
    core, conjugator = cyclically_reduce(w)
    syllables = core.syllables
    length = len(syllables)
    root_core = None
    k = 0
    if length >= 2:
        for period in range(1, length // 2 + 1):
            if length % period == 0 and syllables == syllables[:period] * (length // period):
                root_core = Word(alphabet, syllables[:period])
                k = length // period
                break
    else:
        g, m = syllables[0]
        e = alphabet.order(g)
        if e == 0:
            if abs(m) >= 2:
                root_core = Word(alphabet, (Syllable(g, 1 if m > 0 else -1),))
                k = abs(m)
        else:
            # t * k = m in Z/e; k = e + 1 closes one full residue period
            for candidate in range(e + 1, 1, -1):
                t = next((t for t in range(1, e) if (t * candidate - m) % e == 0), None)
                if t is not None:
                    root_core = Word(alphabet, (Syllable(g, t),))
                    k = candidate
                    break
    if root_core is None:
        return None
    return Power(multiply(conjugator, root_core, invert(conjugator)), k)


def is_involution(w: Word) -> bool:
    return order_of(w).value == 2


def are_conjugate(w1: Word, w2: Word) -> Optional[Word]:
    """A conjugator g with g * w2 * g^-1 = w1, or None."""
    core1, reducer1 = cyclically_reduce(w1)
    core2, reducer2 = cyclically_reduce(w2)
    if core1.alphabet != core2.alphabet:
        multiply(w1, w2)  # raises the mismatch error
    if len(core1) != len(core2):
        return None
    alphabet = w1.alphabet
    if len(core1) <= 1:
        if core1.syllables != core2.syllables:
            return None
        prefix = identity(alphabet)
    else:
        s1, s2 = core1.syllables, core2.syllables
        for j in range(len(s2)):
            if s2[j:] + s2[:j] == s1:
                # core1 = x^-1 core2 x with x = s2[:j]
                prefix = Word(alphabet, s2[:j])
                break
        else:
            return None
    conjugator = multiply(reducer1, invert(prefix), invert(reducer2))
    assert multiply(conjugator, w2, invert(conjugator)) == w1, \
        f"conjugator {conjugator} does not conjugate {w2} to {w1}"
    return conjugator


def _alternating(bound: int):
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def is_product_of_two_involutions(w: Word) -> Optional[InvolutionPair]:
    """Involutions x, y with w = x * y, for w of infinite order.

    x w x^-1 = w^-1 exactly when x lies in g0 * C(w), where g0 is any
    conjugator from w to its inverse and C(w) is generated by the primitive
    root of w; the search runs over g0 * root^k with |k| <= |g0| + 2.
    """
    if order_of(w).is_finite:
        raise FiniteOrderError(str(w))
    g0 = are_conjugate(invert(w), w)
    if g0 is None:
        return None
    found = is_proper_power(w)
    root = w if found is None else found.root
    bound = len(g0) + 2
    for k in _alternating(bound):
        x = multiply(g0, power(root, k))
        if is_involution(x):
            _logger.debug(f"{w} = ({x}) * ({multiply(x, w)}) found at k = {k}")
            return InvolutionPair(x, multiply(x, w))
    return None
