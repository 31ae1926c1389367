from dataclasses import dataclass
from logging import getLogger
from math import gcd
from re import finditer, fullmatch
from typing import Iterable, NamedTuple, Optional

from ..errors import AlphabetMismatchError, WordSyntaxError
from .alphabet import Alphabet, GeneratorRef, GENERATOR_PATTERN

_logger = getLogger(__name__)


class Syllable(NamedTuple):
    """A generator index raised to a nonzero canonical power."""

    generator: int
    power: int


@dataclass(frozen=True)
class Word:
    """Reduced normal form of an element of a free product of cyclics.

    Adjacent syllables have distinct generators and finite-order powers are
    stored as residues in (0, e_i), so equality is structural. Build words
    through `normalize` or the alphabet helpers below; the constructor trusts
    its input.
    """

    alphabet: Alphabet
    syllables: tuple[Syllable, ...] = ()

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: 'Word') -> 'Word':
        return multiply(self, other)

    def __invert__(self) -> 'Word':
        return invert(self)

    def __pow__(self, k: int) -> 'Word':
        return power(self, k)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @property
    def generators(self) -> frozenset[int]:
        return frozenset(s.generator for s in self.syllables)


class Order(NamedTuple):
    """Order of an element: a positive integer, or None for infinite order."""

    value: Optional[int]

    @classmethod
    def finite(cls, k: int) -> 'Order':
        return cls(k)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return f"Finite({self.value})" if self.is_finite else 'Infinite'


INFINITE = Order(None)


def identity(alphabet: Alphabet) -> Word:
    return Word(alphabet)


def generator(alphabet: Alphabet, g: GeneratorRef, k: int = 1) -> Word:
    return normalize([(g, k)], alphabet)


def normalize(raw: Iterable[tuple[GeneratorRef, int]], alphabet: Alphabet) -> Word:
    """Reduced normal form of a raw product of generator powers.

    Zero powers are dropped and neighbours on the same generator merge,
    modulo e_i for finite generators.
    """
    stack: list[Syllable] = []
    for g, k in raw:
        i = alphabet.resolve(g)
        k = alphabet.canonical(i, k)
        if k == 0:
            continue
        if stack and stack[-1].generator == i:
            merged = alphabet.canonical(i, stack[-1].power + k)
            if merged == 0:
                stack.pop()
            else:
                stack[-1] = Syllable(i, merged)
        else:
            stack.append(Syllable(i, k))
    return Word(alphabet, tuple(stack))


def _same_alphabet(words: Iterable[Word]) -> Alphabet:
    alphabet = None
    for w in words:
        if alphabet is None:
            alphabet = w.alphabet
        elif w.alphabet is not alphabet and w.alphabet != alphabet:
            raise AlphabetMismatchError()
    return alphabet


def multiply(*words: Word) -> Word:
    alphabet = _same_alphabet(words)
    if alphabet is None:
        raise TypeError("multiply() needs at least one word")
    return normalize((s for w in words for s in w.syllables), alphabet)


def invert(w: Word) -> Word:
    return normalize(((s.generator, -s.power) for s in reversed(w.syllables)), w.alphabet)


def power(w: Word, k: int) -> Word:
    if k < 0:
        return power(invert(w), -k)
    result = identity(w.alphabet)
    base = w
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def cyclically_reduce(w: Word) -> tuple[Word, Word]:
    """Split w as conjugator * core * conjugator^-1 with a cyclically reduced core."""
    alphabet = w.alphabet
    core = list(w.syllables)
    conjugator = identity(alphabet)
    while len(core) >= 2 and core[0].generator == core[-1].generator:
        g, a = core[0]
        b = core[-1].power
        # g^a m g^b = g^-b (g^(a+b) m) g^b
        conjugator = multiply(conjugator, normalize([(g, -b)], alphabet))
        merged = alphabet.canonical(g, a + b)
        core = core[1:-1]
        if merged:
            core.insert(0, Syllable(g, merged))
    return Word(alphabet, tuple(core)), conjugator


def is_cyclically_reduced(w: Word) -> bool:
    return len(w) <= 1 or w.syllables[0].generator != w.syllables[-1].generator


def power_exponent(w: Word, base: Word) -> Optional[int]:
    """Exponent k with w = base^k, or None.

    A single-syllable core is compared directly; otherwise the search runs up
    to |k| <= |w| / |core(base)| + 1.
    """
    if w.is_identity:
        return 0
    core, conjugator = cyclically_reduce(base)
    if core.is_identity:
        return None
    if len(core) == 1:
        g, m = core.syllables[0]
        inner = multiply(invert(conjugator), w, conjugator)
        if len(inner) != 1 or inner.syllables[0].generator != g:
            return None
        q = inner.syllables[0].power
        e = w.alphabet.order(g)
        if e == 0:
            return q // m if q % m == 0 else None
        return next((k for k in range(1, e) if (k * m - q) % e == 0), None)
    bound = len(w) // len(core) + 1
    positive = negative = identity(w.alphabet)
    inverse = invert(base)
    for k in range(1, bound + 1):
        positive = multiply(positive, base)
        if positive == w:
            return k
        negative = multiply(negative, inverse)
        if negative == w:
            return -k
    return None


def order_of(w: Word) -> Order:
    core, _ = cyclically_reduce(w)
    if core.is_identity:
        return Order.finite(1)
    if len(core) == 1:
        g, m = core.syllables[0]
        e = w.alphabet.order(g)
        if e:
            return Order.finite(e // gcd(e, m))
    return INFINITE


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse whitespace separated `g` / `g^k` terms; a lone `1` is the identity."""
    raw = []
    tokens = list(finditer(r'\S+', text))
    if len(tokens) == 1 and tokens[0].group() == '1':
        return identity(alphabet)
    for token in tokens:
        match = fullmatch(rf'({GENERATOR_PATTERN})(?:\^([+-]?\d+))?', token.group())
        if match is None:
            raise WordSyntaxError(f"invalid term {token.group()!r}", token.start() + 1)
        k = 1 if match.group(2) is None else int(match.group(2))
        if k == 0:
            raise WordSyntaxError(f"zero exponent in {token.group()!r}", token.start() + 1)
        raw.append((match.group(1), k))
    w = normalize(raw, alphabet)
    _logger.debug(f"Parsed word {text!r} as {format_word(w)}")
    return w


def format_word(w: Word) -> str:
    if w.is_identity:
        return '1'
    return ' '.join(
        w.alphabet.name(g) if k == 1 else f"{w.alphabet.name(g)}^{k}"
        for g, k in w.syllables
    )
