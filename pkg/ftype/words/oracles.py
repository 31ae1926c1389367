"""Brute-force enumerations backing the decision procedures.

They are exponential and meant for desk-scale cross-checks only: the test
suite and `ftype selftest` compare them with `is_proper_power` and
`is_product_of_two_involutions` on every short word.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .alphabet import Alphabet
from .decisions import is_involution, is_product_of_two_involutions, is_proper_power
from .word import Syllable, Word, invert, is_cyclically_reduced, multiply, normalize, order_of, power


def _powers(alphabet: Alphabet, g: int, bound: int) -> list[int]:
    e = alphabet.order(g)
    if e:
        return list(range(1, e))
    return [k for k in range(-bound, bound + 1) if k]


def enumerate_words(
        alphabet: Alphabet,
        max_len: int,
        generators: Sequence[int] = None,
        bound: int = 2,
) -> Iterator[Word]:
    """All reduced words of syllable length <= max_len, shortest first.

    Infinite generators take powers in [-bound, bound] \\ {0}.
    """
    if generators is None:
        generators = range(len(alphabet))
    generators = tuple(generators)
    yield Word(alphabet)
    for length in range(1, max_len + 1):
        for sequence in product(generators, repeat=length):
            if any(a == b for a, b in zip(sequence, sequence[1:])):
                continue
            for powers in product(*(_powers(alphabet, g, bound) for g in sequence)):
                yield Word(alphabet, tuple(Syllable(g, k) for g, k in zip(sequence, powers)))


def random_word(
        alphabet: Alphabet,
        max_len: int,
        rng: np.random.Generator,
        generators: Sequence[int] = None,
        bound: int = 3,
) -> Word:
    """A seeded random word of syllable length <= max_len; may reduce to the identity."""
    if generators is None:
        generators = range(len(alphabet))
    generators = tuple(generators)
    raw = []
    for _ in range(int(rng.integers(1, max_len + 1))):
        g = generators[int(rng.integers(len(generators)))]
        raw.append((g, int(rng.choice(_powers(alphabet, g, bound)))))
    return normalize(raw, alphabet)


def enumerate_cyclically_reduced(alphabet: Alphabet, max_len: int, bound: int = 2) -> Iterator[Word]:
    return (w for w in enumerate_words(alphabet, max_len, bound=bound) if not w.is_identity and is_cyclically_reduced(w))


def proper_power_table(alphabet: Alphabet, max_len: int, bound: int = 2, max_k: int = 6) -> set[Word]:
    """Every u^k (2 <= k <= max_k) of syllable length <= max_len with |u| <= max_len."""
    table = set()
    for u in enumerate_words(alphabet, max_len, bound=bound):
        if u.is_identity:
            continue
        for k in range(2, max_k + 1):
            w = power(u, k)
            if 0 < len(w) <= max_len:
                table.add(w)
    return table


def involutions(alphabet: Alphabet, max_len: int, bound: int = 2) -> list[Word]:
    return [w for w in enumerate_words(alphabet, max_len, bound=bound) if is_involution(w)]


def brute_force_involution_product(w: Word, candidates: Iterable[Word]) -> Optional[Word]:
    """An involution x among the candidates with x w x = w^-1."""
    target = invert(w)
    for x in candidates:
        if multiply(x, w, x) == target:
            return x
    return None


@dataclass
class OracleReport:
    """Outcome of comparing a decision procedure with its brute-force oracle."""

    name: str
    checked: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_proper_powers(alphabet: Alphabet, max_len: int = 6, bound: int = 2) -> OracleReport:
    report = OracleReport(f"proper powers over {alphabet.describe()} up to length {max_len}")
    table = proper_power_table(alphabet, max_len, bound)
    for w in enumerate_cyclically_reduced(alphabet, max_len, bound):
        report.checked += 1
        found = is_proper_power(w)
        if (found is not None) != (w in table):
            report.mismatches.append(f"{w}: decided {found is not None}, oracle {w in table}")
        elif found is not None and power(found.root, found.k) != w:
            report.mismatches.append(f"{w}: root {found.root} ^ {found.k} does not multiply back")
    return report


def check_involution_products(alphabet: Alphabet, max_len: int = 5, bound: int = 2) -> OracleReport:
    report = OracleReport(f"involution products over {alphabet.describe()} up to length {max_len}")
    candidates = involutions(alphabet, max_len, bound)
    for w in enumerate_cyclically_reduced(alphabet, max_len, bound):
        if order_of(w).is_finite:
            continue
        report.checked += 1
        found = is_product_of_two_involutions(w)
        oracle = brute_force_involution_product(w, candidates)
        if (found is not None) != (oracle is not None):
            report.mismatches.append(f"{w}: decided {found is not None}, oracle {oracle is not None}")
        elif found is not None and not (
                is_involution(found.x) and is_involution(found.y) and multiply(found.x, found.y) == w):
            report.mismatches.append(f"{w}: witness ({found.x}, {found.y}) does not verify")
    return report
