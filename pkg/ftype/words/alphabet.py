from dataclasses import dataclass
from re import fullmatch
from typing import Iterable, Union

from ..errors import AlphabetError, UnknownGeneratorError

# A generator is referred to either by its index or by its name
GeneratorRef = Union[int, str]

GENERATOR_PATTERN = r'[A-Za-z][A-Za-z0-9_]*'


@dataclass(frozen=True)
class Alphabet:
    """Generators a_1..a_q of a free product of cyclics with orders e_i.

    An exponent of 0 marks an infinite cyclic factor; every other exponent is
    at least 2.
    """

    generators: tuple[str, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(self.generators))
        object.__setattr__(self, 'exponents', tuple(int(e) for e in self.exponents))
        if not self.generators:
            raise AlphabetError("An alphabet needs at least one generator")
        if len(self.generators) != len(self.exponents):
            raise AlphabetError(
                f"{len(self.generators)} generators but {len(self.exponents)} exponents")
        if len(set(self.generators)) != len(self.generators):
            raise AlphabetError(f"Generator names are not unique: {' '.join(self.generators)}")
        for name in self.generators:
            if not fullmatch(GENERATOR_PATTERN, name):
                raise AlphabetError(f"Invalid generator name: {name!r}")
        for name, e in zip(self.generators, self.exponents):
            if e != 0 and e < 2:
                raise AlphabetError(f"Exponent of {name} must be 0 or at least 2, got {e}")

    def __len__(self) -> int:
        return len(self.generators)

    def resolve(self, generator: GeneratorRef) -> int:
        """Index of a generator given by index or by name."""
        if isinstance(generator, str):
            try:
                return self.generators.index(generator)
            except ValueError:
                raise UnknownGeneratorError(generator) from None
        if isinstance(generator, bool) or not isinstance(generator, int) or \
                not 0 <= generator < len(self.generators):
            raise UnknownGeneratorError(generator)
        return generator

    def name(self, generator: int) -> str:
        return self.generators[generator]

    def order(self, generator: int) -> int:
        return self.exponents[generator]

    def is_finite(self, generator: int) -> bool:
        return self.exponents[generator] != 0

    def canonical(self, generator: int, power: int) -> int:
        """Canonical residue of a power: in [0, e) for finite generators, unchanged otherwise."""
        e = self.exponents[generator]
        return power % e if e else power

    def indices(self, generators: Iterable[GeneratorRef]) -> tuple[int, ...]:
        return tuple(self.resolve(g) for g in generators)

    def describe(self, generators: Iterable[int] = None) -> str:
        """Free product notation of (a subset of) the generators, e.g. `Z2 * Z3 * Z`."""
        if generators is None:
            generators = range(len(self))
        return ' * '.join(f"Z{self.exponents[i]}" if self.exponents[i] else 'Z' for i in generators) or '1'
