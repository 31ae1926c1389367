from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..words import Alphabet, Word, invert


@dataclass(frozen=True)
class FTypePresentation:
    """<a_1..a_n | a_i^e_i = 1, U(a_1..a_p) V(a_p+1..a_n) = 1>."""

    alphabet: Alphabet
    p: int
    u: Word
    v: Word

    @property
    def n(self) -> int:
        return len(self.alphabet)

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.alphabet.exponents

    @property
    def left(self) -> tuple[int, ...]:
        """Generator indices of G1."""
        return tuple(range(self.p))

    @property
    def right(self) -> tuple[int, ...]:
        """Generator indices of G2."""
        return tuple(range(self.p, self.n))

    @property
    def relator(self) -> Word:
        return self.u * self.v

    @property
    def omitted(self) -> tuple[int, ...]:
        used = self.u.generators | self.v.generators
        return tuple(i for i in range(self.n) if i not in used)


class Severity(str, Enum):
    INFO = 'info'
    WARNING = 'warning'
    ERROR = 'error'


@dataclass(frozen=True)
class Finding:
    severity: Severity
    code: str
    message: str


@dataclass(frozen=True)
class FreeProductSplit:
    """G = H1 * H2 when UV omits generators: H1 the free product of the omitted cyclics."""

    free_factor: Alphabet
    remainder: FTypePresentation


@dataclass
class ValidationReport:
    findings: list[Finding] = field(default_factory=list)
    omitted_generators: list[str] = field(default_factory=list)
    split: Optional[FreeProductSplit] = None

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def errors(self) -> list[Finding]:
        return [finding for finding in self.findings if finding.severity == Severity.ERROR]

    @property
    def warnings(self) -> list[Finding]:
        return [finding for finding in self.findings if finding.severity == Severity.WARNING]

    def add(self, severity: Severity, code: str, message: str) -> None:
        self.findings.append(Finding(severity, code, message))


@dataclass(frozen=True)
class AmalgamDecomposition:
    """G = G1 *_A G2 with A = <U^-1> = <V>."""

    alphabet: Alphabet
    left: tuple[int, ...]
    right: tuple[int, ...]
    amalgam_generator_left: Word
    amalgam_generator_right: Word

    @classmethod
    def of(cls, presentation: FTypePresentation) -> 'AmalgamDecomposition':
        return cls(
            presentation.alphabet,
            presentation.left,
            presentation.right,
            invert(presentation.u),
            presentation.v,
        )

    @property
    def u(self) -> Word:
        return invert(self.amalgam_generator_left)

    @property
    def v(self) -> Word:
        return self.amalgam_generator_right

    def describe(self) -> dict[str, str]:
        return {
            'G1': self.alphabet.describe(self.left),
            'G2': self.alphabet.describe(self.right),
            'A_left': str(self.amalgam_generator_left),
            'A_right': str(self.amalgam_generator_right),
        }
