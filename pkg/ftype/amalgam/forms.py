from dataclasses import dataclass
from enum import Enum

from ..words import Alphabet, Word, multiply, power


class Side(str, Enum):
    LEFT = 'left'
    RIGHT = 'right'

    @property
    def other(self) -> 'Side':
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True)
class Block:
    side: Side
    content: Word

    def __str__(self) -> str:
        return f"{self.side.value[0].upper()}[{self.content}]"


@dataclass(frozen=True)
class AlternatingForm:
    """g = mu_1 mu_2 ... mu_r * alpha^tail, alpha = U^-1 = V the amalgam generator.

    Blocks alternate sides and none of them lies in A, so the form is
    trivial exactly when it has no blocks and a zero tail.
    """

    alphabet: Alphabet
    blocks: tuple[Block, ...]
    amalgam_tail: int = 0

    @property
    def is_trivial(self) -> bool:
        return not self.blocks and self.amalgam_tail == 0

    @property
    def sides(self) -> tuple[Side, ...]:
        return tuple(block.side for block in self.blocks)

    def word(self, amalgam_generator: Word) -> Word:
        """Multiply the form back into a word, alpha given on either side."""
        return multiply(
            Word(self.alphabet),
            *(block.content for block in self.blocks),
            power(amalgam_generator, self.amalgam_tail),
        )

    def __str__(self) -> str:
        text = ' '.join(str(block) for block in self.blocks) or '1'
        if self.amalgam_tail:
            text += f" * A^{self.amalgam_tail}"
        return text
