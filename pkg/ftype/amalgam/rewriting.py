from logging import getLogger
from typing import Optional

from ..errors import FactorError
from ..presentation import AmalgamDecomposition
from ..words import Word, multiply, power, power_exponent
from .forms import AlternatingForm, Block, Side

_logger = getLogger(__name__)


def _generators(decomposition: AmalgamDecomposition, side: Side) -> tuple[int, ...]:
    return decomposition.left if side is Side.LEFT else decomposition.right


def _amalgam_word(decomposition: AmalgamDecomposition, side: Side) -> Word:
    if side is Side.LEFT:
        return decomposition.amalgam_generator_left
    return decomposition.amalgam_generator_right


def side_of(generator: int, decomposition: AmalgamDecomposition) -> Side:
    return Side.LEFT if generator in decomposition.left else Side.RIGHT


def amalgam_power_of(w: Word, side: Side, decomposition: AmalgamDecomposition) -> Optional[int]:
    """k with w = (U^-1)^k (left) or w = V^k (right), or None if w is not in A."""
    allowed = _generators(decomposition, side)
    outside = w.generators.difference(allowed)
    if outside:
        raise FactorError(
            f"{w} uses {' '.join(w.alphabet.name(g) for g in sorted(outside))} outside the {side.value} factor")
    return power_exponent(w, _amalgam_word(decomposition, side))


def split_blocks(w: Word, decomposition: AmalgamDecomposition) -> list[Block]:
    """Maximal runs of syllables from one factor, before any rewriting."""
    blocks: list[Block] = []
    run = []
    side = None
    for syllable in w.syllables:
        current = side_of(syllable.generator, decomposition)
        if current is not side and run:
            blocks.append(Block(side, Word(w.alphabet, tuple(run))))
            run = []
        side = current
        run.append(syllable)
    if run:
        blocks.append(Block(side, Word(w.alphabet, tuple(run))))
    return blocks


def normal_form(w: Word, decomposition: AmalgamDecomposition) -> AlternatingForm:
    """Alternating normal form of w in G1 *_A G2.

    A block lying in A is rewritten as the same power of the amalgam
    generator on the other side and merged into its neighbours; each round
    removes at least one block.
    """
    blocks = split_blocks(w, decomposition)
    bound = len(blocks)
    rounds = 0
    while True:
        for position, block in enumerate(blocks):
            k = amalgam_power_of(block.content, block.side, decomposition)
            if k is not None:
                break
        else:
            return AlternatingForm(w.alphabet, tuple(blocks))
        if len(blocks) == 1:
            _logger.debug(f"{w} lies in A as alpha^{k}")
            return AlternatingForm(w.alphabet, (), k)

        rounds += 1
        assert rounds <= bound, f"normal form of {w} did not terminate within {bound} rounds"
        side = block.side.other
        substitute = Block(side, power(_amalgam_word(decomposition, side), k))
        # merging may empty a block, which joins its two neighbours in turn
        blocks = _merge_adjacent(blocks[:position] + [substitute] + blocks[position + 1:])
        _logger.debug(f"round {rounds}: {' '.join(str(b) for b in blocks) or '1'}")


def _merge_adjacent(blocks: list[Block]) -> list[Block]:
    merged: list[Block] = []
    for block in blocks:
        if merged and merged[-1].side is block.side:
            content = multiply(merged[-1].content, block.content)
            merged.pop()
            if not content.is_identity:
                merged.append(Block(block.side, content))
        else:
            merged.append(block)
    return merged


def is_trivial(w: Word, decomposition: AmalgamDecomposition) -> bool:
    return normal_form(w, decomposition).is_trivial


def reduced_relator_form(r: Word, decomposition: AmalgamDecomposition) -> Optional[list[tuple[Word, Word]]]:
    """Pairs (c_i, d_i) with R = c_1 d_1 ... c_k d_k, or None if R does not have that shape."""
    form = normal_form(r, decomposition)
    blocks = form.blocks
    if form.amalgam_tail or not blocks or len(blocks) % 2:
        return None
    if blocks[0].side is not Side.LEFT or blocks[-1].side is not Side.RIGHT:
        return None
    return [(blocks[i].content, blocks[i + 1].content) for i in range(0, len(blocks), 2)]


def from_pairs(pairs: list[tuple[Word, Word]]) -> Word:
    return multiply(*(w for pair in pairs for w in pair))
