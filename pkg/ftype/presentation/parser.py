from logging import getLogger
from re import fullmatch

from ..errors import AlphabetError, FactorError, PresentationSyntaxError, UnknownGeneratorError, WordSyntaxError
from ..words import Alphabet, Word, format_word, parse_word
from .model import FTypePresentation

_logger = getLogger(__name__)

KEYS = ('gens', 'exps', 'p', 'U', 'V')


def _split_lines(text: str) -> dict[str, tuple[str, int, int]]:
    """Map each key to (value, line, column of the value)."""
    entries = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0]
        if not content.strip():
            continue
        match = fullmatch(r'\s*([A-Za-z]+)\s*:(\s*)(.*?)\s*', content)
        if match is None:
            raise PresentationSyntaxError("expected 'key: value'", number, len(content) - len(content.lstrip()) + 1)
        key = match.group(1)
        if key not in KEYS:
            raise PresentationSyntaxError(f"unknown key {key!r}", number, match.start(1) + 1)
        if key in entries:
            raise PresentationSyntaxError(f"duplicate key {key!r}", number, match.start(1) + 1)
        entries[key] = (match.group(3), number, match.start(3) + 1)
    for key in KEYS:
        if key not in entries:
            raise PresentationSyntaxError(f"missing key {key!r}", len(text.splitlines()) + 1)
    return entries


def _word(entries: dict[str, tuple[str, int, int]], key: str, alphabet: Alphabet) -> Word:
    value, line, column = entries[key]
    try:
        return parse_word(value, alphabet)
    except WordSyntaxError as e:
        raise PresentationSyntaxError(f"{key}: {e.message}", line, column + e.column - 1) from e
    except UnknownGeneratorError as e:
        raise UnknownGeneratorError(f"{e.generator} (line {line}, {key})") from e


def parse(text: str) -> FTypePresentation:
    """Parse the line-oriented presentation format; only field-level checks are made."""
    entries = _split_lines(text)

    gens, line, _ = entries['gens']
    exps, exps_line, exps_column = entries['exps']
    try:
        exponents = [int(e) for e in exps.split()]
    except ValueError as e:
        raise PresentationSyntaxError(f"exponents must be integers: {exps!r}", exps_line, exps_column) from e
    try:
        alphabet = Alphabet(tuple(gens.split()), tuple(exponents))
    except AlphabetError as e:
        raise AlphabetError(f"line {line}: {e.message}") from e
    n = len(alphabet)
    if n < 2:
        raise PresentationSyntaxError(f"an F-type presentation needs n >= 2 generators, got {n}", line)

    p_text, p_line, p_column = entries['p']
    if not fullmatch(r'[+-]?\d+', p_text):
        raise PresentationSyntaxError(f"p must be an integer: {p_text!r}", p_line, p_column)
    p = int(p_text)
    if not 1 <= p <= n - 1:
        raise PresentationSyntaxError(f"p must satisfy 1 <= p <= {n - 1}, got {p}", p_line, p_column)

    u = _word(entries, 'U', alphabet)
    v = _word(entries, 'V', alphabet)
    outside = sorted(g for g in u.generators if g >= p)
    if outside:
        raise FactorError(f"U uses generators above p: {' '.join(alphabet.name(g) for g in outside)}")
    outside = sorted(g for g in v.generators if g < p)
    if outside:
        raise FactorError(f"V uses generators at or below p: {' '.join(alphabet.name(g) for g in outside)}")

    presentation = FTypePresentation(alphabet, p, u, v)
    _logger.debug(f"Parsed presentation with n = {n}, p = {p}, U = {u}, V = {v}")
    return presentation


def format_presentation(presentation: FTypePresentation) -> str:
    """Inverse of `parse` up to whitespace and comments."""
    return '\n'.join((
        f"gens: {' '.join(presentation.alphabet.generators)}",
        f"exps: {' '.join(str(e) for e in presentation.exponents)}",
        f"p: {presentation.p}",
        f"U: {format_word(presentation.u)}",
        f"V: {format_word(presentation.v)}",
    )) + '\n'
