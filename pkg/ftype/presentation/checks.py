from logging import getLogger

from ..errors import GeneratorOmittedError, InvalidPresentationError
from ..words import Alphabet, Word, is_cyclically_reduced, is_proper_power, normalize, order_of
from .model import AmalgamDecomposition, FreeProductSplit, FTypePresentation, Severity, ValidationReport

_logger = getLogger(__name__)


def _check_word(report: ValidationReport, name: str, w: Word) -> None:
    if w.is_identity:
        report.add(Severity.ERROR, f'{name.lower()}-trivial', f"{name} is the identity")
        return
    if not is_cyclically_reduced(w):
        report.add(Severity.ERROR, f'{name.lower()}-not-cyclically-reduced',
                   f"{name} = {w} is not cyclically reduced")
    order = order_of(w)
    if order.is_finite:
        report.add(Severity.ERROR, f'{name.lower()}-finite-order',
                   f"{name} = {w} has finite order {order.value}; it must have infinite order")


def _check_single_generator(report: ValidationReport, name: str, w: Word, g: int) -> None:
    """With p = 1 (or p = n-1) the factor word must be a_g^m with |m| >= 2."""
    alphabet = w.alphabet
    if len(w) != 1 or w.syllables[0].generator != g or abs(w.syllables[0].power) < 2 or alphabet.is_finite(g):
        report.add(Severity.ERROR, f'{name.lower()}-not-proper-generator-power',
                   f"{name} = {w} must be {alphabet.name(g)}^m with |m| >= 2 and {alphabet.name(g)} of infinite "
                   f"order when its factor has a single generator")


def _remap(w: Word, alphabet: Alphabet, mapping: dict[int, int]) -> Word:
    return normalize(((mapping[g], k) for g, k in w.syllables), alphabet)


def _split(presentation: FTypePresentation, omitted: tuple[int, ...]) -> FreeProductSplit:
    alphabet = presentation.alphabet
    kept = [i for i in range(presentation.n) if i not in omitted]
    free_factor = Alphabet(
        tuple(alphabet.name(i) for i in omitted),
        tuple(alphabet.order(i) for i in omitted),
    )
    remainder_alphabet = Alphabet(
        tuple(alphabet.name(i) for i in kept),
        tuple(alphabet.order(i) for i in kept),
    )
    mapping = {old: new for new, old in enumerate(kept)}
    p = sum(1 for i in kept if i < presentation.p)
    remainder = FTypePresentation(
        remainder_alphabet,
        p,
        _remap(presentation.u, remainder_alphabet, mapping),
        _remap(presentation.v, remainder_alphabet, mapping),
    )
    return FreeProductSplit(free_factor, remainder)


def validate(presentation: FTypePresentation) -> ValidationReport:
    report = ValidationReport()
    _check_word(report, 'U', presentation.u)
    _check_word(report, 'V', presentation.v)
    if presentation.p == 1 and not presentation.u.is_identity:
        _check_single_generator(report, 'U', presentation.u, 0)
    if presentation.p == presentation.n - 1 and not presentation.v.is_identity:
        _check_single_generator(report, 'V', presentation.v, presentation.n - 1)

    omitted = presentation.omitted
    if omitted and report.ok:
        names = [presentation.alphabet.name(i) for i in omitted]
        report.omitted_generators = names
        report.split = _split(presentation, omitted)
        report.add(Severity.WARNING, 'generator-omitted',
                   f"UV omits {' '.join(names)}: G is the free product of "
                   f"{report.split.free_factor.describe()} and the remaining F-type group")
        remainder = validate(report.split.remainder)
        for finding in remainder.errors:
            report.add(Severity.WARNING, f'remainder-{finding.code}', f"remainder: {finding.message}")
    elif omitted:
        report.omitted_generators = [presentation.alphabet.name(i) for i in omitted]

    for finding in report.findings:
        _logger.debug(f"{finding.severity.value}: {finding.code}: {finding.message}")
    return report


def require_valid(presentation: FTypePresentation, allow_omission: bool = False) -> ValidationReport:
    report = validate(presentation)
    if not report.ok:
        exception = InvalidPresentationError(report)
        _logger.error(exception)
        raise exception
    if report.omitted_generators and not allow_omission:
        exception = GeneratorOmittedError(tuple(report.omitted_generators))
        _logger.error(exception)
        raise exception
    return report


def decompose(presentation: FTypePresentation) -> AmalgamDecomposition:
    require_valid(presentation, allow_omission=True)
    return AmalgamDecomposition.of(presentation)


def is_special(presentation: FTypePresentation) -> bool:
    """n >= 4, 2 <= p <= n-2, UV involves every generator, neither U nor V a proper power."""
    report = require_valid(presentation, allow_omission=True)
    return (
        not report.omitted_generators
        and presentation.n >= 4
        and 2 <= presentation.p <= presentation.n - 2
        and is_proper_power(presentation.u) is None
        and is_proper_power(presentation.v) is None
    )
