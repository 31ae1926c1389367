from dataclasses import dataclass, field
from logging import getLogger
from typing import Optional

from ..classify import Deficiency, HyperbolicityVerdict, MalnormalityReport, QuotientConditions, Rational, TitsClass, \
    TorsionReport, deficiency, euler_characteristic, hyperbolicity, malnormal_amalgam, quotient_conditions, \
    sq_universal, tits_classify, torsion
from ..errors import PreconditionError
from ..presentation import FTypePresentation, ValidationReport, decompose, format_presentation, is_special, validate

_logger = getLogger(__name__)

REPORTED = 'reported, not computed'


@dataclass(frozen=True)
class StatedFact:
    statement: str
    status: str = REPORTED


STATED_FACTS = (
    StatedFact("G is coherent: finitely generated subgroups are finitely presented"),
    StatedFact("A group of F-type is conjugacy separable and, hence, residually finite and Hopfian"),
    StatedFact("G is subgroup separable (LERF)"),
    StatedFact("G has solvable generalized word problem, hence solvable word problem"),
    StatedFact("G has solvable conjugacy and power conjugacy problems"),
    StatedFact("G is of finite homological type WFL with vcd(G) <= 2"),
)


@dataclass
class AnalysisReport:
    """Everything `ftype analyze` reports about one presentation.

    Only the validation block is filled in for invalid presentations or ones
    whose relator omits generators.
    """

    presentation: str
    validation: ValidationReport
    decomposition: Optional[dict[str, str]] = None
    chi: Optional[Rational] = None
    tits: Optional[TitsClass] = None
    sq_universal: Optional[bool] = None
    hyperbolicity: Optional[HyperbolicityVerdict] = None
    special: Optional[bool] = None
    malnormal: Optional[MalnormalityReport] = None
    torsion: Optional[TorsionReport] = None
    deficiency: Optional[Deficiency] = None
    # conditions for G / N(R^m), special groups only
    quotient: Optional[QuotientConditions] = None
    stated_facts: list[StatedFact] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.validation.ok


def analyze(
        presentation: FTypePresentation,
        deficiency_index: Optional[int] = None,
        m: Optional[int] = None,
) -> AnalysisReport:
    if m is not None and m < 2:
        raise PreconditionError(f"m must be at least 2, got {m}")
    report = AnalysisReport(format_presentation(presentation), validate(presentation))
    if not report.validation.ok or report.validation.omitted_generators:
        _logger.info(f"{presentation.alphabet.describe()}: validation only")
        return report

    report.decomposition = decompose(presentation).describe()
    report.chi = euler_characteristic(presentation)
    report.tits = tits_classify(presentation)
    report.sq_universal = sq_universal(presentation)
    report.hyperbolicity = hyperbolicity(presentation)
    report.special = is_special(presentation)
    report.malnormal = malnormal_amalgam(presentation)
    report.torsion = torsion(presentation)
    if deficiency_index is not None:
        report.deficiency = deficiency(presentation, deficiency_index)
    if m is not None:
        if report.special:
            report.quotient = quotient_conditions(presentation, m)
        else:
            _logger.info(f"{presentation.alphabet.describe()}: not special, no quotient conditions for m = {m}")
    report.stated_facts = list(STATED_FACTS)
    _logger.info(f"{presentation.alphabet.describe()}: chi = {report.chi}, {report.tits}")
    return report
