from typing import Any, Optional

from .base import FTypeError


class InputError(FTypeError):
    """Base class for errors caused by the data handed to the library."""

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)


class PresentationSyntaxError(InputError):
    """The presentation file does not follow the line-oriented format."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class WordSyntaxError(InputError):
    """A word does not follow the `g` / `g^k` term syntax."""

    def __init__(self, message: str, column: int = 1) -> None:
        self.column = column
        super().__init__(f"column {column}: {message}")


class UnknownGeneratorError(InputError):
    """A word refers to a generator the alphabet does not define."""

    def __init__(self, generator: Any) -> None:
        self.generator = generator
        super().__init__(f"Unknown generator: {generator}")


class AlphabetError(InputError):
    """Generator names or exponents violate the alphabet invariants."""


class AlphabetMismatchError(InputError):
    """Two words over different alphabets were combined."""

    def __init__(self) -> None:
        super().__init__("Words belong to different alphabets")


class FactorError(InputError):
    """A word uses generators outside the factor it has to live in."""


class EmptyWordError(InputError):
    """A nonempty word was required."""


class InvalidPresentationError(InputError):
    """Validation found errors; the report is attached."""

    def __init__(self, report: Any) -> None:
        self.report = report
        codes = ', '.join(finding.code for finding in report.errors)
        super().__init__(f"Invalid presentation ({codes})")


class GeneratorOmittedError(InputError):
    """UV omits generators; the analysis needs the split presentation instead."""

    def __init__(self, omitted: tuple[str, ...]) -> None:
        self.omitted = omitted
        super().__init__(f"UV omits generators {' '.join(omitted)}; analyze the free product split instead")


class PreconditionError(InputError):
    """An operation was called outside its domain."""


class FiniteOrderError(PreconditionError):
    """The word has finite order where infinite order is required."""

    def __init__(self, word: str) -> None:
        super().__init__(f"Word {word} has finite order")


class NotSpecialError(PreconditionError):
    """The presentation is neither special nor covered by the proper-power remark."""

    def __init__(self, reason: Optional[str] = None) -> None:
        message = "Presentation is not a special group of F-type"
        super().__init__(message if reason is None else f"{message}: {reason}")


class RelatorInAmalgamError(PreconditionError):
    """The relator lies in the amalgamated subgroup A."""

    def __init__(self, relator: str) -> None:
        super().__init__(f"Relator {relator} lies in the amalgamated subgroup")


class RelatorNotAlternatingError(PreconditionError):
    """The relator's normal form is not c_1 d_1 ... c_k d_k."""

    def __init__(self, relator: str) -> None:
        super().__init__(
            f"Relator {relator} does not reduce to the alternating pattern c_1 d_1 ... c_k d_k; "
            f"conjugate it so it starts in the left factor and ends in the right factor")


class CiInUError(PreconditionError):
    """A left block of the relator lies in <U>."""

    def __init__(self, index: int, block: str) -> None:
        super().__init__(f"c_{index} = {block} lies in <U>")


class DiInVError(PreconditionError):
    """A right block of the relator lies in <V>."""

    def __init__(self, index: int, block: str) -> None:
        super().__init__(f"d_{index} = {block} lies in <V>")


class DiInV1Error(PreconditionError):
    """A right block lies in the cyclic group of the root V_1 of V = V_1^q."""

    def __init__(self, index: int, block: str, root: str) -> None:
        super().__init__(f"d_{index} = {block} lies in <V_1> with V_1 = {root}")
