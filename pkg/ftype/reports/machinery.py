from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from json import JSONEncoder, dumps
from typing import Any

import numpy as np

from ..psl2 import LaurentPolynomial
from ..words import Word, format_word

# bumped whenever a key of a JSON document changes meaning
SCHEMA = 1


class Encoder(JSONEncoder):
    """Encoder encodes reports and certificates to JSON."""

    def default(self, o: Any) -> Any:
        # Handle objects that know their own layout
        if hasattr(o, 'to_json'):
            return o.to_json()
        # Handle exact and complex numbers
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, complex):
            return [o.real, o.imag]
        if isinstance(o, np.generic):
            return o.item()
        if isinstance(o, Word):
            return format_word(o)
        if isinstance(o, LaurentPolynomial):
            return {str(k): [c.real, c.imag] for k, c in o.coefficients.items()}
        if isinstance(o, Enum):
            return o.value
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        # Handle result dataclasses field by field
        if is_dataclass(o) and not isinstance(o, type):
            return {f.name: getattr(o, f.name) for f in fields(o) if not f.name.startswith('_')}
        # Delegate to parent's default
        return super().default(o)


def document(command: str, result: Any) -> dict[str, Any]:
    return {'schema': SCHEMA, 'command': command, 'result': result}


def encode(command: str, result: Any) -> str:
    return dumps(document(command, result), cls=Encoder, indent=2, sort_keys=True)
