from dataclasses import dataclass
from logging import getLogger
from typing import Mapping, Union

import numpy as np

from ..errors import DegeneratePolynomialError, EvaluationError
from .matrix import ProjectiveMatrix

_logger = getLogger(__name__)

# coefficients at or below this magnitude are not stored
NEGLIGIBLE = 1e-14

Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class LaurentPolynomial:
    """Complex polynomial in t and t^-1, kept as exponent -> coefficient."""

    coefficients: Mapping[int, complex]

    def __post_init__(self):
        cleaned = {
            int(k): complex(c)
            for k, c in self.coefficients.items()
            if abs(c) > NEGLIGIBLE
        }
        object.__setattr__(self, 'coefficients', dict(sorted(cleaned.items())))

    @classmethod
    def constant(cls, c: Scalar) -> 'LaurentPolynomial':
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> 'LaurentPolynomial':
        return cls({k: c})

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_constant(self) -> bool:
        return all(k == 0 for k in self.coefficients)

    @property
    def max_degree(self) -> int:
        return max(self.coefficients, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.coefficients, default=0)

    def coefficient(self, k: int) -> complex:
        return self.coefficients.get(k, 0j)

    def __add__(self, other: Union['LaurentPolynomial', Scalar]) -> 'LaurentPolynomial':
        return laurent_add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPolynomial':
        return LaurentPolynomial({k: -c for k, c in self.coefficients.items()})

    def __sub__(self, other: Union['LaurentPolynomial', Scalar]) -> 'LaurentPolynomial':
        return laurent_add(self, -_lift(other))

    def __mul__(self, other: Union['LaurentPolynomial', Scalar]) -> 'LaurentPolynomial':
        return laurent_mul(self, _lift(other))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, float, complex)):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __call__(self, t: Scalar) -> complex:
        return evaluate(self, t)

    def derivative(self) -> 'LaurentPolynomial':
        return LaurentPolynomial({k - 1: k * c for k, c in self.coefficients.items() if k})

    def __str__(self) -> str:
        if self.is_zero:
            return '0'
        return ' + '.join(f"({c:.6g})t^{k}" for k, c in reversed(self.coefficients.items()))


def _lift(value: Union[LaurentPolynomial, Scalar]) -> LaurentPolynomial:
    return value if isinstance(value, LaurentPolynomial) else LaurentPolynomial.constant(value)


T = LaurentPolynomial.monomial(1, 1)
T_INVERSE = LaurentPolynomial.monomial(1, -1)
ZERO = LaurentPolynomial({})
ONE = LaurentPolynomial.constant(1)


def laurent_add(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    coefficients = dict(f.coefficients)
    for k, c in g.coefficients.items():
        coefficients[k] = coefficients.get(k, 0j) + c
    return LaurentPolynomial(coefficients)


def laurent_mul(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    coefficients: dict[int, complex] = {}
    for i, a in f.coefficients.items():
        for j, b in g.coefficients.items():
            coefficients[i + j] = coefficients.get(i + j, 0j) + a * b
    return LaurentPolynomial(coefficients)


def evaluate(f: LaurentPolynomial, t: Scalar) -> complex:
    if t == 0:
        if f.min_degree < 0:
            raise EvaluationError(f"cannot evaluate {f} at t = 0")
        return f.coefficient(0)
    return complex(sum(c * t ** k for k, c in f.coefficients.items()))


@dataclass(frozen=True)
class LaurentMatrix:
    """2x2 matrix of Laurent polynomials, row-major."""

    a: LaurentPolynomial
    b: LaurentPolynomial
    c: LaurentPolynomial
    d: LaurentPolynomial

    @classmethod
    def constant(cls, m: ProjectiveMatrix) -> 'LaurentMatrix':
        return cls(*(LaurentPolynomial.constant(z) for z in (m.a, m.b, m.c, m.d)))

    @classmethod
    def identity(cls) -> 'LaurentMatrix':
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def diagonal_twist(cls) -> 'LaurentMatrix':
        """T(t) = diag(t, t^-1)."""
        return cls(T, ZERO, ZERO, T_INVERSE)

    @classmethod
    def diagonal_twist_inverse(cls) -> 'LaurentMatrix':
        return cls(T_INVERSE, ZERO, ZERO, T)

    @classmethod
    def parabolic_twist(cls) -> 'LaurentMatrix':
        """T(t) = ((1, t), (0, 1)), commuting with ((1, 1), (0, 1))."""
        return cls(ONE, T, ZERO, ONE)

    @classmethod
    def parabolic_twist_inverse(cls) -> 'LaurentMatrix':
        return cls(ONE, -T, ZERO, ONE)

    def __matmul__(self, other: 'LaurentMatrix') -> 'LaurentMatrix':
        return laurent_matrix_mul(self, other)

    def trace(self) -> LaurentPolynomial:
        return self.a + self.d

    def determinant(self) -> LaurentPolynomial:
        return self.a * self.d - self.b * self.c

    def evaluate(self, t: Scalar) -> np.ndarray:
        return np.array([[evaluate(self.a, t), evaluate(self.b, t)],
                         [evaluate(self.c, t), evaluate(self.d, t)]], dtype=complex)


def laurent_matrix_mul(x: LaurentMatrix, y: LaurentMatrix) -> LaurentMatrix:
    return LaurentMatrix(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def solve_on_target(f: LaurentPolynomial, target: Scalar, tol: float = 1e-8) -> list[complex]:
    """Nonzero roots of f(t) = target.

    f - target is multiplied by t^d to clear negative exponents and the
    roots of the resulting polynomial come from numpy.roots, which takes the
    eigenvalues of its companion matrix. Every root gets one Newton step;
    roots whose residual still exceeds tol are dropped with a warning.
    """
    if f.is_constant:
        raise DegeneratePolynomialError(f"trace polynomial {f} is constant")
    g = f - target
    low, high = g.min_degree, g.max_degree
    # highest power first; the lowest stored exponent becomes t^0, so t = 0 is never a root
    coefficients = [g.coefficient(k) for k in range(high, low - 1, -1)]
    candidates = np.roots(coefficients)
    derivative = g.derivative()
    roots = []
    for t0 in candidates:
        t0 = complex(t0)
        if t0 == 0:
            continue
        slope = evaluate(derivative, t0)
        if slope != 0:
            t0 = t0 - evaluate(g, t0) / slope
        residual = abs(evaluate(f, t0) - target)
        if residual <= tol:
            roots.append(t0)
        else:
            _logger.warning(f"Dropping root {t0:.6g} of f(t) = {target}: residual {residual:.3g} > {tol:.3g}")
    _logger.debug(f"{len(roots)} of {len(candidates)} roots of f(t) = {target} verified")
    return roots
