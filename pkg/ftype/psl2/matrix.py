from cmath import cos, exp, pi
from dataclasses import InitVar, dataclass
from typing import Any

import numpy as np

from ..errors import SingularMatrixError

# |det| below SINGULAR * |M|^2 counts as singular
SINGULAR = 1e-14
# products of unit matrices keep their lift while |det - 1| <= DRIFT * |M|^2
DRIFT = 1e-8

_IDENTITY = np.eye(2, dtype=complex)


@dataclass(frozen=True, eq=False)
class ProjectiveMatrix:
    """An element of PSL(2,C), stored as an SL(2,C) lift.

    Constructors divide by a square root of the determinant, so the stored
    lift has det 1 up to rounding; equality and identity tests are modulo ±I.
    Products of such lifts pass `unimodular=True`: their determinant is known
    to be 1 and is only recomputed to catch drift, since for large entries the
    computed value is dominated by cancellation.
    """

    entries: np.ndarray
    unimodular: InitVar[bool] = False

    def __post_init__(self, unimodular: bool):
        entries = np.array(self.entries, dtype=complex).reshape(2, 2)
        if not np.all(np.isfinite(entries)):
            raise SingularMatrixError(f"Matrix has non-finite entries: {entries.tolist()}")
        det = entries[0, 0] * entries[1, 1] - entries[0, 1] * entries[1, 0]
        scale = max(float(np.sum(np.abs(entries) ** 2)), 1.0)
        if not (unimodular and abs(det - 1) <= DRIFT * scale):
            if abs(det) <= SINGULAR * scale:
                raise SingularMatrixError(f"Matrix is not invertible (det = {det})")
            entries = entries / np.sqrt(det)
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def of(cls, a: complex, b: complex, c: complex, d: complex) -> 'ProjectiveMatrix':
        return cls(np.array([[a, b], [c, d]], dtype=complex))

    @classmethod
    def identity(cls) -> 'ProjectiveMatrix':
        return cls(_IDENTITY)

    @classmethod
    def diagonal(cls, s: complex) -> 'ProjectiveMatrix':
        return cls.of(s, 0, 0, 1 / s)

    @classmethod
    def rotation(cls, order: int) -> 'ProjectiveMatrix':
        """diag(e^(i pi/order), e^(-i pi/order)): an elliptic of exact order `order`, trace 2cos(pi/order)."""
        return cls.diagonal(exp(1j * pi / order))

    @property
    def a(self) -> complex:
        return complex(self.entries[0, 0])

    @property
    def b(self) -> complex:
        return complex(self.entries[0, 1])

    @property
    def c(self) -> complex:
        return complex(self.entries[1, 0])

    @property
    def d(self) -> complex:
        return complex(self.entries[1, 1])

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def det_residual(self) -> float:
        return abs(self.det - 1)

    def __matmul__(self, other: 'ProjectiveMatrix') -> 'ProjectiveMatrix':
        return mul(self, other)

    def __pow__(self, k: int) -> 'ProjectiveMatrix':
        return power(self, k)

    def __invert__(self) -> 'ProjectiveMatrix':
        return inv(self)

    def __repr__(self) -> str:
        return f"ProjectiveMatrix({self.a:.6g}, {self.b:.6g}, {self.c:.6g}, {self.d:.6g})"

    def conjugate_by(self, g: 'ProjectiveMatrix') -> 'ProjectiveMatrix':
        """g M g^-1."""
        return mul(mul(g, self), inv(g))

    def distance(self, other: 'ProjectiveMatrix') -> float:
        """Frobenius distance modulo ±I."""
        return float(min(
            np.linalg.norm(self.entries - other.entries),
            np.linalg.norm(self.entries + other.entries),
        ))

    def distance_to_identity(self) -> float:
        return self.distance(IDENTITY)

    def equals(self, other: 'ProjectiveMatrix', tol: float) -> bool:
        return self.distance(other) <= tol

    def is_identity(self, tol: float) -> bool:
        return self.distance_to_identity() <= tol

    def to_json(self) -> dict[str, Any]:
        return {
            'entries': [[float(z.real), float(z.imag)] for z in self.entries.flatten()],
            'det_residual': self.det_residual,
        }


IDENTITY = ProjectiveMatrix.identity()


def mul(x: ProjectiveMatrix, y: ProjectiveMatrix) -> ProjectiveMatrix:
    return ProjectiveMatrix(x.entries @ y.entries, unimodular=True)


def inv(x: ProjectiveMatrix) -> ProjectiveMatrix:
    return ProjectiveMatrix(np.array([[x.d, -x.b], [-x.c, x.a]]), unimodular=True)


def power(x: ProjectiveMatrix, k: int) -> ProjectiveMatrix:
    if k < 0:
        return power(inv(x), -k)
    return ProjectiveMatrix(np.linalg.matrix_power(x.entries, k), unimodular=True)


def trace(x: ProjectiveMatrix) -> complex:
    """Trace of the stored lift; the projective trace is this up to sign."""
    return x.a + x.d


def commutator_trace(x: ProjectiveMatrix, y: ProjectiveMatrix) -> complex:
    """tr(x y x^-1 y^-1), independent of the lifts."""
    return trace(mul(mul(x, y), mul(inv(x), inv(y))))


def irreducibility_margin(x: ProjectiveMatrix, y: ProjectiveMatrix) -> float:
    return abs(commutator_trace(x, y) - 2)


def is_irreducible_pair(x: ProjectiveMatrix, y: ProjectiveMatrix, tol: float) -> bool:
    """No common fixed point, that is tr[x, y] != 2 by more than tol."""
    return irreducibility_margin(x, y) > tol


def order_margins(x: ProjectiveMatrix, m: int) -> tuple[float, float]:
    """(distance of x^m from ±I, smallest distance of x^j from ±I for 1 <= j < m)."""
    current = IDENTITY
    nearest = float('inf')
    for _ in range(1, m):
        current = mul(current, x)
        nearest = min(nearest, current.distance_to_identity())
    return mul(current, x).distance_to_identity(), nearest


def has_order(x: ProjectiveMatrix, m: int, tol: float) -> bool:
    """x^m = ±I and no smaller positive power is, both within tol."""
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    reached, nearest = order_margins(x, m)
    return reached <= tol and nearest > tol


def elliptic_trace(m: int, q: int = 1) -> complex:
    return 2 * cos(pi * q / m)
