"""Quaternion algebra: Hamilton products, polar form, axis exponentials.

Scalars are represented by the frozen :class:`Quaternion` dataclass with
component order (scalar, i, j, k).  Sampled signals store their values as
numpy arrays of shape ``(..., 4)`` in the same component order; the
``q*``-prefixed module functions operate on those arrays and broadcast like
ordinary numpy ufuncs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class DegenerateAxisError(ValueError):
    """Polar decomposition of a real quaternion has no canonical axis."""


@dataclass(frozen=True)
class Quaternion:
    """A quaternion q0 + i*q1 + j*q2 + k*q3 with 64-bit float components."""

    q0: float
    q1: float
    q2: float
    q3: float

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        a = np.asarray(a, dtype=float)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @property
    def array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3])

    @property
    def scalar(self) -> float:
        return self.q0

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.q1, self.q2, self.q3])

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm(self) -> float:
        return math.sqrt(self.q0 ** 2 + self.q1 ** 2 + self.q2 ** 2 + self.q3 ** 2)

    def inverse(self) -> "Quaternion":
        n2 = self.q0 ** 2 + self.q1 ** 2 + self.q2 ** 2 + self.q3 ** 2
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion(self.q0 / n2, -self.q1 / n2, -self.q2 / n2, -self.q3 / n2)

    def __add__(self, other):
        other = _coerce(other)
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __neg__(self):
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.q0 * other, self.q1 * other,
                              self.q2 * other, self.q3 * other)
        other = _coerce(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return _coerce(other).__mul__(self)

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(1.0 / other)
        return self * _coerce(other).inverse()

    def isclose(self, other, tol=1e-12) -> bool:
        other = _coerce(other)
        return bool(np.all(np.abs(self.array - other.array) <= tol))


def _coerce(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(float(value), 0.0, 0.0, 0.0)
    if isinstance(value, PureUnit):
        return value.quaternion
    raise TypeError(f"cannot interpret {type(value).__name__} as a quaternion")


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q (non-commutative)."""
    return Quaternion(
        p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
        p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
        p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
        p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0,
    )


@dataclass(frozen=True)
class PureUnit:
    """A pure unit quaternion axis: zero scalar part, unit norm, squares to -1.

    The constructor normalizes the supplied vector part, so callers may pass
    any nonzero direction.
    """

    x: float
    y: float
    z: float

    def __post_init__(self):
        n = math.sqrt(self.x ** 2 + self.y ** 2 + self.z ** 2)
        if n == 0.0 or not math.isfinite(n):
            raise ValueError("pure unit axis requires a nonzero finite vector part")
        object.__setattr__(self, "x", self.x / n)
        object.__setattr__(self, "y", self.y / n)
        object.__setattr__(self, "z", self.z / n)

    @property
    def quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    @property
    def array(self) -> np.ndarray:
        return np.array([0.0, self.x, self.y, self.z])

    def __eq__(self, other):
        if not isinstance(other, PureUnit):
            return NotImplemented
        return self.x == other.x and self.y == other.y and self.z == other.z


UNIT_I = PureUnit(1.0, 0.0, 0.0)
UNIT_J = PureUnit(0.0, 1.0, 0.0)
UNIT_K = PureUnit(0.0, 0.0, 1.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)


def polar(q: Quaternion, fallback_axis: PureUnit | None = None):
    """Decompose q = magnitude * (cos(angle) + axis*sin(angle)).

    Returns ``(magnitude, axis, angle)`` with ``angle`` in [0, pi].  When the
    vector part vanishes (q real) there is no canonical axis; the caller must
    supply ``fallback_axis`` or a :class:`DegenerateAxisError` is raised.
    """
    vec = q.vector
    vnorm = math.sqrt(float(vec @ vec))
    mag = q.norm()
    angle = math.atan2(vnorm, q.scalar)
    if vnorm <= 1e-300:
        if fallback_axis is None:
            raise DegenerateAxisError(
                "quaternion has (numerically) zero vector part; pass fallback_axis")
        return mag, fallback_axis, angle
    axis = PureUnit(float(vec[0]), float(vec[1]), float(vec[2]))
    return mag, axis, angle


def axis_exp(axis: PureUnit, theta: float) -> Quaternion:
    """exp(axis*theta) = cos(theta) + axis*sin(theta); always unit norm."""
    c, s = math.cos(theta), math.sin(theta)
    return Quaternion(c, s * axis.x, s * axis.y, s * axis.z)


def inv_sqrt_unit(axis: PureUnit) -> Quaternion:
    """The reciprocal square root exp(-axis*pi/4) = (sqrt(2)/2)(1 - axis)."""
    return axis_exp(axis, -math.pi / 4.0)


# ---------------------------------------------------------------------------
# Array operations on (..., 4) component stacks.

def qmul(a, b) -> np.ndarray:
    """Hamilton product of component arrays, broadcasting over leading axes."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a0, a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    b0, b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    out = np.empty(np.broadcast_shapes(a.shape, b.shape), dtype=float)
    out[..., 0] = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3
    out[..., 1] = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2
    out[..., 2] = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1
    out[..., 3] = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0
    return out


def qconj(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    out = a.copy()
    out[..., 1:] *= -1.0
    return out


def qnorm(a) -> np.ndarray:
    """Pointwise quaternion modulus |q|_Q of a component stack."""
    a = np.asarray(a, dtype=float)
    return np.sqrt(np.sum(a * a, axis=-1))


def plane_to_quat(z, axis: PureUnit) -> np.ndarray:
    """Embed complex values x + iy as quaternions x + axis*y."""
    z = np.asarray(z)
    out = np.zeros(z.shape + (4,), dtype=float)
    out[..., 0] = z.real
    out[..., 1] = axis.x * z.imag
    out[..., 2] = axis.y * z.imag
    out[..., 3] = axis.z * z.imag
    return out


def left_mul(q: Quaternion | PureUnit, field: np.ndarray) -> np.ndarray:
    """Constant left multiplication q * field over a component stack."""
    q = _coerce(q)
    return qmul(q.array, field)


def right_mul(field: np.ndarray, q: Quaternion | PureUnit) -> np.ndarray:
    """Constant right multiplication field * q over a component stack."""
    q = _coerce(q)
    return qmul(field, q.array)
