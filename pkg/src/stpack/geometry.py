"""Exact rational scalars, plane vectors, integer matrices and SL2(Z)-lengths.

Every quantity is a :class:`fractions.Fraction`; floats are refused at the
boundary so that nothing downstream can silently lose precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

RationalLike = Union[int, Fraction, str]


def as_rational(value) -> Fraction:
    """Convert ``value`` to a Fraction, rejecting floats and other inexact input."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in ".eE"):
            raise ValueError(f"decimal literal {value!r} is not an exact fraction")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, slots=True)
class Vec2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, t) -> Vec2:
        t = as_rational(t)
        return Vec2(self.x * t, self.y * t)

    __rmul__ = __mul__

    def dot(self, other: Vec2) -> Fraction:
        return self.x * other.x + self.y * other.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def key(self):
        """Lexicographic sort key: x first, then y."""
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"({format_rational(self.x)},{format_rational(self.y)})"

    def __repr__(self) -> str:
        return f"Vec2{self}"


def vec(x: RationalLike, y: RationalLike) -> Vec2:
    return Vec2(as_rational(x), as_rational(y))


def det(u: Vec2, v: Vec2) -> Fraction:
    """Determinant of the matrix with columns ``u`` and ``v``."""
    return u.x * v.y - u.y * v.x


@dataclass(frozen=True, slots=True)
class IntMat2:
    """Integer 2x2 matrix ``(m11 m12; m21 m22)``.

    With ``sl2=True`` the determinant is checked to be exactly 1.
    """

    m11: int
    m12: int
    m21: int
    m22: int
    sl2: bool = False

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22"):
            value = getattr(self, name)
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{name}={value} is not an integer")
                object.__setattr__(self, name, value.numerator)
            elif not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an integer")
        if self.sl2 and self.determinant() != 1:
            raise ValueError(f"matrix {self} has determinant {self.determinant()}, not 1")

    def determinant(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, v: Vec2) -> Vec2:
        return Vec2(self.m11 * v.x + self.m12 * v.y, self.m21 * v.x + self.m22 * v.y)

    __call__ = apply

    def __matmul__(self, other: IntMat2) -> IntMat2:
        return IntMat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
            sl2=self.sl2 and other.sl2,
        )

    def inverse(self) -> IntMat2:
        d = self.determinant()
        if d not in (1, -1):
            raise ValueError("matrix is not invertible over the integers")
        return IntMat2(self.m22 * d, -self.m12 * d, -self.m21 * d, self.m11 * d, sl2=self.sl2)

    def transpose(self) -> IntMat2:
        return IntMat2(self.m11, self.m21, self.m12, self.m22, sl2=self.sl2)

    def power(self, k: int) -> IntMat2:
        base = self if k >= 0 else self.inverse()
        result = IDENTITY
        for _ in range(abs(k)):
            result = result @ base
        return result

    def __str__(self) -> str:
        return f"({self.m11} {self.m12}; {self.m21} {self.m22})"


IDENTITY = IntMat2(1, 0, 0, 1, sl2=True)
SHEAR_T = IntMat2(1, 0, 1, 1, sl2=True)
ROTATE_S = IntMat2(0, 1, -1, 0, sl2=True)


def shear_power(k: int) -> IntMat2:
    """``T**k`` for the unipotent shear ``T = (1 0; 1 1)``; ``T**k = (1 0; k 1)``."""
    return IntMat2(1, 0, k, 1, sl2=True)


@dataclass(frozen=True, slots=True)
class AffineMap:
    """``p -> linear(p) + offset`` with an integer unimodular linear part."""

    linear: IntMat2
    offset: Vec2

    def apply(self, p: Vec2) -> Vec2:
        return self.linear.apply(p) + self.offset

    __call__ = apply

    def inverse(self) -> AffineMap:
        inv = self.linear.inverse()
        return AffineMap(inv, -inv.apply(self.offset))

    def compose(self, inner: AffineMap) -> AffineMap:
        """``self ∘ inner``."""
        return AffineMap(self.linear @ inner.linear, self.linear.apply(inner.offset) + self.offset)


IDENTITY_MAP = AffineMap(IDENTITY, Vec2(0, 0))


def _integer_components(v: Vec2) -> tuple[int, int]:
    if not v.is_integral():
        raise ValueError(f"vector {v} does not have integer components")
    return v.x.numerator, v.y.numerator


def gcd_length(v: Vec2) -> Fraction:
    """SL2(Z)-length of an integer vector, i.e. ``gcd(|x|, |y|)``."""
    x, y = _integer_components(v)
    return Fraction(math.gcd(x, y))


def primitive_direction(v: Vec2) -> tuple[Vec2, Fraction]:
    """Return ``(w, t)`` with ``w`` primitive integral, ``t > 0`` and ``v = t*w``."""
    if v.is_zero():
        raise ValueError("the zero vector has no direction")
    scale = v.x.denominator * v.y.denominator // math.gcd(v.x.denominator, v.y.denominator)
    ix, iy = int(v.x * scale), int(v.y * scale)
    g = math.gcd(ix, iy)
    w = Vec2(ix // g, iy // g)
    return w, Fraction(g, scale)


def sl2z_length(v: Vec2) -> Fraction:
    if v.is_zero():
        return Fraction(0)
    return primitive_direction(v)[1]


def sl2z_normalizer(w: Vec2) -> IntMat2:
    """An SL2(Z) matrix sending the primitive vector ``w`` to ``(1, 0)``.

    Rows are a Bezout pair ``(x, y)`` with ``x*w1 + y*w2 = 1`` and ``(-w2, w1)``.
    """
    w1, w2 = _integer_components(w)
    g, x, y = _xgcd(w1, w2)
    if g != 1:
        raise ValueError(f"vector {w} is not primitive")
    return IntMat2(x, y, -w2, w1, sl2=True)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y = g = gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lex_min(points: Iterable[Vec2]) -> Vec2:
    return min(points, key=Vec2.key)
