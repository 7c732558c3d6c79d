"""Exact arithmetic on the Gaussian integers and the infinite Manhattan grid."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """``re + im*i`` with unbounded Python integers (no reduction is ever applied)."""

    re: int
    im: int = 0

    @classmethod
    def coerce(cls, x: GaussianInt | int) -> GaussianInt:
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianInt")

    def __add__(self, other: GaussianInt | int) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: GaussianInt | int) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: int) -> GaussianInt:
        return GaussianInt.coerce(other) - self

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: GaussianInt | int) -> GaussianInt:
        o = GaussianInt.coerce(other)
        return GaussianInt(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"{self.re}{self.im:+d}i"


I = GaussianInt(0, 1)
UNIT_STEPS = (GaussianInt(1, 0), GaussianInt(-1, 0), GaussianInt(0, 1), GaussianInt(0, -1))


def add(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    return a + b


def mul(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    return a * b


def grid_norm(z: GaussianInt) -> int:
    """Graph distance from 0 when u, z are adjacent iff (z - u)**4 == 1.

    The neighbours of a point are the four unit steps, so the distance is |re| + |im|.
    """
    return abs(z.re) + abs(z.im)
