"""The quotient rings Z[i]/(m), and in particular F_{p^2} = Z[i]/(p) for p = 3 mod 4.

Elements are stored in canonical form ``re + im*i`` with both parts in ``[0, m)``.
The Manhattan norm is the graph distance from 0 in the Cayley graph of the
additive group with generators {1, i}, i.e. the torus grid C_m x C_m.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from fieldgrid.gaussian import GaussianInt


class ModulusError(ValueError):
    """Invalid modulus, modulus mismatch, or a field-only operation on a general ring."""


class ParseError(ValueError):
    pass


class ModulusKind(str, Enum):
    PRIME_3_MOD_4 = "prime-3-mod-4"
    GENERAL = "general"


def is_prime(n: int) -> bool:
    """Deterministic trial division; moduli here stay well below 10**9."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True, slots=True)
class Modulus:
    m: int
    kind: ModulusKind

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ModulusError(f"modulus must be an integer >= 2, got {self.m!r}")
        if self.kind is ModulusKind.PRIME_3_MOD_4:
            if self.m % 4 != 3 or not is_prime(self.m):
                raise ModulusError(f"{self.m} is not a prime congruent to 3 mod 4")

    @classmethod
    def prime(cls, p: int) -> Modulus:
        return cls(p, ModulusKind.PRIME_3_MOD_4)

    @classmethod
    def general(cls, m: int) -> Modulus:
        return cls(m, ModulusKind.GENERAL)

    @property
    def is_field(self) -> bool:
        return self.kind is ModulusKind.PRIME_3_MOD_4

    def require_field(self, what: str) -> None:
        if not self.is_field:
            raise ModulusError(f"{what} needs a prime modulus p = 3 mod 4, got general m={self.m}")

    def __str__(self) -> str:
        return str(self.m)


def as_modulus(m: Modulus | int) -> Modulus:
    """Plain ints become field moduli when they qualify, general ones otherwise."""
    if isinstance(m, Modulus):
        return m
    if m % 4 == 3 and is_prime(m):
        return Modulus.prime(m)
    return Modulus.general(m)


def cycle_distance(x: int, m: int) -> int:
    """Distance from 0 to x (canonical) in the m-cycle."""
    return min(x, m - x)


@dataclass(frozen=True, slots=True)
class Fp2Elem:
    re: int
    im: int
    modulus: Modulus

    def __post_init__(self):
        m = self.modulus.m
        if not (0 <= self.re < m and 0 <= self.im < m):
            raise ValueError(f"non-canonical components ({self.re}, {self.im}) mod {m}")

    @classmethod
    def make(cls, re: int, im: int, modulus: Modulus | int) -> Fp2Elem:
        mod = as_modulus(modulus)
        return cls(re % mod.m, im % mod.m, mod)

    @property
    def m(self) -> int:
        return self.modulus.m

    def _coerce(self, other: Fp2Elem | int) -> Fp2Elem:
        if isinstance(other, int):
            return Fp2Elem(other % self.m, 0, self.modulus)
        if isinstance(other, Fp2Elem):
            if other.modulus != self.modulus:
                raise ModulusError(f"modulus mismatch: {self.m} vs {other.m}")
            return other
        return NotImplemented

    def __add__(self, other: Fp2Elem | int) -> Fp2Elem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self.m
        return Fp2Elem((self.re + o.re) % m, (self.im + o.im) % m, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Fp2Elem | int) -> Fp2Elem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self.m
        return Fp2Elem((self.re - o.re) % m, (self.im - o.im) % m, self.modulus)

    def __rsub__(self, other: int) -> Fp2Elem:
        return self._coerce(other) - self

    def __neg__(self) -> Fp2Elem:
        m = self.m
        return Fp2Elem(-self.re % m, -self.im % m, self.modulus)

    def __mul__(self, other: Fp2Elem | int) -> Fp2Elem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self.m
        return Fp2Elem(
            (self.re * o.re - self.im * o.im) % m,
            (self.re * o.im + self.im * o.re) % m,
            self.modulus,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Fp2Elem:
        if e < 0:
            return inverse(self) ** (-e)
        acc = self.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def one(self) -> Fp2Elem:
        return Fp2Elem(1 % self.m, 0, self.modulus)

    def zero(self) -> Fp2Elem:
        return Fp2Elem(0, 0, self.modulus)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def conjugate(self) -> Fp2Elem:
        return conjugate(self)

    @property
    def in_prime_subfield(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        return format_element(self)


def project(z: GaussianInt, m: Modulus | int) -> Fp2Elem:
    """Reduce a Gaussian integer modulo m (the quotient map Z[i] -> Z[i]/(m))."""
    return Fp2Elem.make(z.re, z.im, m)


def lift(a: Fp2Elem) -> GaussianInt:
    """The representative of the coset with the smallest grid norm (|x| <= m/2 per part)."""
    m = a.m

    def centre(x: int) -> int:
        return x if x <= m - x else x - m

    return GaussianInt(centre(a.re), centre(a.im))


def add(a: Fp2Elem, b: Fp2Elem) -> Fp2Elem:
    return a + b


def sub(a: Fp2Elem, b: Fp2Elem) -> Fp2Elem:
    return a - b


def mul(a: Fp2Elem, b: Fp2Elem) -> Fp2Elem:
    return a * b


def neg(a: Fp2Elem) -> Fp2Elem:
    return -a


def conjugate(a: Fp2Elem) -> Fp2Elem:
    return Fp2Elem(a.re, -a.im % a.m, a.modulus)


def inverse(a: Fp2Elem) -> Fp2Elem:
    """Multiplicative inverse via (a+bi)^-1 = (a-bi) / (a^2+b^2).

    For a general modulus the element is inverted when it is a unit, i.e. when
    a^2 + b^2 is invertible mod m.
    """
    if not a:
        raise ZeroDivisionError("inverse of 0")
    m = a.m
    n = (a.re * a.re + a.im * a.im) % m
    try:
        n_inv = pow(n, -1, m)
    except ValueError:
        raise ModulusError(f"{format_element(a)} is not a unit mod {m}") from None
    return conjugate(a) * n_inv


def manhattan_norm(a: Fp2Elem) -> int:
    """Distance from 0 in the torus grid C_m x C_m (generators 1 and i)."""
    m = a.m
    return cycle_distance(a.re, m) + cycle_distance(a.im, m)


def is_square(a: Fp2Elem) -> bool:
    """Euler's criterion in F_{p^2}: a != 0 is a square iff a^((p^2-1)/2) == 1."""
    a.modulus.require_field("is_square")
    if not a:
        return True
    p = a.m
    return a ** ((p * p - 1) // 2) == a.one()


def elements(m: Modulus | int) -> Iterator[Fp2Elem]:
    """All m^2 elements, ordered by (re, im)."""
    mod = as_modulus(m)
    for x in range(mod.m):
        for y in range(mod.m):
            yield Fp2Elem(x, y, mod)


def prime_subfield(m: Modulus | int) -> Iterator[Fp2Elem]:
    mod = as_modulus(m)
    for x in range(mod.m):
        yield Fp2Elem(x, 0, mod)


def ball(m: Modulus | int, radius: int) -> list[list[Fp2Elem]]:
    """Elements grouped by exact Manhattan norm 0..radius (each shell sorted by (re, im)).

    Every element of norm d has a lift with |re| + |im| = d, so shells are built
    from integer points of the diamond and filtered by their norm after reduction.
    """
    mod = as_modulus(m)
    shells: list[list[Fp2Elem]] = []
    for d in range(radius + 1):
        found = set()
        for x in range(-d, d + 1):
            r = d - abs(x)
            for y in {r, -r}:
                e = Fp2Elem.make(x, y, mod)
                if manhattan_norm(e) == d:
                    found.add((e.re, e.im))
        shells.append([Fp2Elem(x, y, mod) for x, y in sorted(found)])
    return shells


_ELEM_RE = _re.compile(r"^(?:(\d+)(?:\+(\d+)i)?|(\d+)i)$")


def parse_element(text: str, m: Modulus | int) -> Fp2Elem:
    """Parse ``a``, ``a+bi`` or ``bi`` with canonical decimal parts in [0, m)."""
    mod = as_modulus(m)
    s = text.strip()
    match = _ELEM_RE.match(s)
    if match is None:
        raise ParseError(f"bad element token {text!r} (expected a+bi with decimal a, b)")
    if match.group(3) is not None:
        re_, im = 0, int(match.group(3))
    else:
        re_ = int(match.group(1))
        im = int(match.group(2)) if match.group(2) is not None else 0
    for part in (re_, im):
        if part >= mod.m:
            raise ParseError(f"bad element token {text!r}: component {part} not in [0, {mod.m})")
    return Fp2Elem(re_, im, mod)


def format_element(a: Fp2Elem) -> str:
    if a.im == 0:
        return str(a.re)
    return f"{a.re}+{a.im}i"
