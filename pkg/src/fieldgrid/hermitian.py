"""Vectors over Z[i]/(m), the Hermitian inner product and the vector Manhattan norm."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from fieldgrid.modring import (
    Fp2Elem,
    Modulus,
    ModulusError,
    ParseError,
    as_modulus,
    ball,
    format_element,
    inverse,
    manhattan_norm,
    parse_element,
)
from fieldgrid.order import legendre_is_residue


@dataclass(frozen=True)
class HVector:
    components: tuple
    modulus: Modulus

    def __post_init__(self):
        if len(self.components) < 1:
            raise ValueError("vectors need at least one component")
        for c in self.components:
            if not isinstance(c, Fp2Elem) or c.modulus != self.modulus:
                raise ModulusError("all components must share the vector's modulus")

    @classmethod
    def of(cls, comps: Sequence[Fp2Elem | int | tuple[int, int]], modulus: Modulus | int) -> HVector:
        mod = as_modulus(modulus)
        out = []
        for c in comps:
            if isinstance(c, Fp2Elem):
                out.append(c)
            elif isinstance(c, tuple):
                out.append(Fp2Elem.make(c[0], c[1], mod))
            else:
                out.append(Fp2Elem.make(c, 0, mod))
        return cls(tuple(out), mod)

    @classmethod
    def zero(cls, n: int, modulus: Modulus | int) -> HVector:
        return cls.of([0] * n, modulus)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> Fp2Elem:
        return self.components[i]

    def _check(self, other: HVector) -> None:
        if len(other) != len(self):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        if other.modulus != self.modulus:
            raise ModulusError(f"modulus mismatch: {self.modulus.m} vs {other.modulus.m}")

    def __add__(self, other: HVector) -> HVector:
        self._check(other)
        return HVector(tuple(a + b for a, b in zip(self, other)), self.modulus)

    def __sub__(self, other: HVector) -> HVector:
        self._check(other)
        return HVector(tuple(a - b for a, b in zip(self, other)), self.modulus)

    def __neg__(self) -> HVector:
        return HVector(tuple(-a for a in self), self.modulus)

    def scale(self, c: Fp2Elem | int) -> HVector:
        return HVector(tuple(c * a for a in self), self.modulus)

    def __rmul__(self, c: Fp2Elem | int) -> HVector:
        return self.scale(c)

    def __bool__(self) -> bool:
        return any(self.components)

    def __str__(self) -> str:
        return format_vector(self)


def inner_product(v: HVector, w: HVector) -> Fp2Elem:
    """v . w = sum_j v_j * conj(w_j)."""
    v._check(w)
    acc = v[0].zero()
    for a, b in zip(v, w):
        acc = acc + a * b.conjugate()
    return acc


def vector_norm(v: HVector) -> int:
    return sum(manhattan_norm(c) for c in v)


def _as_scalar(z: Fp2Elem, what: str) -> int:
    if z.im != 0:
        raise AssertionError(f"{what} = {z} left the prime subfield")
    return z.re


def self_product_value(v: HVector) -> int:
    """v . v, which always lies in F_p; returned as an integer in [0, p)."""
    v.modulus.require_field("self_product_value")
    return _as_scalar(inner_product(v, v), "v.v")


def cs_sides(v: HVector, w: HVector) -> tuple[int, int]:
    """((v.w)(w.v), (v.v)(w.w)) as F_p scalars."""
    vw = inner_product(v, w)
    lhs = _as_scalar(vw * vw.conjugate(), "(v.w)(w.v)")
    rhs = _as_scalar(inner_product(v, v) * inner_product(w, w), "(v.v)(w.w)")
    return lhs, rhs


def minors(v: HVector, w: HVector) -> Iterator[tuple[int, int, Fp2Elem]]:
    for i, j in combinations(range(len(v)), 2):
        yield i, j, v[i] * w[j] - v[j] * w[i]


def cs_difference_product(v: HVector, w: HVector) -> int:
    lhs, rhs = cs_sides(v, w)
    return (rhs - lhs) % v.modulus.m


def cs_difference_lagrange(v: HVector, w: HVector) -> int:
    """sum over i < j of |v_i w_j - v_j w_i|^2 (norm form z * conj(z))."""
    v._check(w)
    acc = v[0].zero()
    for _, _, d in minors(v, w):
        acc = acc + d * d.conjugate()
    return _as_scalar(acc, "Lagrange sum")


def cs_difference(v: HVector, w: HVector) -> int:
    """(v.v)(w.w) - (v.w)(w.v) in F_p, cross-checked against the minor sum under assert."""
    v._check(w)
    v.modulus.require_field("cs_difference")
    d = cs_difference_product(v, w)
    assert d == cs_difference_lagrange(v, w), "Lagrange identity broken"
    return d


def proportionality_scalar(v: HVector, w: HVector) -> tuple[str, Fp2Elem] | None:
    """A witness ('v=cw', c) or ('w=cv', c), or None when v and w are not proportional."""
    v._check(w)
    v.modulus.require_field("proportionality")
    for first, second, tag in ((v, w, "v=cw"), (w, v, "w=cv")):
        k = next((i for i, x in enumerate(second) if x), None)
        if k is None:
            # second is the zero vector: first = c*second only if first is zero too
            if not first:
                return tag, first[0].zero()
            continue
        c = first[k] * inverse(second[k])
        if second.scale(c) == first:
            return tag, c
    return None


def is_proportional(v: HVector, w: HVector) -> bool:
    by_minors = all(not d for _, _, d in minors(v, w))
    witness = proportionality_scalar(v, w)
    if by_minors != (witness is not None):
        raise AssertionError("minor test and scalar recovery disagree")
    return by_minors


def norm_submultiplicativity_check(v: HVector, w: HVector) -> bool:
    """N(v . w) <= N(v) N(w); meaningful for any modulus, field or not."""
    return manhattan_norm(inner_product(v, w)) <= vector_norm(v) * vector_norm(w)


def minus_one_as_two_squares(p: int) -> tuple[int, int]:
    """Lexicographically smallest (a, b) in [0, p)^2 with a^2 + b^2 = -1 mod p."""
    for a in range(p):
        for b in range(p):
            if (a * a + b * b + 1) % p == 0:
                return a, b
    raise ValueError(f"-1 is not a sum of two squares mod {p}")


COUNTEREXAMPLE_KINDS = ("complex-n2", "real-n3")


def counterexample_pair(kind: str, p: Modulus | int, n: int | None = None) -> tuple[HVector, HVector]:
    """Vectors violating the tournament Cauchy-Schwarz inequality.

    complex-n2: v = (a, b, 0, ...), w = (b z, -a z, 0, ...) with z = a + bi.
    real-n3:    v = (1, a, b, 0, ...), w = (1, 0, 0, ...), all in the prime subfield.
    In both, a^2 + b^2 = -1.
    """
    mod = as_modulus(p)
    mod.require_field("counterexample_pair")
    a, b = minus_one_as_two_squares(mod.m)
    if kind == "complex-n2":
        n = 2 if n is None else n
        if n < 2:
            raise ValueError("complex-n2 needs n >= 2")
        z = Fp2Elem.make(a, b, mod)
        v = [a, b] + [0] * (n - 2)
        w = [z * b, -(z * a)]
        return HVector.of(v, mod), HVector.of(w + [0] * (n - 2), mod)
    if kind == "real-n3":
        n = 3 if n is None else n
        if n < 3:
            raise ValueError("real-n3 needs n >= 3")
        return HVector.of([1, a, b] + [0] * (n - 3), mod), HVector.of([1] + [0] * (n - 1), mod)
    raise ValueError(f"unknown counterexample kind {kind!r}")


def tournament_cs_holds(v: HVector, w: HVector) -> bool:
    """(v.w)(w.v) <=_p (v.v)(w.w), i.e. the difference is 0 or a non-zero square."""
    d = cs_difference(v, w)
    return d == 0 or legendre_is_residue(d, v.modulus)


def vectors_within(n: int, radius: int, modulus: Modulus | int) -> Iterator[HVector]:
    """All vectors of length n with vector_norm <= radius, each exactly once.

    Coordinates are drawn from per-norm shells with the remaining budget pruned.
    """
    mod = as_modulus(modulus)
    shells = ball(mod, radius)

    def rec(i: int, budget: int, prefix: list):
        if i == n:
            yield HVector(tuple(prefix), mod)
            return
        for d in range(min(budget, radius) + 1):
            for e in shells[d]:
                prefix.append(e)
                yield from rec(i + 1, budget - d, prefix)
                prefix.pop()

    yield from rec(0, radius, [])


def all_vectors(n: int, modulus: Modulus | int, real: bool = False) -> Iterator[HVector]:
    """Every vector in (Z[i]/m)^n, or in (Z/m)^n when ``real``."""
    mod = as_modulus(modulus)
    m = mod.m
    coords = [Fp2Elem(x, 0, mod) for x in range(m)] if real else [
        Fp2Elem(x, y, mod) for x in range(m) for y in range(m)
    ]

    def rec(prefix: list):
        if len(prefix) == n:
            yield HVector(tuple(prefix), mod)
            return
        for c in coords:
            prefix.append(c)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def parse_vector(text: str, modulus: Modulus | int) -> HVector:
    mod = as_modulus(modulus)
    parts = text.split(",")
    if any(not p.strip() for p in parts):
        raise ParseError(f"empty component in vector {text!r}")
    return HVector(tuple(parse_element(p, mod) for p in parts), mod)


def format_vector(v: HVector) -> str:
    return ",".join(format_element(c) for c in v)
