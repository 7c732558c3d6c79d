"""The quadratic residue tournament on F_p and the search for primes making it a
linear order on {0, 1, ..., k}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from fieldgrid.modring import Modulus, as_modulus

DEFAULT_CAP = 10**8


class SearchExhausted(RuntimeError):
    def __init__(self, k: int, cap: int):
        super().__init__(f"no prime p = 3 mod 4 up to cap={cap} has 1..{k} all quadratic residues")
        self.k = k
        self.cap = cap


class Verdict(str, Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"


def _field_prime(p: Modulus | int) -> int:
    mod = as_modulus(p)
    mod.require_field("the residue tournament")
    return mod.m


def legendre_is_residue(x: int, p: Modulus | int) -> bool:
    """Euler's criterion: x != 0 is a square mod p iff x^((p-1)/2) == 1."""
    p = _field_prime(p)
    x %= p
    if x == 0:
        raise ValueError("0 is neither a residue nor a non-residue here")
    return pow(x, (p - 1) // 2, p) == 1


def tournament_compare(x: int, y: int, p: Modulus | int) -> Verdict:
    """x <_p y iff y - x is a non-zero square mod p."""
    p = _field_prime(p)
    if not (0 <= x < p and 0 <= y < p):
        raise ValueError(f"{x}, {y} must lie in [0, {p})")
    if x == y:
        return Verdict.EQUAL
    return Verdict.LESS if legendre_is_residue(y - x, p) else Verdict.GREATER


def less(x: int, y: int, p: int) -> bool:
    return tournament_compare(x, y, p) is Verdict.LESS


def leq(x: int, y: int, p: int) -> bool:
    return tournament_compare(x, y, p) is not Verdict.GREATER


def residues(p: int) -> set[int]:
    """Non-zero squares mod p by enumeration (independent of Euler's criterion)."""
    return {s * s % p for s in range(1, p)}


def sqrt_mod(r: int, p: int) -> int:
    """Square root of a residue when p = 3 mod 4: r^((p+1)/4)."""
    s = pow(r, (p + 1) // 4, p)
    if s * s % p != r % p:
        raise ValueError(f"{r} is not a quadratic residue mod {p}")
    return min(s, p - s)


def _base_primes(limit: int) -> np.ndarray:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve)


def primes_3_mod_4(cap: int, segment: int = 1 << 18) -> Iterator[int]:
    """Primes p <= cap with p = 3 mod 4, ascending, from a segmented sieve."""
    if cap < 3:
        return
    base = _base_primes(math.isqrt(cap) + 1)
    lo = 2
    while lo <= cap:
        hi = min(lo + segment, cap + 1)
        mark = np.ones(hi - lo, dtype=bool)
        for q in base:
            q = int(q)
            if q * q >= hi:
                break
            start = max(q * q, (lo + q - 1) // q * q)
            mark[start - lo :: q] = False
        for off in np.flatnonzero(mark):
            n = lo + int(off)
            if n % 4 == 3:
                yield n
        lo = hi


@dataclass(frozen=True)
class KustaanheimoCertificate:
    k: int
    p: int
    witnesses: dict  # r -> s with s^2 = r mod p

    def verify(self) -> bool:
        return (
            self.p % 4 == 3
            and 2 * self.k <= self.p - 1
            and sorted(self.witnesses) == list(range(1, self.k + 1))
            and all(s * s % self.p == r for r, s in self.witnesses.items())
        )

    def to_text(self) -> str:
        lines = [f"k={self.k} p={self.p}"]
        lines.extend(f"sqrt({r})={s}" for r, s in sorted(self.witnesses.items()))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> KustaanheimoCertificate:
        head, *rest = [ln for ln in text.splitlines() if ln.strip()]
        fields = dict(tok.split("=", 1) for tok in head.split())
        witnesses = {}
        for ln in rest:
            lhs, rhs = ln.split("=", 1)
            witnesses[int(lhs[len("sqrt(") : -1])] = int(rhs)
        return cls(int(fields["k"]), int(fields["p"]), witnesses)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "witnesses": {str(r): s for r, s in sorted(self.witnesses.items())},
        }


def _all_residues(k: int, p: int) -> bool:
    if 2 * k > p - 1:
        return False
    e = (p - 1) // 2
    return all(pow(r, e, p) == 1 for r in range(2, k + 1))


def find_kustaanheimo_prime(k: int, cap: int = DEFAULT_CAP) -> KustaanheimoCertificate:
    """Smallest prime p <= cap, p = 3 mod 4, with every r in 1..k a quadratic residue."""
    if k < 1:
        raise ValueError("k must be positive")
    for p in primes_3_mod_4(cap):
        if _all_residues(k, p):
            return KustaanheimoCertificate(k, p, {r: sqrt_mod(r, p) for r in range(1, k + 1)})
    raise SearchExhausted(k, cap)


def transitivity_check(p: int, k: int) -> bool:
    """Whether <=_p restricted to {0..k} is transitive (checked over all ordered triples)."""
    p = _field_prime(p)
    if not 1 <= k <= (p - 1) // 2:
        raise ValueError(f"need 1 <= k <= (p-1)/2, got k={k}, p={p}")
    for x, y, z in permutations(range(k + 1), 3):
        if leq(x, y, p) and leq(y, z, p) and not leq(x, z, p):
            return False
    return True


def matches_natural_order(p: int, k: int) -> bool:
    return all(less(x, y, p) for x, y in combinations(range(k + 1), 2))


def find_three_cycle(p: int) -> tuple[int, int, int] | None:
    """First (x, y, z) in lexicographic order with x <_p y <_p z <_p x."""
    p = _field_prime(p)
    res = residues(p)
    for x in range(p):
        for y in range(p):
            if (y - x) % p not in res:
                continue
            for z in range(p):
                if (z - y) % p in res and (x - z) % p in res:
                    return x, y, z
    return None
