from itertools import product

import pytest

from fieldgrid.modring import ModulusError
from fieldgrid.order import (
    KustaanheimoCertificate,
    SearchExhausted,
    Verdict,
    find_kustaanheimo_prime,
    find_three_cycle,
    legendre_is_residue,
    matches_natural_order,
    primes_3_mod_4,
    sqrt_mod,
    tournament_compare,
    transitivity_check,
)
from oracles import kustaanheimo_brute, squares_mod

TOURNAMENT_PRIMES = (3, 7, 11, 19, 23)


def test_legendre_examples():
    for p in (3, 7, 11, 23):
        assert legendre_is_residue(1, p)
    assert {x for x in range(1, 7) if legendre_is_residue(x, 7)} == {1, 2, 4} == squares_mod(7)
    assert not legendre_is_residue(3, 7)
    with pytest.raises(ValueError):
        legendre_is_residue(0, 7)
    with pytest.raises(ModulusError):
        legendre_is_residue(1, 13)


@pytest.mark.parametrize("p", (3, 7, 11, 19, 23, 71))
def test_euler_matches_enumeration(p):
    sq = squares_mod(p)
    for x in range(1, p):
        assert legendre_is_residue(x, p) == (x in sq)


def test_compare_examples():
    assert tournament_compare(4, 4, 7) is Verdict.EQUAL
    assert tournament_compare(0, 2, 7) is Verdict.LESS
    assert tournament_compare(0, 3, 7) is Verdict.GREATER
    with pytest.raises(ValueError):
        tournament_compare(0, 7, 7)


@pytest.mark.parametrize("p", TOURNAMENT_PRIMES)
def test_trichotomy_and_antisymmetry(p):
    flip = {Verdict.LESS: Verdict.GREATER, Verdict.GREATER: Verdict.LESS, Verdict.EQUAL: Verdict.EQUAL}
    for x, y in product(range(p), repeat=2):
        v = tournament_compare(x, y, p)
        assert (v is Verdict.EQUAL) == (x == y)
        assert tournament_compare(y, x, p) is flip[v]


@pytest.mark.parametrize("p", (7, 11, 19, 23))
def test_three_cycle_exists(p):
    x, y, z = find_three_cycle(p)
    sq = squares_mod(p)
    assert (y - x) % p in sq and (z - y) % p in sq and (x - z) % p in sq


def test_p3_tournament_is_a_3_cycle_itself():
    assert find_three_cycle(3) == (0, 1, 2)


def test_primes_3_mod_4_sieve():
    brute = [p for p in range(2, 5000) if p % 4 == 3 and all(p % d for d in range(2, p))]
    assert list(primes_3_mod_4(4999)) == brute
    assert list(primes_3_mod_4(4999, segment=97)) == brute
    assert list(primes_3_mod_4(2)) == []


@pytest.mark.parametrize("k,p", [(1, 3), (2, 7), (3, 23), (4, 23), (5, 71), (6, 71)])
def test_kustaanheimo_minimal_prime(k, p):
    assert kustaanheimo_brute(k) == p
    cert = find_kustaanheimo_prime(k)
    assert cert.p == p and cert.verify()


def test_cpd_prime_for_k2():
    # 1..16 must all be residues (2k^3 with k = 2)
    assert find_kustaanheimo_prime(16).p == kustaanheimo_brute(16) == 1559


def test_monotone_in_k():
    ps = [find_kustaanheimo_prime(k, 10**6).p for k in range(1, 7)]
    assert ps == sorted(ps)


def test_cap_exhaustion():
    with pytest.raises(SearchExhausted) as err:
        find_kustaanheimo_prime(5, cap=70)
    assert err.value.cap == 70


def test_certificate_formats():
    cert = find_kustaanheimo_prime(4)
    text = cert.to_text()
    assert text.splitlines()[0] == "k=4 p=23"
    assert "sqrt(4)=2" in text.splitlines()
    assert KustaanheimoCertificate.from_text(text) == cert
    assert cert.to_dict() == {"k": 4, "p": 23, "witnesses": {str(r): s for r, s in cert.witnesses.items()}}
    forged = KustaanheimoCertificate(2, 11, {1: 1, 2: 3})
    assert not forged.verify()


def test_sqrt_mod():
    for p in (7, 23, 71):
        for r in squares_mod(p):
            assert sqrt_mod(r, p) ** 2 % p == r
    with pytest.raises(ValueError):
        sqrt_mod(3, 7)


def test_transitivity():
    assert transitivity_check(7, 1)
    assert transitivity_check(23, 4) and matches_natural_order(23, 4)
    assert not transitivity_check(7, 3)
    assert not matches_natural_order(7, 3)
    with pytest.raises(ValueError):
        transitivity_check(7, 4)


@pytest.mark.parametrize("k", range(1, 7))
def test_kustaanheimo_prime_gives_linear_order(k):
    p = find_kustaanheimo_prime(k).p
    assert transitivity_check(p, k) and matches_natural_order(p, k)
