import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from fieldgrid.gaussian import GaussianInt, grid_norm
from fieldgrid.modring import (
    Fp2Elem,
    Modulus,
    ModulusError,
    ParseError,
    ball,
    conjugate,
    elements,
    format_element,
    inverse,
    is_prime,
    is_square,
    lift,
    manhattan_norm,
    parse_element,
    project,
)
from oracles import bfs, field_grid_distances, field_squares

PRIMES = (3, 7, 11)


def E(a, b, p):
    return Fp2Elem.make(a, b, p)


def test_modulus_validation():
    assert Modulus.prime(7).is_field
    for bad in (5, 9, 15, 1):
        with pytest.raises(ModulusError):
            Modulus.prime(bad)
    assert not Modulus.general(4).is_field
    with pytest.raises(ModulusError):
        Modulus.general(1)


def test_is_prime_against_sieve():
    small = [n for n in range(200) if n > 1 and all(n % d for d in range(2, n))]
    assert [n for n in range(200) if is_prime(n)] == small


def test_project_examples():
    assert project(GaussianInt(7, 7), 7) == E(0, 0, 7)
    assert project(GaussianInt(-1, 0), 7) == E(6, 0, 7)
    a, b = GaussianInt(2, 1), GaussianInt(1, 3)
    assert project(a * b, 7) == project(a, 7) * project(b, 7) == E(6, 0, 7)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.sampled_from([3, 4, 7, 10, 11]))
def test_project_is_a_ring_homomorphism(a, b, c, d, m):
    u, z = GaussianInt(a, b), GaussianInt(c, d)
    assert project(u + z, m) == project(u, m) + project(z, m)
    assert project(u * z, m) == project(u, m) * project(z, m)


def test_ring_ops_examples():
    p = 7
    assert E(p - 1, 0, p) + E(1, 0, p) == E(0, 0, p)
    i = E(0, 1, p)
    assert i * i == E(p - 1, 0, p)
    assert E(1, 1, 3) * E(1, 1, 3) == E(0, 2, 3)
    assert -E(2, 3, 7) == E(5, 4, 7)
    assert E(2, 3, 7) - E(3, 5, 7) == E(6, 5, 7)


def test_modulus_mismatch():
    with pytest.raises(ModulusError):
        E(1, 0, 7) + E(1, 0, 11)


def test_inverse_examples():
    assert inverse(E(1, 0, 7)) == E(1, 0, 7)
    brute = [z for z in elements(7) if z * E(0, 1, 7) == E(1, 0, 7)]
    assert brute == [E(0, 6, 7)]
    assert inverse(E(0, 1, 7)) == E(0, 6, 7)
    with pytest.raises(ZeroDivisionError):
        inverse(E(0, 0, 7))


@pytest.mark.parametrize("p", PRIMES)
def test_inverse_exhaustive(p):
    for z in elements(p):
        if z:
            assert z * inverse(z) == z.one()


def test_inverse_general_modulus_non_unit():
    m = Modulus.general(4)
    with pytest.raises(ModulusError):
        inverse(Fp2Elem(2, 0, m))
    assert Fp2Elem(1, 1, Modulus.general(3 * 5)) * inverse(Fp2Elem(1, 1, Modulus.general(15))) == Fp2Elem(1, 0, Modulus.general(15))


@pytest.mark.parametrize("p", PRIMES)
def test_conjugation(p):
    for z in elements(p):
        assert conjugate(conjugate(z)) == z
        assert manhattan_norm(conjugate(z)) == manhattan_norm(z)
        assert (conjugate(z) == z) == (z.im == 0)
    assert conjugate(E(2, 3, 7)) == E(2, 4, 7)


@pytest.mark.parametrize("p", PRIMES)
def test_conjugation_is_field_automorphism(p):
    elems = list(elements(p))
    for u, z in product(elems, repeat=2):
        assert conjugate(u * z) == conjugate(u) * conjugate(z)
        assert conjugate(u + z) == conjugate(u) + conjugate(z)


def test_manhattan_norm_examples():
    assert manhattan_norm(E(0, 0, 7)) == 0
    assert manhattan_norm(E(6, 0, 7)) == 1
    assert manhattan_norm(E(3, 5, 7)) == 5


@pytest.mark.parametrize("p", PRIMES)
def test_norm_equals_bfs_on_fourth_root_graph(p):
    dist, steps = field_grid_distances(p)
    assert sorted(steps) == sorted([(1, 0), (p - 1, 0), (0, 1), (0, p - 1)])
    for z in elements(p):
        assert manhattan_norm(z) == dist[(z.re, z.im)]


@pytest.mark.parametrize("p", PRIMES)
def test_prime_subfield_is_distance_preserving(p):
    # BFS inside the induced p-cycle {im = 0}
    dist = bfs(0, lambda x: [(x + 1) % p, (x - 1) % p])
    for x in range(p):
        assert dist[x] == manhattan_norm(E(x, 0, p))


@pytest.mark.parametrize("p", PRIMES)
def test_triangle_and_submult_exhaustive(p):
    elems = list(elements(p))
    for u, z in product(elems, repeat=2):
        assert manhattan_norm(u + z) <= manhattan_norm(u) + manhattan_norm(z)
        assert manhattan_norm(u * z) <= manhattan_norm(u) * manhattan_norm(z)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.sampled_from([3, 7, 11, 4, 6]))
def test_projection_contracts_norms(a, b, m):
    z = GaussianInt(a, b)
    assert grid_norm(z) >= manhattan_norm(project(z, m))
    assert grid_norm(lift(project(z, m))) == manhattan_norm(project(z, m))


def test_even_modulus_norm():
    m = Modulus.general(6)
    assert manhattan_norm(Fp2Elem(3, 3, m)) == 6
    dist = bfs((0, 0), lambda u: [((u[0] + dx) % 6, (u[1] + dy) % 6) for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))])
    for z in elements(m):
        assert manhattan_norm(z) == dist[(z.re, z.im)]


def test_is_square_examples():
    assert is_square(E(0, 0, 3))
    squares9 = field_squares(3)
    assert (0, 1) in squares9
    assert is_square(E(0, 1, 3))
    for p in PRIMES:
        for x in range(p):
            assert is_square(E(x, 0, p))


@pytest.mark.parametrize("p", PRIMES)
def test_is_square_matches_enumeration(p):
    squares = field_squares(p)
    for z in elements(p):
        assert is_square(z) == ((z.re, z.im) in squares)


def test_field_only_ops_reject_general_modulus():
    with pytest.raises(ModulusError):
        is_square(Fp2Elem(1, 0, Modulus.general(4)))


def test_ball_shells():
    shells = ball(23, 2)
    assert [len(s) for s in shells] == [1, 4, 8]
    # wraparound for tiny p: radius exceeds the torus diameter
    shells3 = ball(3, 3)
    assert sum(len(s) for s in shells3) == 9
    assert shells3[3] == []
    for d, shell in enumerate(shells3):
        assert all(manhattan_norm(z) == d for z in shell)


@pytest.mark.parametrize("text,expected", [("3+5i", (3, 5)), ("6", (6, 0)), ("0+1i", (0, 1)), ("4i", (0, 4))])
def test_parse_element(text, expected):
    assert parse_element(text, 7) == E(*expected, 7)


@pytest.mark.parametrize("text", ["-1", "7", "3+7i", "3-2i", "x", "", "1+i", "3 + 5i"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_element(text, 7)


@pytest.mark.parametrize("p", PRIMES)
def test_format_round_trip(p):
    for z in elements(p):
        assert parse_element(format_element(z), p) == z


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_small_norm_elements_are_squares(k):
    # a+bi is a square in F_{p^2} iff a^2 + b^2 is a square in F_p; with
    # 1..2k^2 all residues every element of norm <= k qualifies
    from fieldgrid.order import find_kustaanheimo_prime

    p = find_kustaanheimo_prime(2 * k * k).p
    for shell in ball(p, k):
        for z in shell:
            assert is_square(z)
