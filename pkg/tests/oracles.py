"""Brute-force references built on raw integer tuples, independent of fieldgrid."""

from collections import deque
from itertools import product


def cmul(a, b, m=None):
    re = a[0] * b[0] - a[1] * b[1]
    im = a[0] * b[1] + a[1] * b[0]
    return (re % m, im % m) if m else (re, im)


def fourth_power_is_one(d, m=None):
    sq = cmul(d, d, m)
    return cmul(sq, sq, m) == (1, 0)


def bfs(start, neighbours):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in neighbours(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def field_grid_distances(p):
    """Distances from 0 in F_{p^2} where u ~ z iff (z - u)^4 == 1."""
    steps = [d for d in product(range(p), repeat=2) if fourth_power_is_one(d, p)]
    return bfs((0, 0), lambda u: [((u[0] + d[0]) % p, (u[1] + d[1]) % p) for d in steps]), steps


def gaussian_grid_distances(radius):
    """Distances from 0 in Z[i] restricted to the box |re|, |im| <= 2*radius."""
    steps = [d for d in product(range(-2, 3), repeat=2) if fourth_power_is_one(d)]
    box = 2 * radius

    def nb(u):
        for d in steps:
            v = (u[0] + d[0], u[1] + d[1])
            if abs(v[0]) <= box and abs(v[1]) <= box:
                yield v

    return bfs((0, 0), nb), steps


def squares_mod(p):
    return {s * s % p for s in range(1, p)}


def field_squares(p):
    return {cmul(w, w, p) for w in product(range(p), repeat=2)}


def kustaanheimo_brute(k, limit=10**5):
    for p in range(3, limit):
        if p % 4 == 3 and all(p % d for d in range(2, int(p**0.5) + 1)):
            if set(range(1, k + 1)) <= squares_mod(p):
                return p
    return None
