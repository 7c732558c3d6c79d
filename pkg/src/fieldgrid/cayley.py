"""Finite groups, left Cayley graphs, graph quotients and coset representatives.

Graphs are undirected, unweighted and may carry loops. Vertices are indexed
0..n-1 and keep a hashable label; adjacency is a tuple of frozensets of indices
(a loop at v is v in adj[v]). BFS ignores loops.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Mapping, Sequence

INF = float("inf")

Label = Hashable


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    labels: tuple
    adj: tuple  # tuple[frozenset[int], ...]
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adj):
            raise ValueError("labels and adjacency differ in length")
        object.__setattr__(self, "index", {lab: i for i, lab in enumerate(self.labels)})
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate vertex labels")

    @classmethod
    def from_edges(cls, labels: Sequence[Label], edges: Iterable[tuple[Label, Label]]) -> Graph:
        index = {lab: i for i, lab in enumerate(labels)}
        nbrs: list[set[int]] = [set() for _ in labels]
        for a, b in edges:
            i, j = index[a], index[b]
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(tuple(labels), tuple(frozenset(s) for s in nbrs))

    def __len__(self) -> int:
        return len(self.labels)

    def edges(self) -> set[frozenset]:
        """Edge set on labels; a loop is the singleton {v}."""
        out = set()
        for i, nb in enumerate(self.adj):
            for j in nb:
                out.add(frozenset((self.labels[i], self.labels[j])))
        return out

    def loops(self) -> list[Label]:
        return [self.labels[i] for i, nb in enumerate(self.adj) if i in nb]

    def induced(self, keep: Iterable[Label]) -> Graph:
        keep = list(keep)
        idx = {self.index[lab] for lab in keep}
        old_to_new = {self.index[lab]: k for k, lab in enumerate(keep)}
        adj = tuple(
            frozenset(old_to_new[j] for j in self.adj[self.index[lab]] if j in idx) for lab in keep
        )
        return Graph(tuple(keep), adj)

    def dump(self) -> str:
        """Debug dump: vertex count, then one ``i j`` edge per line (i <= j, sorted)."""
        lines = [str(len(self))]
        pairs = sorted({(min(i, j), max(i, j)) for i, nb in enumerate(self.adj) for j in nb})
        lines.extend(f"{i} {j}" for i, j in pairs)
        return "\n".join(lines) + "\n"


def bfs_distance(graph: Graph, source: Label) -> dict:
    """Shortest-path distances from ``source``; unreachable vertices map to INF."""
    dist = [INF] * len(graph)
    s = graph.index[source]
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in graph.adj[u]:
            if dist[v] == INF:
                dist[v] = du
                queue.append(v)
    return {graph.labels[i]: d for i, d in enumerate(dist)}


def all_pairs_distance(graph: Graph) -> dict:
    return {lab: bfs_distance(graph, lab) for lab in graph.labels}


@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple
    op: Callable[[Label, Label], Label]
    identity: Label
    inverse: Callable[[Label], Label]
    name: str = "G"

    def __len__(self) -> int:
        return len(self.elements)

    def check_axioms(self, samples: int = 200, seed: int = 0) -> None:
        """Identity and inverse laws for every element, associativity on sampled triples."""
        elems = set(self.elements)
        e = self.identity
        for g in self.elements:
            if self.op(e, g) != g or self.op(g, e) != g:
                raise GroupError(f"identity law fails at {g!r}")
            if self.op(g, self.inverse(g)) != e or self.op(self.inverse(g), g) != e:
                raise GroupError(f"inverse law fails at {g!r}")
            if self.op(g, g) not in elems:
                raise GroupError(f"not closed at {g!r}")
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = (rng.choice(self.elements) for _ in range(3))
            if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)):
                raise GroupError(f"associativity fails at {(a, b, c)!r}")

    def left_coset(self, g: Label, subgroup: Iterable[Label]) -> frozenset:
        return frozenset(self.op(g, h) for h in subgroup)

    def cosets(self, subgroup: Iterable[Label]) -> list[frozenset]:
        """Left cosets gH, ordered by the index of their first element in ``elements``."""
        subgroup = tuple(subgroup)
        seen: set = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            c = self.left_coset(g, subgroup)
            seen |= c
            out.append(c)
        return out


def check_normal_subgroup(group: FiniteGroup, subgroup: Iterable[Label]) -> frozenset:
    H = frozenset(subgroup)
    elems = set(group.elements)
    if group.identity not in H or not H <= elems:
        raise GroupError("subset does not contain the identity or leaves the group")
    for a in H:
        if group.inverse(a) not in H:
            raise GroupError(f"not a subgroup: inverse of {a!r} missing")
        for b in H:
            if group.op(a, b) not in H:
                raise GroupError(f"not a subgroup: {a!r}*{b!r} leaves the subset")
    for g in group.elements:
        gi = group.inverse(g)
        if frozenset(group.op(group.op(g, h), gi) for h in H) != H:
            raise GroupError(f"not normal: conjugation by {g!r} moves the subgroup")
    return H


class CayleyGraph:
    """Left Cayley graph: a, b adjacent iff a b^-1 or b a^-1 lies in the generator set."""

    def __init__(self, group: FiniteGroup, generators: Iterable[Label]):
        self.group = group
        self.generators = tuple(generators)
        members = set(group.elements)
        for g in self.generators:
            if g not in members:
                raise GroupError(f"generator {g!r} is not a group element")
        op, inv = group.op, group.inverse
        edges = []
        for b in group.elements:
            for g in self.generators:
                edges.append((op(g, b), b))
                edges.append((op(inv(g), b), b))
        self.graph = Graph.from_edges(group.elements, edges)
        reach = bfs_distance(self.graph, group.identity)
        if any(d == INF for d in reach.values()):
            raise GroupError("generators do not generate the group")
        self._norm = reach

    def norm(self, x: Label) -> int:
        return self._norm[x]


@dataclass(frozen=True)
class QuotientGraph:
    base: Graph
    classes: tuple  # tuple[frozenset[label], ...]
    graph: Graph


def quotient_graph(base: Graph, classes: Iterable[Iterable[Label]]) -> QuotientGraph:
    """Classes A, B adjacent iff some a in A and b in B are adjacent in ``base``."""
    classes = tuple(frozenset(c) for c in classes)
    owner = {}
    for c in classes:
        for lab in c:
            if lab in owner:
                raise ValueError(f"{lab!r} lies in two classes")
            owner[lab] = c
    if len(owner) != len(base):
        raise ValueError("classes do not cover the vertex set")
    edges = set()
    for i, nb in enumerate(base.adj):
        a = owner[base.labels[i]]
        for j in nb:
            edges.add((a, owner[base.labels[j]]))
    return QuotientGraph(base, classes, Graph.from_edges(classes, edges))


def quotient_group(group: FiniteGroup, H: frozenset) -> FiniteGroup:
    cosets = group.cosets(H)
    owner = {g: c for c in cosets for g in c}

    def rep(c):
        return next(iter(c))

    return FiniteGroup(
        elements=tuple(cosets),
        op=lambda A, B: owner[group.op(rep(A), rep(B))],
        identity=owner[group.identity],
        inverse=lambda A: owner[group.inverse(rep(A))],
        name=f"{group.name}/H",
    )


def quotient_by_subgroup(cg: CayleyGraph, H: Iterable[Label]) -> tuple[QuotientGraph, CayleyGraph]:
    """Graph quotient of ``cg`` by the H-cosets, and the Cayley graph of G/H on the
    classes meeting the generator set. The two graphs share vertex labels (cosets)."""
    H = check_normal_subgroup(cg.group, H)
    G_mod_H = quotient_group(cg.group, H)
    q = quotient_graph(cg.graph, G_mod_H.elements)
    gens = []
    for c in G_mod_H.elements:
        if any(g in c for g in cg.generators):
            gens.append(c)
    return q, CayleyGraph(G_mod_H, gens)


def representative_set(cg: CayleyGraph, H: Iterable[Label]) -> dict:
    """One element per H-coset such that subgraph distance, norm and coset norm agree.

    Cosets are handled in BFS layers of the quotient graph. For a coset B at distance
    m+1 from H, pick the adjacent coset A at distance m of smallest element index and
    the lexicographically smallest adjacent pair (a, b) in A x B, then set
    r(B) = b a^-1 r(A).
    """
    q, _ = quotient_by_subgroup(cg, H)
    group = cg.group
    H = frozenset(H)
    elem_index = {g: i for i, g in enumerate(group.elements)}
    dist = bfs_distance(q.graph, H)
    if any(d == INF for d in dist.values()):
        raise GroupError("quotient graph is not connected")

    def key(c):
        return min(elem_index[g] for g in c)

    r = {H: group.identity}
    layers: dict[int, list] = {}
    for c, d in dist.items():
        layers.setdefault(d, []).append(c)
    for m in range(1, max(layers) + 1):
        for B in sorted(layers[m], key=key):
            qi = q.graph.index[B]
            candidates = [q.graph.labels[j] for j in q.graph.adj[qi] if dist[q.graph.labels[j]] == m - 1]
            A = min(candidates, key=key)
            pairs = []
            for a in A:
                ai = cg.graph.index[a]
                for b in B:
                    if cg.graph.index[b] in cg.graph.adj[ai]:
                        pairs.append((elem_index[a], elem_index[b]))
            ia, ib = min(pairs)
            a, b = group.elements[ia], group.elements[ib]
            r[B] = group.op(group.op(b, group.inverse(a)), r[A])
    return r


@dataclass(frozen=True)
class ChainRow:
    coset: frozenset
    rep: Label
    subgraph_dist: float  # d_R(x, e); INF when R is disconnected at x
    norm: int  # N(x) in the Cayley graph
    coset_norm: int  # N(xH) in the quotient

    @property
    def equal(self) -> bool:
        return self.subgraph_dist == self.norm == self.coset_norm

    @property
    def chain_holds(self) -> bool:
        return self.subgraph_dist >= self.norm >= self.coset_norm

    @property
    def strict(self) -> bool:
        return self.subgraph_dist > self.norm or self.norm > self.coset_norm


def distance_chain(cg: CayleyGraph, H: Iterable[Label], transversal: Mapping) -> list[ChainRow]:
    """d_R(x, e), N(x) and N(xH) for every x in a transversal R (given as coset -> element)."""
    q, _ = quotient_by_subgroup(cg, H)
    H = frozenset(H)
    for c, x in transversal.items():
        if x not in c:
            raise ValueError(f"{x!r} is not in its coset")
    if cg.group.identity not in transversal.values():
        raise ValueError("transversal must contain the identity")
    sub = cg.graph.induced(transversal.values())
    d_R = bfs_distance(sub, cg.group.identity)
    d_q = bfs_distance(q.graph, H)
    return [
        ChainRow(c, x, d_R[x], cg.norm(x), d_q[c])
        for c, x in sorted(transversal.items(), key=lambda kv: cg.graph.index[kv[1]])
    ]


def random_transversal(cg: CayleyGraph, H: Iterable[Label], seed: int = 0) -> dict:
    """Arbitrary coset representatives (the identity represents H itself)."""
    rng = random.Random(seed)
    H = frozenset(H)
    out = {}
    for c in cg.group.cosets(H):
        ordered = sorted(c, key=lambda g: cg.graph.index[g])
        out[c] = cg.group.identity if c == H else rng.choice(ordered)
    return out


def verify_quotient_distance_bound(base: Graph, partition: Iterable[Iterable[Label]]) -> bool:
    """Quotient distance between classes never exceeds the minimal cross-class distance."""
    q = quotient_graph(base, partition)
    d_base = all_pairs_distance(base)
    for A in q.classes:
        d_q = bfs_distance(q.graph, A)
        for B in q.classes:
            lower = min(d_base[a][b] for a in A for b in B)
            if d_q[B] > lower:
                return False
    return True


# Concrete groups -----------------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(
        elements=tuple(range(n)),
        op=lambda a, b: (a + b) % n,
        identity=0,
        inverse=lambda a: -a % n,
        name=f"Z{n}",
    )


def torus_group(*sizes: int) -> FiniteGroup:
    """Z_{n1} x ... x Z_{nk} with tuple elements (row-major order)."""

    def op(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, sizes))

    return FiniteGroup(
        elements=tuple(product(*(range(n) for n in sizes))),
        op=op,
        identity=tuple(0 for _ in sizes),
        inverse=lambda a: tuple(-x % n for x, n in zip(a, sizes)),
        name="x".join(f"Z{n}" for n in sizes),
    )


def unit_generators(dim: int) -> list[tuple]:
    return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]


def subgroup_generated(group: FiniteGroup, gens: Iterable[Label]) -> frozenset:
    gens = list(gens)
    H = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = group.op(h, g)
                if x not in H:
                    H.add(x)
                    nxt.append(x)
        frontier = nxt
    return frozenset(H)


def gaussian_surrogate(p: int, factor: int = 5) -> tuple[CayleyGraph, frozenset]:
    """(Z/Mz)[i] with M = factor*p, generators {1, i}, and H generated by p and p*i.

    Points of Manhattan radius below M/2 see the same ball as in Z[i], so the quotient
    G/H = F_{p^2} inherits the lifted grid structure of Z[i]/(p).
    """
    if factor < 3:
        raise ValueError("surrogate modulus must exceed 2p")
    M = factor * p
    G = torus_group(M, M)
    cg = CayleyGraph(G, [(1, 0), (0, 1)])
    H = subgroup_generated(G, [(p, 0), (0, p)])
    return cg, H


def cyclic_subgroups(n: int) -> list[frozenset]:
    """Every subgroup of Z_n (one per divisor d: multiples of d)."""
    return [frozenset(range(0, n, d)) for d in range(1, n + 1) if n % d == 0]
