"""Exhaustive and sampled verification suites with line-oriented reports.

Each suite returns a :class:`SuiteReport`. Suites that enumerate inputs record each
failing case as a :class:`Violation` carrying the textual inputs, so that
:func:`replay` can re-parse and re-check it independently of the sweep.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from fieldgrid import cayley
from fieldgrid.hermitian import (
    COUNTEREXAMPLE_KINDS,
    HVector,
    all_vectors,
    counterexample_pair,
    cs_difference,
    cs_difference_lagrange,
    cs_difference_product,
    cs_sides,
    inner_product,
    is_proportional,
    minors,
    parse_vector,
    self_product_value,
    vector_norm,
    vectors_within,
)
from fieldgrid.modring import (
    Fp2Elem,
    Modulus,
    as_modulus,
    ball,
    elements,
    format_element,
    manhattan_norm,
    parse_element,
)
from fieldgrid.order import DEFAULT_CAP, find_kustaanheimo_prime, legendre_is_residue

CASE_LIMIT = 10**8
DEFAULT_SEED = 20091224

SUITES = (
    "triangle",
    "submult",
    "lemma",
    "quotient",
    "cpd",
    "cauchy-schwarz",
    "special-2d",
    "inner-norm",
    "counterexample",
)


class InfeasibleSuite(RuntimeError):
    def __init__(self, suite: str, estimate: int, limit: int = CASE_LIMIT):
        super().__init__(
            f"suite {suite} would run about {estimate:.3g} cases (limit {limit:.0e}); pass --force to run anyway"
        )
        self.estimate = estimate


@dataclass
class Violation:
    group: str
    case: dict  # input name -> text
    values: dict  # computed quantity -> value

    def tokens(self) -> list[str]:
        return [f"group={self.group}"] + [f"{k}={v}" for k, v in self.case.items()] + [
            f"{k}={v}" for k, v in self.values.items()
        ]


@dataclass
class Group:
    key: str
    cases: int = 0
    violations: int = 0


@dataclass
class SuiteReport:
    suite: str
    params: dict
    groups: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    wall_time: float = 0.0
    # the counterexample suite passes when the violation is found
    expect_violation: bool = False

    @property
    def cases(self) -> int:
        return sum(g.cases for g in self.groups)

    @property
    def passed(self) -> bool:
        if self.expect_violation:
            return bool(self.violations)
        return not self.violations

    def group(self, key: str) -> Group:
        for g in self.groups:
            if g.key == key:
                return g
        g = Group(key)
        self.groups.append(g)
        return g

    def record(self, group: str, ok: bool, case: dict | None = None, values: dict | None = None) -> None:
        g = self.group(group)
        g.cases += 1
        if not ok:
            g.violations += 1
            self.violations.append(Violation(group, case or {}, values or {}))

    def param_text(self) -> str:
        return " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"{self.suite} {self.param_text()}".strip()
        return f"{head} cases={self.cases} violations={len(self.violations)} {status}"

    def to_records(self, with_time: bool = True) -> str:
        lines = [f"suite name={self.suite}"]
        lines.extend(f"param {k}={v}" for k, v in sorted(self.params.items()))
        for g in self.groups:
            lines.append(f"group key={g.key} cases={g.cases} violations={g.violations}")
        for v in self.violations:
            lines.append("violation " + " ".join(v.tokens()))
        for k, v in self.notes.items():
            lines.append(f"note {k}={v}")
        tail = (
            f"summary cases={self.cases} violations={len(self.violations)} "
            f"passed={'true' if self.passed else 'false'}"
        )
        if with_time:
            tail += f" wall_time={self.wall_time:.6f}"
        lines.append(tail)
        return "\n".join(lines) + "\n"


def parse_records(text: str) -> list[tuple[str, dict]]:
    """Split a report into (record type, {key: value}) pairs; values keep any '='."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        kind, *toks = line.split(" ")
        out.append((kind, dict(t.split("=", 1) for t in toks)))
    return out


def _signed(x: int, p: int) -> int:
    return x - p if x > p // 2 else x


def _guard(suite: str, estimate: int, force: bool) -> None:
    if estimate > CASE_LIMIT and not force:
        raise InfeasibleSuite(suite, estimate)


def _timed(fn: Callable[..., SuiteReport]) -> Callable[..., SuiteReport]:
    def run(*args, **kwargs) -> SuiteReport:
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.wall_time = time.perf_counter() - t0
        return rep

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _modulus(p: int | None, m: int | None) -> Modulus:
    if p is not None:
        return Modulus.prime(p)
    if m is not None:
        return as_modulus(m)
    raise ValueError("need --p or --m")


# Per-case checks, shared by the sweeps and by replay -------------------------


def check_triangle(u: Fp2Elem, z: Fp2Elem) -> tuple[bool, dict]:
    lhs = manhattan_norm(u + z)
    rhs = manhattan_norm(u) + manhattan_norm(z)
    return lhs <= rhs, {"lhs": lhs, "rhs": rhs}


def check_submult(u: Fp2Elem, z: Fp2Elem) -> tuple[bool, dict]:
    lhs = manhattan_norm(u * z)
    rhs = manhattan_norm(u) * manhattan_norm(z)
    return lhs <= rhs, {"lhs": lhs, "rhs": rhs}


def check_cpd(v: HVector) -> tuple[bool, dict]:
    s = self_product_value(v)
    if not v:
        ok = s == 0
    else:
        ok = s != 0 and legendre_is_residue(s, v.modulus)
    return ok, {"vv": s}


def check_cauchy_schwarz(v: HVector, w: HVector, k: int) -> tuple[bool, dict]:
    p = v.modulus.m
    d = cs_difference(v, w)
    holds = d == 0 or legendre_is_residue(d, p)
    prop = is_proportional(v, w)
    equality_ok = (d == 0) == prop
    nonzero_minors = 0
    worst_term = 0
    for _, _, m in minors(v, w):
        if m:
            nonzero_minors += 1
            worst_term = max(worst_term, manhattan_norm(m * m.conjugate()))
    d_norm = manhattan_norm(Fp2Elem(d, 0, v.modulus))
    ok = (
        holds
        and equality_ok
        and worst_term <= 4 * k**4
        and nonzero_minors <= k * k
        and d_norm <= 4 * k**6
    )
    return ok, {
        "diff": d,
        "proportional": str(prop).lower(),
        "nonzero_minors": nonzero_minors,
        "max_term_norm": worst_term,
    }


def check_special_2d(v: HVector, w: HVector) -> tuple[bool, dict]:
    d = cs_difference(v, w)
    square = (v[0] * w[1] - v[1] * w[0]) ** 2
    ok = square.im == 0 and d == square.re
    return ok, {"diff": d, "minor_sq": format_element(square)}


def check_inner_norm(v: HVector, w: HVector) -> tuple[bool, dict]:
    lhs = manhattan_norm(inner_product(v, w))
    rhs = vector_norm(v) * vector_norm(w)
    return lhs <= rhs, {"lhs": lhs, "rhs": rhs}


def check_counterexample(v: HVector, w: HVector) -> tuple[bool, dict]:
    """ok=True means the pair satisfies the tournament inequality (no violation)."""
    p = v.modulus.m
    lhs, rhs = cs_sides(v, w)
    d = (rhs - lhs) % p
    holds = d == 0 or legendre_is_residue(d, p)
    return holds, {"lhs": _signed(lhs, p), "rhs": _signed(rhs, p), "diff": _signed(d, p)}


# Suites ---------------------------------------------------------------------


@_timed
def suite_triangle(p: int | None = None, m: int | None = None, force: bool = False) -> SuiteReport:
    """N(u + z) <= N(u) + N(z) over every ordered pair."""
    return _pair_suite("triangle", check_triangle, p, m, force)


@_timed
def suite_submult(p: int | None = None, m: int | None = None, force: bool = False) -> SuiteReport:
    """N(u z) <= N(u) N(z) over every ordered pair."""
    return _pair_suite("submult", check_submult, p, m, force)


def _pair_suite(name, check, p, m, force) -> SuiteReport:
    mod = _modulus(p, m)
    _guard(name, mod.m**4, force)
    rep = SuiteReport(name, {"p" if mod.is_field and p is not None else "m": mod.m})
    elems = list(elements(mod))
    for u in elems:
        for z in elems:
            ok, vals = check(u, z)
            rep.record("all", ok, {"u": str(u), "z": str(z)} if not ok else None, vals)
    return rep


@_timed
def suite_lemma(p: int, factor: int = 5, seed: int = DEFAULT_SEED, force: bool = False) -> SuiteReport:
    """Representative set on (Z/Mz)[i], M = factor*p, H = <p, p i>."""
    mod = Modulus.prime(p)
    _guard("lemma", (factor * p) ** 2 * p * p, force)
    cg, H = cayley.gaussian_surrogate(p, factor)
    rep = SuiteReport("lemma", {"p": p, "M": factor * p, "seed": seed})
    r = cayley.representative_set(cg, H)
    for row in cayley.distance_chain(cg, H, r):
        x = row.rep
        field_norm = manhattan_norm(Fp2Elem.make(x[0], x[1], mod))
        ok = row.equal and row.coset_norm == field_norm
        rep.record(
            "constructed",
            ok,
            {"x": f"{x[0]},{x[1]}"},
            {"d_R": row.subgraph_dist, "N_x": row.norm, "N_xH": row.coset_norm, "N_field": field_norm},
        )
    strict = 0
    for row in cayley.distance_chain(cg, H, cayley.random_transversal(cg, H, seed)):
        x = row.rep
        strict += row.strict
        rep.record(
            "adversarial",
            row.chain_holds,
            {"x": f"{x[0]},{x[1]}"},
            {"d_R": row.subgraph_dist, "N_x": row.norm, "N_xH": row.coset_norm},
        )
    rep.notes["adversarial_strict"] = strict
    if strict == 0:
        rep.record("adversarial-strictness", False, {"seed": str(seed)}, {"strict": 0})
    return rep


def quotient_instances(p: int | None = None) -> list[tuple[str, cayley.CayleyGraph, frozenset]]:
    out = []
    if p is None:
        for n in range(2, 13):
            G = cayley.cyclic_group(n)
            for gens in ([1], sorted({2 % n, 3 % n})):
                cg = cayley.CayleyGraph(G, gens)
                for H in cayley.cyclic_subgroups(n):
                    out.append((f"Z{n}/gens{'+'.join(map(str, gens))}/H{len(H)}", cg, H))
        primes = (3, 7)
    else:
        primes = (p,)
    for q in primes:
        G = cayley.torus_group(q, q)
        cg = cayley.CayleyGraph(G, cayley.unit_generators(2))
        diag = frozenset((x, x) for x in range(q))
        out.append((f"Z{q}^2/diagonal", cg, diag))
        cg, H = cayley.gaussian_surrogate(q)
        out.append((f"gaussian{q}/pZ[i]", cg, H))
    return out


@_timed
def suite_quotient(p: int | None = None, force: bool = False) -> SuiteReport:
    """Graph quotient equals the Cayley graph of the quotient group, edge for edge."""
    rep = SuiteReport("quotient", {} if p is None else {"p": p})
    if p is not None:
        Modulus.prime(p)
        _guard("quotient", (5 * p) ** 4, force)
    for name, cg, H in quotient_instances(p):
        q, cq = cayley.quotient_by_subgroup(cg, H)
        a, b = q.graph.edges(), cq.graph.edges()
        ok = a == b and cayley.verify_quotient_distance_bound(cg.graph, q.classes)
        rep.record("coincidence", ok, {"instance": name}, {"edges_quotient": len(a), "edges_cayley": len(b)})
    return rep


def _count_within(shell_sizes: list[int], n: int, radius: int) -> int:
    # ways[t] = number of length-i vectors with norm exactly t
    ways = [1] + [0] * radius
    for _ in range(n):
        nxt = [0] * (radius + 1)
        for t, c in enumerate(ways):
            if c:
                for d, s in enumerate(shell_sizes):
                    if t + d <= radius:
                        nxt[t + d] += c * s
        ways = nxt
    return sum(ways)


def _ball_count(mod: Modulus, n: int, radius: int) -> int:
    return _count_within([len(s) for s in ball(mod, radius)], n, radius)


@_timed
def suite_cpd(k: int, n: int, p: int | None = None, force: bool = False, cap: int = DEFAULT_CAP) -> SuiteReport:
    """0 <=_p v.v with equality iff v = 0, for all v with N(v) <= k in dimensions 1..n.

    Without an explicit p, uses the least prime making 1..2k^3 quadratic residues.
    """
    if p is None:
        p = find_kustaanheimo_prime(2 * k**3, cap).p
    mod = Modulus.prime(p)
    _guard("cpd", sum(_ball_count(mod, d, k) for d in range(1, n + 1)), force)
    rep = SuiteReport("cpd", {"k": k, "n": n, "p": p})
    for dim in range(1, n + 1):
        for v in vectors_within(dim, k, mod):
            ok, vals = check_cpd(v)
            rep.record(f"n{dim}", ok, {"v": str(v)} if not ok else None, vals)
    return rep


@_timed
def suite_cauchy_schwarz(
    k: int, n: int, p: int | None = None, force: bool = False, cap: int = DEFAULT_CAP
) -> SuiteReport:
    """(v.w)(w.v) <=_p (v.v)(w.w) for all pairs of norm <= k, dimensions 1..n.

    Equality must coincide with proportionality. Without an explicit p, uses the
    least prime making 1..4k^6 quadratic residues.
    """
    if p is None:
        p = find_kustaanheimo_prime(4 * k**6, cap).p
    mod = Modulus.prime(p)
    _guard("cauchy-schwarz", sum(_ball_count(mod, d, k) ** 2 for d in range(1, n + 1)), force)
    rep = SuiteReport("cauchy-schwarz", {"k": k, "n": n, "p": p})
    exceed_pairs_bound = 0
    for dim in range(1, n + 1):
        vecs = list(vectors_within(dim, k, mod))
        for v in vecs:
            for w in vecs:
                ok, vals = check_cauchy_schwarz(v, w, k)
                exceed_pairs_bound += vals["nonzero_minors"] > comb(k, 2)
                rep.record(f"n{dim}", ok, {"v": str(v), "w": str(w)} if not ok else None, vals)
    rep.notes["pairs_above_binom_k_2"] = exceed_pairs_bound
    return rep


@_timed
def suite_special_2d(p: int, force: bool = False) -> SuiteReport:
    """Over (F_p)^2: (v.v)(w.w) - (v.w)^2 == (v1 w2 - v2 w1)^2 for every pair."""
    mod = Modulus.prime(p)
    _guard("special-2d", p**4, force)
    rep = SuiteReport("special-2d", {"p": p})
    vecs = list(all_vectors(2, mod, real=True))
    for v in vecs:
        for w in vecs:
            ok, vals = check_special_2d(v, w)
            if ok and vals["diff"] != 0 and not legendre_is_residue(vals["diff"], p):
                ok = False
            rep.record("all", ok, {"v": str(v), "w": str(w)} if not ok else None, vals)
    return rep


def _random_vector(rng: random.Random, n: int, mod: Modulus) -> HVector:
    m = mod.m
    return HVector(tuple(Fp2Elem(rng.randrange(m), rng.randrange(m), mod) for _ in range(n)), mod)


@_timed
def suite_inner_norm(
    n: int,
    p: int | None = None,
    m: int | None = None,
    samples: int | None = None,
    seed: int = DEFAULT_SEED,
    force: bool = False,
) -> SuiteReport:
    """N(v.w) <= N(v) N(w); exhaustive unless ``samples`` is given. Any modulus."""
    mod = _modulus(p, m)
    key = "p" if p is not None else "m"
    params = {key: mod.m, "n": n}
    if samples is None:
        _guard("inner-norm", mod.m ** (4 * n), force)
        vecs = list(all_vectors(n, mod))
        pairs: Iterable = ((v, w) for v in vecs for w in vecs)
    else:
        _guard("inner-norm", samples, force)
        params.update(samples=samples, seed=seed)
        rng = random.Random(seed)
        pairs = ((_random_vector(rng, n, mod), _random_vector(rng, n, mod)) for _ in range(samples))
    rep = SuiteReport("inner-norm", params)
    for v, w in pairs:
        ok, vals = check_inner_norm(v, w)
        rep.record("all", ok, {"v": str(v), "w": str(w)} if not ok else None, vals)
    return rep


@_timed
def suite_lagrange(
    n: int, p: int, samples: int | None = None, seed: int = DEFAULT_SEED, force: bool = False
) -> SuiteReport:
    """Product form and minor-sum form of the Cauchy-Schwarz difference agree."""
    mod = Modulus.prime(p)
    params = {"p": p, "n": n}
    if samples is None:
        _guard("lagrange", p ** (4 * n), force)
        vecs = list(all_vectors(n, mod))
        pairs: Iterable = ((v, w) for v in vecs for w in vecs)
    else:
        params.update(samples=samples, seed=seed)
        rng = random.Random(seed)
        pairs = ((_random_vector(rng, n, mod), _random_vector(rng, n, mod)) for _ in range(samples))
    rep = SuiteReport("lagrange", params)
    for v, w in pairs:
        a, b = cs_difference_product(v, w), cs_difference_lagrange(v, w)
        rep.record("all", a == b, {"v": str(v), "w": str(w)} if a != b else None, {"product": a, "lagrange": b})
    return rep


@_timed
def suite_counterexample(p: int, kind: str = "complex-n2", n: int | None = None, force: bool = False) -> SuiteReport:
    """Build the explicit violating pair and certify that the inequality fails."""
    if kind not in COUNTEREXAMPLE_KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(COUNTEREXAMPLE_KINDS)}")
    v, w = counterexample_pair(kind, p, n)
    rep = SuiteReport("counterexample", {"p": p, "kind": kind, "n": len(v)}, expect_violation=True)
    ok, vals = check_counterexample(v, w)
    rep.record(kind, ok, {"v": str(v), "w": str(w)}, vals)
    rep.notes.update(v=str(v), w=str(w), **vals)
    return rep


# Replay ---------------------------------------------------------------------


def _elems(mod: Modulus, case: dict) -> tuple:
    return parse_element(case["u"], mod), parse_element(case["z"], mod)


def _vecs(mod: Modulus, case: dict) -> tuple:
    return parse_vector(case["v"], mod), parse_vector(case["w"], mod)


def replay(report: SuiteReport) -> bool:
    """Re-check every recorded violation from its text; True iff each still fails."""
    prm = report.params
    name = report.suite
    for viol in report.violations:
        case = viol.case
        if name in ("triangle", "submult"):
            mod = as_modulus(prm.get("p", prm.get("m")))
            check = check_triangle if name == "triangle" else check_submult
            ok, _ = check(*_elems(mod, case))
        elif name == "inner-norm":
            ok, _ = check_inner_norm(*_vecs(as_modulus(prm.get("p", prm.get("m"))), case))
        elif name == "cpd":
            ok, _ = check_cpd(parse_vector(case["v"], Modulus.prime(prm["p"])))
        elif name == "cauchy-schwarz":
            ok, _ = check_cauchy_schwarz(*_vecs(Modulus.prime(prm["p"]), case), prm["k"])
        elif name == "special-2d":
            v, w = _vecs(Modulus.prime(prm["p"]), case)
            ok, vals = check_special_2d(v, w)
            ok = ok and (vals["diff"] == 0 or legendre_is_residue(vals["diff"], prm["p"]))
        elif name == "counterexample":
            ok, _ = check_counterexample(*_vecs(Modulus.prime(prm["p"]), case))
        else:
            again = run_suite(name, **{k: v for k, v in prm.items() if k not in ("M",)})
            ok = not any(x.case == case and x.group == viol.group for x in again.violations)
        if ok:
            return False
    return True


def run_suite(name: str, **params) -> SuiteReport:
    """Dispatch by suite name with CLI-style parameters (unknown ones are ignored)."""
    force = params.get("force", False)
    p, m, k, n = (params.get(x) for x in ("p", "m", "k", "n"))
    seed = params.get("seed") or DEFAULT_SEED
    if name == "triangle":
        return suite_triangle(p, m, force=force)
    if name == "submult":
        return suite_submult(p, m, force=force)
    if name == "lemma":
        return suite_lemma(_need(p, "p", name), seed=seed, force=force)
    if name == "quotient":
        return suite_quotient(p, force=force)
    if name == "cpd":
        return suite_cpd(k or 1, n or 2, p, force=force, cap=params.get("cap") or DEFAULT_CAP)
    if name == "cauchy-schwarz":
        return suite_cauchy_schwarz(k or 1, n or 2, p, force=force, cap=params.get("cap") or DEFAULT_CAP)
    if name == "special-2d":
        return suite_special_2d(_need(p, "p", name), force=force)
    if name == "inner-norm":
        return suite_inner_norm(n or 1, p, m, params.get("samples"), seed, force=force)
    if name == "counterexample":
        return suite_counterexample(_need(p, "p", name), params.get("kind") or "complex-n2", n, force=force)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")


def _need(value, flag: str, suite: str):
    if value is None:
        raise ValueError(f"suite {suite} needs --{flag}")
    return value


def run_all(seed: int = DEFAULT_SEED) -> list[SuiteReport]:
    """Every suite at its default desk-scale parameters."""
    reports = []
    for p in (3, 7, 11):
        reports.append(suite_triangle(p))
        reports.append(suite_submult(p))
    for p in (3, 7):
        reports.append(suite_lemma(p, seed=seed))
    reports.append(suite_quotient())
    reports.append(suite_cpd(1, 5, 7))
    reports.append(suite_cpd(2, 4))
    reports.append(suite_cauchy_schwarz(1, 4))
    for p in (3, 7, 11):
        reports.append(suite_special_2d(p))
    for n in (2, 3):
        reports.append(suite_lagrange(n, 3))
    for p in (7, 23):
        for n in (2, 3, 4):
            reports.append(suite_lagrange(n, p, samples=10**4, seed=seed))
    reports.append(suite_inner_norm(1, p=3))
    reports.append(suite_inner_norm(2, p=3))
    reports.append(suite_inner_norm(1, m=4))
    reports.append(suite_inner_norm(1, p=7))
    for n in (1, 2, 3):
        reports.append(suite_inner_norm(n, p=7, samples=10**4, seed=seed))
    for p in (3, 7, 11):
        for kind in COUNTEREXAMPLE_KINDS:
            reports.append(suite_counterexample(p, kind))
    return reports
