"""Exact and heuristic computation of ex(n, C), optionally with degree-vector
restrictions.

The exact engine generates crown-free linear 3-graphs one edge at a time by
canonical augmentation: a child P + t is kept only if t is equivalent to the
child's canonical deletion edge, which yields one representative per
isomorphism class without a global table. Crown-freeness, linearity and
degree-vector restrictions are all closed under edge deletion, so every
admissible graph is reachable this way.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import kernels
from .core import (
    DegreeVector,
    LinearThreeGraph,
    Triple,
    canonical_form,
    code_from_certificate,
    serialize,
)
from .errors import BudgetExceeded

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_TIME_BUDGET = 600.0
DEFAULT_HEURISTIC_STEPS = 2000
THEOREM2 = (DegreeVector(4, 4, 3), DegreeVector(5, 4, 2))


@dataclass
class SearchConfig:
    n: int
    mode: str = "exact"
    restrictions: tuple[DegreeVector, ...] = ()
    node_budget: int | None = None
    time_budget_seconds: float = DEFAULT_TIME_BUDGET
    seed: int = 0
    threads: int = 1
    initial: LinearThreeGraph | None = None

    def __post_init__(self):
        if not 0 <= self.n <= 64:
            raise ValueError(f"n = {self.n} outside 0..64")
        if self.mode not in ("exact", "heuristic"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.node_budget is None:
            self.node_budget = DEFAULT_NODE_BUDGET if self.mode == "exact" else DEFAULT_HEURISTIC_STEPS
        if self.node_budget <= 0 or self.time_budget_seconds <= 0:
            raise ValueError("budgets must be positive")
        self.restrictions = tuple(DegreeVector.of(*r) for r in self.restrictions)


@dataclass
class SearchResult:
    n: int
    best: int
    witness: LinearThreeGraph
    exact: bool
    nodes_explored: int
    elapsed: float
    restrictions: tuple[DegreeVector, ...] = ()
    extra: dict = field(default_factory=dict)

    def gap_to_three_halves(self) -> float:
        return self.best - 1.5 * self.n

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "best": self.best,
            "exact": self.exact,
            "nodes": self.nodes_explored,
            "seconds": round(self.elapsed, 3),
            "restrictions": [list(r) for r in self.restrictions],
            "gap_to_3n_over_2": self.gap_to_three_halves(),
            "witness": serialize(self.witness),
        }


class _Stop(Exception):
    pass


def lower_bound_value(n: int) -> int:
    return 6 * ((n - 3) // 4) if n >= 3 else 0


def verify_bounds(r: SearchResult) -> bool:
    """6 floor((n-3)/4) <= best <= 2n; the lower side only binds for exact
    results or witnesses that are large enough to be checked."""
    if r.best > 2 * r.n:
        return False
    low = lower_bound_value(r.n)
    if r.exact or len(r.witness.edges) >= low:
        return r.best >= low
    return True


def all_triples(n: int) -> list[Triple]:
    return list(itertools.combinations(range(n), 3))


def _violates(H: LinearThreeGraph, restrictions) -> bool:
    return any(
        all(d >= r for d, r in zip(H.degree_vector(e), rv)) for e in H.edges for rv in restrictions
    )


def _incumbent(cfg: SearchConfig) -> LinearThreeGraph | None:
    if cfg.initial is not None:
        return cfg.initial
    if cfg.n >= 7:
        from .constructions import lower_bound_construction

        H = lower_bound_construction(cfg.n)
        if not _violates(H, cfg.restrictions):
            return H
    return None


def _triple_orbit_reps(cands: list[Triple], gens: list[list[int]]) -> list[Triple]:
    if not gens:
        return cands
    pool = set(cands)
    reps = []
    seen: set[Triple] = set()
    for t in cands:
        if t in seen:
            continue
        orbit = {t}
        stack = [t]
        while stack:
            s = stack.pop()
            for g in gens:
                u = tuple(sorted(g[v] for v in s))
                if u not in orbit:
                    orbit.add(u)
                    stack.append(u)
        seen |= orbit
        reps.append(min(orbit & pool))
    return sorted(reps)


def _same_orbit(a: Triple, b: Triple, gens: list[list[int]]) -> bool:
    orbit = {a}
    stack = [a]
    while stack:
        s = stack.pop()
        if s == b:
            return True
        for g in gens:
            u = tuple(sorted(g[v] for v in s))
            if u not in orbit:
                orbit.add(u)
                stack.append(u)
    return b in orbit


def _extra_edge_bound(n: int, cands: list[Triple]) -> int:
    """Upper bound on how many candidates can be added together."""
    if not cands:
        return 0
    pairs = set()
    count = [0] * n
    partners = [set() for _ in range(n)]
    for a, b, c in cands:
        pairs.update(((a, b), (a, c), (b, c)))
        for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
            count[x] += 1
            partners[x].add(y)
            partners[x].add(z)
    by_vertex = sum(min(count[v], len(partners[v]) // 2) for v in range(n)) // 3
    return min(len(cands), len(pairs) // 3, by_vertex)


class _Exact:
    """Depth-first canonical augmentation with bound pruning."""

    def __init__(self, cfg: SearchConfig, best: int, deadline: float, on_node=None):
        self.cfg = cfg
        self.n = cfg.n
        self.restrictions = [tuple(r) for r in cfg.restrictions]
        self.best = best
        self.best_code: bytes | None = None
        self.best_graph: LinearThreeGraph | None = None
        self.nodes = 0
        self.deadline = deadline
        self.on_node = on_node
        self.split_depth: int | None = None
        self.tasks: list[tuple] = []

    def offer(self, P: LinearThreeGraph, rank, cert) -> None:
        m = len(P.edges)
        code = code_from_certificate(self.n, cert)
        if m > self.best or (m == self.best and (self.best_code is None or code < self.best_code)):
            self.best = m
            self.best_code = code
            self.best_graph = P.relabel(rank)

    def visit(self, P: LinearThreeGraph, parent_cands: list[Triple], form, depth: int) -> None:
        self.nodes += 1
        if self.nodes > self.cfg.node_budget or (self.nodes & 255 == 0 and time.monotonic() > self.deadline):
            raise _Stop
        if self.on_node is not None:
            self.on_node(P)
        rank, cert, gens = form
        self.offer(P, rank, cert)
        cands = kernels.admissible(self.n, list(P.edges), parent_cands, self.restrictions)
        m = len(P.edges)
        extra = min(_extra_edge_bound(self.n, cands), 2 * self.n - m)
        if m + extra < self.best or extra == 0:
            return
        if self.split_depth is not None and depth == self.split_depth:
            self.tasks.append((P, cands, form, depth))
            return
        self.expand(P, cands, form, depth)

    def expand(self, P: LinearThreeGraph, cands: list[Triple], form, depth: int) -> None:
        """Visit the canonical children of P, one per isomorphism class."""
        _, cert, gens = form
        code_p = code_from_certificate(self.n, cert)
        seen_children: set[bytes] = set()
        for t in _triple_orbit_reps(cands, gens):
            C = LinearThreeGraph(self.n, P.edges + (t,))
            crank, ccert, cgens = canonical_form(C)
            last = ccert[-1]
            m_edge = next(e for e in C.edges if tuple(sorted(crank[v] for v in e)) == last)
            if m_edge != t and not _same_orbit(t, m_edge, cgens):
                without = LinearThreeGraph(self.n, (e for e in C.edges if e != m_edge))
                if code_from_certificate(self.n, canonical_form(without)[1]) != code_p:
                    continue
            code_c = code_from_certificate(self.n, ccert)
            if code_c in seen_children:
                continue
            seen_children.add(code_c)
            self.visit(C, [s for s in cands if s != t], (crank, ccert, cgens), depth + 1)


def _run_subtree(args):
    cfg, best, deadline, P, cands, form, depth = args
    eng = _Exact(cfg, best, deadline)
    try:
        eng.expand(P, cands, form, depth)
        done = True
    except _Stop:
        done = False
    return eng.best, eng.best_code, eng.best_graph, eng.nodes, done


def _exact(cfg: SearchConfig, on_node=None) -> SearchResult:
    start = time.monotonic()
    deadline = start + cfg.time_budget_seconds
    inc = _incumbent(cfg)
    best0 = len(inc.edges) if inc is not None else 0
    eng = _Exact(cfg, best0, deadline, on_node)
    root = LinearThreeGraph(cfg.n)
    threads = max(1, cfg.threads)
    if threads > 1 and on_node is None:
        eng.split_depth = 2
    complete = True
    try:
        eng.visit(root, all_triples(cfg.n), canonical_form(root), 0)
    except _Stop:
        complete = False
    best, code, graph, nodes = eng.best, eng.best_code, eng.best_graph, eng.nodes
    if complete and eng.tasks:
        from concurrent.futures import ProcessPoolExecutor

        jobs = [(cfg, best0, deadline, P, c, f, d) for P, c, f, d in eng.tasks]
        with ProcessPoolExecutor(threads) as pool:
            for b, bc, bg, k, done in pool.map(_run_subtree, jobs):
                nodes += k
                complete = complete and done
                if bg is not None and (b > best or (b == best and (code is None or bc < code))):
                    best, code, graph = b, bc, bg
    if graph is None or len(graph.edges) < best:
        graph = inc
        best = len(inc.edges)
    result = SearchResult(
        cfg.n, best, graph, complete, nodes, time.monotonic() - start, cfg.restrictions
    )
    if not complete:
        raise BudgetExceeded(result)
    return result


def _heuristic(cfg: SearchConfig) -> SearchResult:
    start = time.monotonic()
    deadline = start + cfg.time_budget_seconds
    rng = random.Random(cfg.seed)
    n = cfg.n
    restr = [tuple(r) for r in cfg.restrictions]
    triples = all_triples(n)

    def fill(H: LinearThreeGraph) -> LinearThreeGraph:
        cands = kernels.admissible(n, list(H.edges), triples, restr)
        edges = list(H.edges)
        while cands:
            t = rng.choice(cands)
            edges.append(t)
            cands = kernels.admissible(n, edges, [s for s in cands if s != t], restr)
        return LinearThreeGraph(n, edges)

    seed_graph = _incumbent(cfg) or LinearThreeGraph(n)
    current = fill(seed_graph)
    best = current
    steps = 0
    while steps < cfg.node_budget and time.monotonic() < deadline:
        steps += 1
        if not current.edges:
            break
        k = min(len(current.edges), rng.choice((1, 1, 2, 3)))
        drop = set(rng.sample(current.edges, k))
        trial = fill(LinearThreeGraph(n, (e for e in current.edges if e not in drop)))
        if len(trial.edges) >= len(current.edges):
            current = trial
            if len(current.edges) > len(best.edges):
                best = current
    return SearchResult(n, len(best.edges), best, False, steps, time.monotonic() - start,
                        cfg.restrictions, {"seed": cfg.seed})


def ex_crown(cfg: SearchConfig, on_node=None) -> SearchResult:
    """Largest crown-free linear 3-graph on ``cfg.n`` vertices (respecting
    ``cfg.restrictions``). Exact mode raises BudgetExceeded, carrying the best
    graph found, when a budget runs out."""
    if cfg.mode == "heuristic":
        return _heuristic(cfg)
    return _exact(cfg, on_node)


def ex_restricted(cfg: SearchConfig, on_node=None) -> SearchResult:
    """ex_crown with the degree-vector restrictions of the 3n/2 reduction."""
    if not cfg.restrictions:
        cfg = SearchConfig(**{**cfg.__dict__, "restrictions": THEOREM2})
    return ex_crown(cfg, on_node)
