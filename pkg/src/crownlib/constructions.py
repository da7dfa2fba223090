"""Generators: the crown-free lower-bound family, Fano, STS(9), minimal hosts
of link graphs, and seeded random linear 3-graphs."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .core import LinearThreeGraph, Triple, triple
from .errors import InfeasibleRequest, TooFewVertices, VertexOutOfRange
from .links import ColoredLinkGraph

MAX_RESTARTS = 100

FANO_LINES: tuple[Triple, ...] = (
    (0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
)

# Affine plane AG(2,3): point (x, y) is 3x + y; four parallel classes.
STS9_TRIPLES: tuple[Triple, ...] = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (1, 5, 6), (2, 3, 7),
    (0, 5, 7), (1, 3, 8), (2, 4, 6),
)


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    n: int = 0
    seed: int = 0
    params: dict = field(default_factory=dict)

    KINDS = ("lower-bound", "fano", "sts9", "random")

    def build(self) -> LinearThreeGraph:
        if self.kind == "lower-bound":
            return lower_bound_construction(self.n)
        if self.kind == "fano":
            return fano()
        if self.kind == "sts9":
            return sts9()
        if self.kind == "random":
            if "min_degree" in self.params:
                H = random_min_degree(self.n, self.params["min_degree"], self.seed)
                if H is None:
                    raise InfeasibleRequest(
                        f"no graph with min degree {self.params['min_degree']} on {self.n} "
                        f"vertices after {MAX_RESTARTS} restarts"
                    )
                return H
            return random_linear(self.n, self.params.get("m", 0), self.seed)
        raise ValueError(f"unknown construction kind {self.kind!r}")


def pair_coverage(H: LinearThreeGraph) -> dict[tuple[int, int], int]:
    """How many edges cover each vertex pair (independent of the pair index)."""
    cover = {p: 0 for p in itertools.combinations(range(H.n), 2)}
    for t in H.edges:
        for p in itertools.combinations(t, 2):
            cover[p] += 1
    return cover


def is_steiner(H: LinearThreeGraph) -> bool:
    return all(c == 1 for c in pair_coverage(H).values())


def lower_bound_construction(n: int) -> LinearThreeGraph:
    """Overlay of Fano planes missing a line, sharing the points a, b, c = 0, 1, 2.

    Block i uses x, y, z, w = 3+4i .. 6+4i; vertices beyond the last full block
    stay isolated.
    """
    if n < 7:
        raise TooFewVertices(f"lower-bound construction needs n >= 7, got {n}")
    a, b, c = 0, 1, 2
    edges = []
    for i in range((n - 3) // 4):
        x, y, z, w = range(3 + 4 * i, 7 + 4 * i)
        edges += [(a, x, y), (a, z, w), (b, x, w), (b, y, z), (c, x, z), (c, y, w)]
    return LinearThreeGraph(n, edges)


def _steiner(n: int, triples) -> LinearThreeGraph:
    H = LinearThreeGraph(n, triples)
    if not is_steiner(H):
        raise AssertionError(f"stored table on {n} points is not a Steiner system")
    return H


def fano() -> LinearThreeGraph:
    return _steiner(7, FANO_LINES)


def sts9() -> LinearThreeGraph:
    return _steiner(9, STS9_TRIPLES)


def minimal_host(G) -> tuple[LinearThreeGraph, Triple]:
    """Smallest host whose edge e = (a, b, c) has link graph exactly G.

    G's vertices must be 0..k-1; a, b, c become k, k+1, k+2 so that vertex ids
    (and color A for the smallest endpoint) carry over unchanged.
    """
    if not isinstance(G, ColoredLinkGraph):
        G = G.graph
    k = len(G.verts)
    if G.verts != frozenset(range(k)):
        raise ValueError("link graph vertices must be 0..k-1")
    e = (k, k + 1, k + 2)
    edges = [e] + [triple(x, y, e[col]) for (x, y), col in G.colored_edges]
    return LinearThreeGraph(k + 3, edges), e


def _check_n(n: int) -> None:
    if not 0 <= n <= 64:
        raise VertexOutOfRange(f"n = {n} outside 0..64")


def random_linear(n: int, m: int, seed: int) -> LinearThreeGraph:
    """m distinct triples sampled uniformly by rejection, keeping linearity."""
    _check_n(n)
    if m > n * (n - 1) // 6:
        raise InfeasibleRequest(f"m = {m} exceeds the pair-packing bound for n = {n}")
    if m == 0:
        return LinearThreeGraph(n)
    rng = random.Random(seed)
    for _ in range(MAX_RESTARTS):
        H = LinearThreeGraph(n)
        misses = 0
        while len(H) < m and misses < 2000:
            t = triple(*rng.sample(range(n), 3))
            if H.can_add(t):
                H = H.add_edge(t)
                misses = 0
            else:
                misses += 1
        if len(H) == m:
            return H
    raise InfeasibleRequest(f"could not place {m} linear triples on {n} vertices")


def random_min_degree(n: int, d: int, seed: int) -> LinearThreeGraph | None:
    """Randomized greedy toward minimum degree >= d; None after the restart cap.

    Each step takes a lowest-degree vertex and completes it with the
    lowest-degree pair of partners that keeps the graph linear.
    """
    _check_n(n)
    if n < 3:
        return None if d > 0 else LinearThreeGraph(n)
    rng = random.Random(seed)
    for _ in range(MAX_RESTARTS):
        deg = [0] * n
        covered = [set() for _ in range(n)]
        edges = []
        while True:
            low = min(deg)
            if low >= d:
                return LinearThreeGraph(n, edges)
            v = rng.choice([u for u in range(n) if deg[u] == low])
            partners = [u for u in range(n) if u != v and u not in covered[v]]
            rng.shuffle(partners)
            partners.sort(key=lambda u: deg[u])
            choice = None
            for i, u in enumerate(partners):
                for w in partners[i + 1:]:
                    if w not in covered[u]:
                        choice = (u, w)
                        break
                if choice:
                    break
            if choice is None:
                break
            u, w = choice
            t = triple(v, u, w)
            edges.append(t)
            for x in t:
                deg[x] += 1
                covered[x].update(y for y in t if y != x)
    return None
