"""Linear 3-graphs: representation, degrees, degree vectors, canonical codes, I/O.

Vertices are dense 0-based integers. Edges are sorted triples kept in
lexicographic order, and every vertex pair is covered by at most one edge.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import NamedTuple

from .canon import canonical_labeling
from .errors import (
    DuplicateEdge,
    EdgeNotPresent,
    EmptyVertexSet,
    InvalidTriple,
    LinearityViolation,
    ParseError,
    VertexOutOfRange,
)

MAX_N = 64

Triple = tuple[int, int, int]
Pair = tuple[int, int]


def triple(a: int, b: int, c: int) -> Triple:
    """Return the canonical (sorted) triple on three distinct vertices."""
    if a == b or b == c or a == c:
        raise InvalidTriple(f"triple ({a}, {b}, {c}) repeats a vertex")
    if min(a, b, c) < 0:
        raise InvalidTriple(f"triple ({a}, {b}, {c}) has a negative vertex")
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


def pairs_of(t: Triple) -> tuple[Pair, Pair, Pair]:
    a, b, c = t
    return (a, b), (a, c), (b, c)


class DegreeVector(NamedTuple):
    """Endpoint degrees of an edge, non-increasing."""

    d1: int
    d2: int
    d3: int

    @classmethod
    def of(cls, *degrees: int) -> "DegreeVector":
        if len(degrees) == 1:
            degrees = tuple(degrees[0])
        if len(degrees) != 3 or min(degrees) < 0:
            raise ValueError(f"bad degree vector {degrees}")
        return cls(*sorted(degrees, reverse=True))

    def __str__(self) -> str:
        return f"<{self.d1},{self.d2},{self.d3}>"


def dominates(p: DegreeVector, q: DegreeVector) -> bool:
    """Coordinatewise partial order on degree vectors."""
    return p[0] >= q[0] and p[1] >= q[1] and p[2] >= q[2]


class LinearThreeGraph:
    """Immutable linear 3-uniform hypergraph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_edges", "_pairs", "_deg", "_code")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if not 0 <= n <= MAX_N:
            raise VertexOutOfRange(f"n = {n} outside supported range 0..{MAX_N}")
        self._n = n
        pairs: dict[Pair, Triple] = {}
        deg = [0] * n
        seen: set[Triple] = set()
        for raw in edges:
            t = triple(*raw)
            if t[2] >= n:
                raise VertexOutOfRange(f"edge {t} has a vertex >= n = {n}")
            if t in seen:
                raise DuplicateEdge(f"edge {t} listed twice")
            for p in pairs_of(t):
                if p in pairs:
                    raise LinearityViolation(t, p, pairs[p])
            for p in pairs_of(t):
                pairs[p] = t
            for v in t:
                deg[v] += 1
            seen.add(t)
        self._edges: tuple[Triple, ...] = tuple(sorted(seen))
        self._pairs = pairs
        self._deg = tuple(deg)
        self._code: bytes | None = None

    @classmethod
    def empty(cls, n: int) -> "LinearThreeGraph":
        return cls(n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Triple, ...]:
        return self._edges

    @property
    def pair_index(self) -> dict[Pair, Triple]:
        return dict(self._pairs)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, t) -> bool:
        try:
            t = triple(*t)
        except (InvalidTriple, TypeError, ValueError):
            return False
        return self._pairs.get((t[0], t[1])) == t

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearThreeGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"LinearThreeGraph(n={self._n}, m={len(self._edges)})"

    def covering_edge(self, u: int, v: int) -> Triple | None:
        """The edge covering the pair {u, v}, if any."""
        return self._pairs.get((u, v) if u < v else (v, u))

    def add_edge(self, t: Iterable[int]) -> "LinearThreeGraph":
        t = triple(*t)
        if t[2] >= self._n:
            raise VertexOutOfRange(f"edge {t} has a vertex >= n = {self._n}")
        if t in self:
            raise DuplicateEdge(f"edge {t} already present")
        for p in pairs_of(t):
            if p in self._pairs:
                raise LinearityViolation(t, p, self._pairs[p])
        return LinearThreeGraph(self._n, self._edges + (t,))

    def remove_edge(self, e: Iterable[int]) -> "LinearThreeGraph":
        e = self._require(e)
        return LinearThreeGraph(self._n, (f for f in self._edges if f != e))

    def can_add(self, t: Triple) -> bool:
        """True iff ``t`` is absent and covers no already-covered pair."""
        return all(p not in self._pairs for p in pairs_of(t))

    def _require(self, e) -> Triple:
        try:
            t = triple(*e)
        except InvalidTriple as exc:
            raise EdgeNotPresent(str(exc)) from None
        if t not in self:
            raise EdgeNotPresent(f"edge {t} not in graph")
        return t

    def degree(self, v: int) -> int:
        if not 0 <= v < self._n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self._n - 1}")
        return self._deg[v]

    def degree_vector(self, e: Iterable[int]) -> DegreeVector:
        t = self._require(e)
        return DegreeVector.of(*(self._deg[v] for v in t))

    def min_degree(self) -> int:
        if self._n == 0:
            raise EmptyVertexSet("minimum degree of a graph with no vertices")
        return min(self._deg)

    def incident(self, v: int) -> list[Triple]:
        return [t for t in self._edges if v in t]

    def edges_meeting(self, e: Triple) -> list[Triple]:
        """Edges other than ``e`` sharing a vertex with it."""
        s = set(e)
        return [f for f in self._edges if f != e and s.intersection(f)]

    def relabel(self, perm) -> "LinearThreeGraph":
        """Image under the vertex map ``v -> perm[v]``."""
        return LinearThreeGraph(self._n, (tuple(perm[v] for v in t) for t in self._edges))

    def canonical_code(self) -> bytes:
        if self._code is None:
            self._code = canonical_code(self)
        return self._code


def is_linear(n: int, edges: Iterable[Iterable[int]]) -> bool:
    """Full pairwise rescan, independent of any pair index."""
    es = [frozenset(e) for e in edges]
    if any(len(e) != 3 or max(e) >= n or min(e) < 0 for e in es):
        return False
    if len(set(es)) != len(es):
        return False
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if len(es[i] & es[j]) > 1:
                return False
    return True


def degree(H: LinearThreeGraph, v: int) -> int:
    return H.degree(v)


def degree_vector(H: LinearThreeGraph, e) -> DegreeVector:
    return H.degree_vector(e)


def min_degree(H: LinearThreeGraph) -> int:
    return H.min_degree()


def add_edge(H: LinearThreeGraph, t) -> LinearThreeGraph:
    return H.add_edge(t)


def remove_edge(H: LinearThreeGraph, e) -> LinearThreeGraph:
    return H.remove_edge(e)


def incidence_structure(n: int, edges) -> tuple[list[list[int]], list[int]]:
    """Bipartite vertex-edge incidence graph; edge nodes follow the n vertex nodes."""
    adj: list[list[int]] = [[] for _ in range(n + len(edges))]
    for i, t in enumerate(edges):
        node = n + i
        for v in t:
            adj[v].append(node)
            adj[node].append(v)
    colors = [0] * n + [1] * len(edges)
    return adj, colors


def canonical_order(H: LinearThreeGraph) -> tuple[list[int], tuple]:
    """Canonical vertex ranking of H and the edge certificate it produces.

    Returns ``(rank, cert)`` where ``rank[v]`` is v's canonical label and
    ``cert`` is the sorted tuple of relabeled edges.
    """
    n = H.n
    edges = H.edges
    adj, colors = incidence_structure(n, edges)

    def cert(order):
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        return tuple(sorted(tuple(sorted(pos[v] for v in t)) for t in edges))

    lab = canonical_labeling(adj, colors, cert)
    return lab.position[:n], lab.certificate


def canonical_form(H: LinearThreeGraph) -> tuple[list[int], tuple, list[list[int]]]:
    """Like :func:`canonical_order`, plus automorphism generators on vertices."""
    n = H.n
    edges = H.edges
    adj, colors = incidence_structure(n, edges)

    def cert(order):
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        return tuple(sorted(tuple(sorted(pos[v] for v in t)) for t in edges))

    lab = canonical_labeling(adj, colors, cert)
    gens = [g[:n] for g in lab.generators]
    return lab.position[:n], lab.certificate, [g for g in gens if g != list(range(n))]


def code_from_certificate(n: int, cert: tuple) -> bytes:
    out = bytearray((n, len(cert)))
    for t in cert:
        out.extend(t)
    return bytes(out)


def canonical_code(H: LinearThreeGraph) -> bytes:
    """Isomorphism-invariant byte string; equal iff the graphs are isomorphic."""
    _, cert = canonical_order(H)
    return code_from_certificate(H.n, cert)


def serialize(H: LinearThreeGraph) -> str:
    lines = [f"{H.n} {len(H.edges)}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in H.edges)
    return "\n".join(lines) + "\n"


def parse(text: str) -> LinearThreeGraph:
    """Parse the ``.l3g`` text format.

    Raises ParseError (with a 1-based line number) on malformed input and
    LinearityViolation when two edges share a pair.
    """
    header = None
    edges: list[Triple] = []
    seen: set[Triple] = set()
    pairs: dict[Pair, Triple] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            nums = [int(x) for x in fields]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2:
                raise ParseError("header must be 'n m'", lineno)
            n, m = nums
            if n < 0 or m < 0:
                raise ParseError("n and m must be non-negative", lineno)
            if n > MAX_N:
                raise ParseError(f"n = {n} exceeds the supported maximum {MAX_N}", lineno)
            header = (n, m)
            continue
        if len(nums) != 3:
            raise ParseError(f"edge line needs 3 vertices, got {len(nums)}", lineno)
        a, b, c = nums
        if len({a, b, c}) != 3:
            raise ParseError(f"edge {a} {b} {c} repeats a vertex", lineno)
        if min(nums) < 0 or max(nums) >= header[0]:
            raise ParseError(f"vertex out of range 0..{header[0] - 1}", lineno)
        if len(edges) == header[1]:
            raise ParseError(f"more than the declared {header[1]} edges", lineno)
        t = triple(a, b, c)
        if t in seen:
            raise ParseError(f"duplicate edge {a} {b} {c}", lineno)
        for p in pairs_of(t):
            if p in pairs:
                raise LinearityViolation(t, p, pairs[p])
        for p in pairs_of(t):
            pairs[p] = t
        seen.add(t)
        edges.append(t)
    if header is None:
        raise ParseError("missing 'n m' header", last_line or 1)
    if len(edges) != header[1]:
        raise ParseError(f"declared {header[1]} edges, found {len(edges)}", last_line)
    return LinearThreeGraph(header[0], edges)
