"""Link graphs, rainbow matchings, crowns and good quintuples."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .core import DegreeVector, LinearThreeGraph, Triple, dominates, triple
from .errors import InvalidTriple, PreconditionViolated, TargetNotDominated

Pair = tuple[int, int]


class Color(enum.IntEnum):
    """Link-edge color: which endpoint of the host edge completes it."""

    A = 0
    B = 1
    C = 2

    def __str__(self) -> str:
        return self.name


def _pair(x: int, y: int) -> Pair:
    if x == y:
        raise ValueError(f"loop ({x}, {y}) in link graph")
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class ColoredLinkGraph:
    """Simple graph whose edges are properly colored A/B/C.

    ``host_edge`` is the host triple the link belongs to, or None for catalog
    graphs. Color A belongs to the smallest endpoint of the host edge.
    """

    host_edge: Triple | None
    colored_edges: tuple[tuple[Pair, Color], ...]
    phi: dict[Pair, Color] = field(init=False, repr=False, compare=False)
    verts: frozenset[int] = field(init=False, compare=False)
    adj: dict[int, dict[int, Color]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        phi: dict[Pair, Color] = {}
        adj: dict[int, dict[int, Color]] = {}
        norm = []
        for (x, y), col in self.colored_edges:
            p = _pair(x, y)
            col = Color(col)
            if p in phi:
                raise ValueError(f"pair {p} colored twice")
            for v in p:
                if col in adj.get(v, {}).values():
                    raise ValueError(f"color {col} not a matching at vertex {v}")
            phi[p] = col
            adj.setdefault(p[0], {})[p[1]] = col
            adj.setdefault(p[1], {})[p[0]] = col
            norm.append((p, col))
        verts = frozenset(adj)
        if self.host_edge is not None and verts & set(self.host_edge):
            raise ValueError("link graph meets its host edge")
        object.__setattr__(self, "colored_edges", tuple(sorted(norm)))
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "verts", verts)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, edges, host_edge: Triple | None = None) -> "ColoredLinkGraph":
        return cls(host_edge, tuple(((x, y), Color(c)) for x, y, c in edges))

    def color_class(self, color: Color) -> list[Pair]:
        return [p for p, c in self.colored_edges if c == color]

    def class_sizes(self) -> tuple[int, int, int]:
        return tuple(len(self.color_class(c)) for c in Color)  # type: ignore[return-value]

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.adj.get(x, {})

    def color(self, x: int, y: int) -> Color:
        return self.phi[_pair(x, y)]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj.get(v, {}))

    def relabel(self, vmap, color_perm=(0, 1, 2)) -> "ColoredLinkGraph":
        """Image under a vertex map and a color permutation ``c -> color_perm[c]``."""
        return ColoredLinkGraph(
            self.host_edge,
            tuple(
                ((vmap[x], vmap[y]), Color(color_perm[c])) for (x, y), c in self.colored_edges
            ),
        )

    def lines(self) -> list[str]:
        return [f"{x} {y} {c.name}" for (x, y), c in self.colored_edges]


@dataclass(frozen=True)
class Crown:
    base: Triple
    jewels: tuple[Triple, Triple, Triple]

    def edges(self) -> list[Triple]:
        return [self.base, *self.jewels]


def link_graph(H: LinearThreeGraph, e) -> ColoredLinkGraph:
    e = H._require(e)
    out = []
    for color, z in zip(Color, e):
        for f in H.incident(z):
            if f == e:
                continue
            x, y = (v for v in f if v != z)
            out.append(((x, y), color))
    return ColoredLinkGraph(e, tuple(out))


def has_rainbow_matching(G: ColoredLinkGraph) -> tuple[Pair, Pair, Pair] | None:
    """Lexicographically least rainbow matching as (A-edge, B-edge, C-edge)."""
    ca, cb, cc = (G.color_class(c) for c in Color)
    for x in ca:
        for y in cb:
            if set(x) & set(y):
                continue
            used = set(x) | set(y)
            for z in cc:
                if not used & set(z):
                    return x, y, z
    return None


def is_crown(H: LinearThreeGraph, base, jewels) -> bool:
    try:
        base = triple(*base)
        jewels = [triple(*j) for j in jewels]
    except (InvalidTriple, TypeError, ValueError):
        return False
    if len(jewels) != 3 or base not in H or any(j not in H for j in jewels):
        return False
    for j in jewels:
        if len(set(j) & set(base)) != 1:
            return False
    for i, j in itertools.combinations(jewels, 2):
        if set(i) & set(j):
            return False
    return True


def crown_with_base(H: LinearThreeGraph, e) -> Crown | None:
    G = link_graph(H, e)
    hit = has_rainbow_matching(G)
    if hit is None:
        return None
    base = G.host_edge
    jewels = tuple(triple(x, y, z) for (x, y), z in zip(hit, base))
    crown = Crown(base, jewels)  # type: ignore[arg-type]
    assert is_crown(H, crown.base, crown.jewels)
    return crown


def find_crown(H: LinearThreeGraph) -> Crown | None:
    """First crown found scanning bases in lexicographic order."""
    for e in H.edges:
        crown = crown_with_base(H, e)
        if crown is not None:
            if not is_crown(H, crown.base, crown.jewels):
                raise AssertionError(f"invalid crown {crown}")
            return crown
    return None


def is_good_quintuple(G: ColoredLinkGraph, q) -> bool:
    if len(q) != 5 or len(set(q)) != 5:
        return False
    x1, x2, x3, x4, x5 = q
    if not (G.has_edge(x1, x2) and G.has_edge(x2, x3) and G.has_edge(x4, x5)):
        return False
    return G.color(x1, x2) == G.color(x4, x5)


def good_quintuples(G: ColoredLinkGraph):
    """All good quintuples in a deterministic order."""
    for x1 in sorted(G.verts):
        for x2 in G.neighbors(x1):
            col = G.color(x1, x2)
            for x3 in G.neighbors(x2):
                if x3 == x1:
                    continue
                for x4, x5 in G.color_class(col):
                    if {x4, x5} & {x1, x2, x3}:
                        continue
                    yield (x1, x2, x3, x4, x5)
                    yield (x1, x2, x3, x5, x4)


def quintuple_starters(G: ColoredLinkGraph) -> set[int]:
    return {q[0] for q in good_quintuples(G)}


def crown_from_quintuple(H: LinearThreeGraph, e, q, f) -> Crown:
    """Crown forced by a good quintuple and an edge ``f`` meeting it only in x1."""
    e = H._require(e)
    G = link_graph(H, e)
    if not is_good_quintuple(G, q):
        raise PreconditionViolated("q is not a good quintuple of the link graph")
    try:
        f = triple(*f)
    except InvalidTriple:
        raise PreconditionViolated("f is not a triple") from None
    if f not in H:
        raise PreconditionViolated("f is not an edge of H")
    if set(f) & set(e):
        raise PreconditionViolated("f meets e")
    if set(f) & set(q) != {q[0]}:
        raise PreconditionViolated("f meets the quintuple outside x1")
    x1, x2, x3, x4, x5 = q
    base = H.covering_edge(x1, x2)
    jewels = (f, H.covering_edge(x2, x3), H.covering_edge(x4, x5))
    if not is_crown(H, base, jewels):
        raise AssertionError(f"quintuple {q} with {f} gave no crown")
    return Crown(base, jewels)  # type: ignore[arg-type]


def trim_to_degree_vector(H: LinearThreeGraph, e, target) -> LinearThreeGraph:
    """Delete edges through the endpoints of ``e`` until D(e) equals ``target``.

    Endpoints are matched to target coordinates by descending degree (ties by
    vertex id); each endpoint drops its lexicographically largest edges first.
    """
    e = H._require(e)
    target = DegreeVector.of(*target)
    if target.d3 < 1:
        raise ValueError(f"target {target} must be at least <1,1,1>")
    if not dominates(H.degree_vector(e), target):
        raise TargetNotDominated(f"D({e}) = {H.degree_vector(e)} does not dominate {target}")
    order = sorted(e, key=lambda v: (-H.degree(v), v))
    drop: set[Triple] = set()
    for v, want in zip(order, target):
        extra = H.degree(v) - want
        incident = [f for f in H.incident(v) if f != e]
        drop.update(sorted(incident, reverse=True)[:extra])
    if not drop:
        return H
    return LinearThreeGraph(H.n, (f for f in H.edges if f not in drop))
