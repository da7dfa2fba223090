"""Named crown-free link graphs and their classification up to color permutation.

G1-G5 are the rainbow-free unions of three 3-edge matchings; G6 is the
(3,3,2) link graph made of two vertex-disjoint four-cycles. ``enumerate_444``
rebuilds the first five from scratch, so the stored tables are checked rather
than trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_labeling
from .errors import UnknownName
from .links import Color, ColoredLinkGraph, has_rainbow_matching

PERMUTATIONS: tuple[tuple[int, int, int], ...] = tuple(itertools.permutations(range(3)))  # type: ignore[assignment]

A, B, C = Color.A, Color.B, Color.C

# Seven-vertex alternating A-B path p0..p6.
_PATH7 = [(0, 1, A), (1, 2, B), (2, 3, A), (3, 4, B), (4, 5, A), (5, 6, B)]
# A-B path v0 v1 v2, alternating A-B four-cycle w = 3..6, spare vertex 7.
_PATH3_CYCLE4 = [(0, 1, A), (1, 2, B), (3, 4, A), (4, 5, B), (5, 6, A), (6, 3, B)]

_TABLES = {
    "G1": (_PATH3_CYCLE4 + [(0, 2, C), (3, 5, C), (4, 6, C)],
           "A-B path v1v2v3 plus A-B 4-cycle w1..w4; C-edges v1v3, w1w3, w2w4"),
    "G2": (_PATH3_CYCLE4 + [(0, 2, C), (7, 1, C), (3, 5, C)],
           "A-B path v1v2v3 plus A-B 4-cycle w1..w4; C-edges v1v3, u v2, w1w3"),
    "G3": (_PATH7 + [(0, 2, C), (1, 3, C), (4, 6, C)],
           "alternating A-B path v1..v7; C-edges v1v3, v2v4, v5v7"),
    "G4": (_PATH7 + [(0, 2, C), (1, 6, C), (3, 5, C)],
           "alternating A-B path v1..v7; C-edges v1v3, v2v7, v4v6"),
    "G5": (_PATH3_CYCLE4 + [(7, 1, C), (3, 5, C), (4, 6, C)],
           "A-B path v1v2v3 plus A-B 4-cycle w1..w4; C-edges u v2, w1w3, w2w4"),
    "G6": ([(0, 1, C), (1, 2, A), (2, 3, C), (3, 0, B),
            (4, 5, A), (5, 6, B), (6, 7, A), (7, 4, B)],
           "4-cycle colored C,A,C,B plus alternating A-B 4-cycle"),
}

NAMES = tuple(_TABLES)


@dataclass(frozen=True)
class CatalogGraph:
    name: str
    graph: ColoredLinkGraph
    source_note: str


@dataclass(frozen=True)
class ColorIso:
    """``vertex_map`` and ``color_perm`` send the source onto the target."""

    vertex_map: dict
    color_perm: tuple[int, int, int]

    def apply(self, G: ColoredLinkGraph) -> ColoredLinkGraph:
        return G.relabel(self.vertex_map, self.color_perm)


def _labeling(G: ColoredLinkGraph, perm=(0, 1, 2)):
    verts = sorted(G.verts)
    index = {v: i for i, v in enumerate(verts)}
    k = len(verts)
    adj: list[list[int]] = [[] for _ in range(k + len(G.colored_edges))]
    colors = [0] * k
    for i, ((x, y), c) in enumerate(G.colored_edges):
        node = k + i
        adj[node] = [index[x], index[y]]
        adj[index[x]].append(node)
        adj[index[y]].append(node)
        colors.append(1 + perm[c])
    pcolor = [perm[c] for _, c in G.colored_edges]
    ends = [(index[x], index[y]) for (x, y), _ in G.colored_edges]

    def cert(order):
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        return (k,) + tuple(
            sorted((col, *sorted((pos[x], pos[y]))) for col, (x, y) in zip(pcolor, ends))
        )

    lab = canonical_labeling(adj, colors, cert)
    return verts, lab


def class_key(G: ColoredLinkGraph) -> tuple:
    """Least certificate over all six color permutations."""
    return min(_labeling(G, p)[1].certificate for p in PERMUTATIONS)


def color_iso(G: ColoredLinkGraph, H: ColoredLinkGraph) -> ColorIso | None:
    if len(G.verts) != len(H.verts) or len(G.colored_edges) != len(H.colored_edges):
        return None
    hverts, hlab = _labeling(H)
    for perm in PERMUTATIONS:
        gverts, glab = _labeling(G, perm)
        if glab.certificate != hlab.certificate:
            continue
        vmap = {gverts[v]: hverts[hlab.order[glab.position[v]]] for v in range(len(gverts))}
        iso = ColorIso(vmap, perm)
        if iso.apply(G).colored_edges != H.colored_edges:
            raise AssertionError("color isomorphism witness failed to verify")
        return iso
    return None


def two_disjoint_four_cycles(G: ColoredLinkGraph) -> bool:
    """Does the uncolored graph contain two vertex-disjoint 4-cycles?"""
    cycles = []
    for quad in itertools.combinations(sorted(G.verts), 4):
        a, b, c, d = quad
        for p, q, r, s in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if G.has_edge(p, q) and G.has_edge(q, r) and G.has_edge(r, s) and G.has_edge(s, p):
                cycles.append(frozenset(quad))
                break
    return any(not x & y for x, y in itertools.combinations(cycles, 2))


disjoint_four_cycles = two_disjoint_four_cycles


def _validate(name: str, G: ColoredLinkGraph) -> None:
    if has_rainbow_matching(G) is not None:
        raise AssertionError(f"{name} has a rainbow matching")
    want = (3, 3, 2) if name == "G6" else (3, 3, 3)
    if G.class_sizes() != want:
        raise AssertionError(f"{name} color classes {G.class_sizes()} != {want}")
    if two_disjoint_four_cycles(G) != (name == "G6"):
        raise AssertionError(f"{name} fails the two-disjoint-four-cycles check")


@lru_cache(maxsize=None)
def builtin(name: str) -> CatalogGraph:
    if name not in _TABLES:
        raise UnknownName(f"unknown catalog graph {name!r}; expected one of {', '.join(NAMES)}")
    edges, note = _TABLES[name]
    G = ColoredLinkGraph.from_edges(edges)
    _validate(name, G)
    return CatalogGraph(name, G, note)


@lru_cache(maxsize=None)
def _builtin_keys() -> dict[tuple, str]:
    return {class_key(builtin(name).graph): name for name in NAMES[:5]}


def classify_444(G: ColoredLinkGraph) -> str | None:
    """Name of the builtin G1..G5 color-isomorphic to G, if G is a rainbow-free
    union of three 3-edge matchings."""
    if G.class_sizes() != (3, 3, 3) or has_rainbow_matching(G) is not None:
        return None
    return _builtin_keys().get(class_key(G))


def _matchings(pool: int, size: int, forbidden=frozenset()):
    """All sets of ``size`` disjoint pairs on 0..pool-1 avoiding ``forbidden``."""
    pairs = [p for p in itertools.combinations(range(pool), 2) if p not in forbidden]

    def rec(start, used, chosen):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(pairs)):
            x, y = pairs[i]
            if x in used or y in used:
                continue
            chosen.append(pairs[i])
            yield from rec(i + 1, used | {x, y}, chosen)
            chosen.pop()

    yield from rec(0, frozenset(), [])


def _fresh_contiguous(matching, first_new: int) -> bool:
    """New vertices (>= first_new) must be exactly first_new, first_new+1, ..."""
    new = sorted({v for p in matching for v in p if v >= first_new})
    return new == list(range(first_new, first_new + len(new)))


def _rainbow_in(edges) -> bool:
    cls = ([], [], [])
    for (x, y), c in edges:
        cls[c].append({x, y})
    for x in cls[0]:
        for y in cls[1]:
            if x & y:
                continue
            for z in cls[2]:
                if not (x | y) & z:
                    return True
    return False


def enumerate_444(stats: dict | None = None) -> list[ColoredLinkGraph]:
    """Every rainbow-free union of three 3-edge matchings, up to color isomorphism.

    Color A is fixed on vertices 0..5. Color B ranges over all matchings that
    use fresh vertices in order, deduplicated up to isomorphism of the
    two-colored graph. Color C is added edge by edge, abandoning any partial
    graph that already has a rainbow matching. Survivors are grouped by
    ``class_key``.
    """
    alpha = ((0, 1), (2, 3), (4, 5))
    ab_reps: dict[tuple, tuple] = {}
    for beta in _matchings(12, 3, frozenset(alpha)):
        if not _fresh_contiguous(beta, 6):
            continue
        G = ColoredLinkGraph(None, tuple((p, A) for p in alpha) + tuple((p, B) for p in beta))
        key = _labeling(G)[1].certificate
        ab_reps.setdefault(key, beta)

    classes: dict[tuple, ColoredLinkGraph] = {}
    examined = 0
    for beta in ab_reps.values():
        base = [(p, 0) for p in alpha] + [(p, 1) for p in beta]
        used = 1 + max(v for p in alpha + beta for v in p)
        taken = set(alpha) | set(beta)
        pairs = [p for p in itertools.combinations(range(used + 6), 2) if p not in taken]

        def rec(start, busy, chosen):
            nonlocal examined
            examined += 1
            if len(chosen) == 3:
                if _fresh_contiguous(chosen, used):
                    G = ColoredLinkGraph(None, tuple((p, Color(c)) for p, c in base)
                                         + tuple((p, C) for p in chosen))
                    classes.setdefault(class_key(G), G)
                return
            for i in range(start, len(pairs)):
                x, y = pairs[i]
                if x in busy or y in busy:
                    continue
                chosen.append(pairs[i])
                if not _rainbow_in(base + [(p, 2) for p in chosen]):
                    rec(i + 1, busy | {x, y}, chosen)
                chosen.pop()

        rec(0, frozenset(), [])
    if stats is not None:
        stats["ab_classes"] = len(ab_reps)
        stats["nodes"] = examined
    return [classes[k] for k in sorted(classes)]


def verify_catalog(classes=None) -> list[dict]:
    """Match enumerated classes against the builtins; one row per class."""
    if classes is None:
        classes = enumerate_444()
    keys = _builtin_keys()
    rows = []
    for G in classes:
        name = keys.get(class_key(G))
        rows.append({
            "name": name,
            "vertices": len(G.verts),
            "edges": len(G.colored_edges),
            "matched": name is not None and color_iso(G, builtin(name).graph) is not None,
        })
    return rows
