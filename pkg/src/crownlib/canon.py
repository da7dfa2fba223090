"""Canonical labeling of small vertex-colored graphs.

Individualization-refinement in the style of nauty: equitable refinement of an
ordered partition, a search tree over individualized vertices, and pruning by
automorphisms discovered at the leaves. The refinement step is the hot loop
and lives in :mod:`crownlib.kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels


@dataclass
class Labeling:
    """Result of a canonical labeling run.

    ``order[i]`` is the node placed at canonical position ``i``; ``position`` is
    the inverse map. ``certificate`` is the relabeled edge list, equal for two
    inputs iff they are isomorphic (as colored graphs with the same color keys).
    """

    order: list[int]
    position: list[int]
    certificate: tuple
    generators: list[list[int]] = field(default_factory=list)
    leaves: int = 0


class _Partition:
    """Ordered partition: ``lab`` lists nodes cell by cell; ``cell_end[s]`` is
    the exclusive end of the cell starting at position s, or -1."""

    __slots__ = ("lab", "start_of", "cell_end", "n", "ncells")

    def __init__(self, lab, start_of, cell_end, ncells):
        self.lab = lab
        self.start_of = start_of
        self.cell_end = cell_end
        self.n = len(lab)
        self.ncells = ncells

    @classmethod
    def from_colors(cls, colors):
        n = len(colors)
        lab = sorted(range(n), key=lambda v: (colors[v], v))
        start_of = [0] * n
        cell_end = [-1] * n
        ncells = 0
        s = 0
        for i in range(1, n + 1):
            if i == n or colors[lab[i]] != colors[lab[s]]:
                for j in range(s, i):
                    start_of[lab[j]] = s
                cell_end[s] = i
                ncells += 1
                s = i
        return cls(lab, start_of, cell_end, ncells)

    def copy(self):
        return _Partition(self.lab[:], self.start_of[:], self.cell_end[:], self.ncells)

    def cell_starts(self):
        out = []
        s = 0
        while s < self.n:
            out.append(s)
            s = self.cell_end[s]
        return out

    def is_discrete(self):
        return self.ncells == self.n

    def refine(self, graph, queue):
        self.ncells = kernels.refine(self.lab, self.start_of, self.cell_end, graph[0], graph[1], queue)

    def individualize(self, v):
        s = self.start_of[v]
        e = self.cell_end[s]
        lab = self.lab
        i = lab.index(v, s, e)
        lab[s], lab[i] = lab[i], lab[s]
        self.cell_end[s] = s + 1
        self.cell_end[s + 1] = e
        for j in range(s + 1, e):
            self.start_of[lab[j]] = s + 1
        self.ncells += 1
        return s


def _csr(adj):
    off = [0]
    tgt = []
    for nbrs in adj:
        tgt.extend(nbrs)
        off.append(len(tgt))
    return off, tgt


def _orbits_containing(generators, cell, fixed):
    """Union-find orbits of ``cell`` under generators fixing ``fixed`` pointwise."""
    parent = {v: v for v in cell}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        if any(g[p] != p for p in fixed):
            continue
        for v in cell:
            w = g[v]
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    parent[max(rv, rw)] = min(rv, rw)
    return find


def canonical_labeling(adj, colors, certificate=None) -> Labeling:
    """Canonically label the graph with adjacency lists ``adj``.

    ``colors`` gives an initial color key per node; cells are ordered by key,
    so the labeling respects the color classes. ``certificate(order)`` builds the
    comparable certificate for a discrete ordering; by default it is the sorted
    list of relabeled edges.
    """
    n = len(adj)
    if certificate is None:

        def certificate(order):
            pos = [0] * n
            for i, v in enumerate(order):
                pos[v] = i
            return tuple(
                sorted(
                    (pos[u], pos[w]) if pos[u] < pos[w] else (pos[w], pos[u])
                    for u in range(n)
                    for w in adj[u]
                    if u < w
                )
            )

    graph = _csr(adj)
    root = _Partition.from_colors(colors)
    if n == 0:
        return Labeling([], [], certificate([]), [], 1)
    root.refine(graph, root.cell_starts())

    generators: list[list[int]] = []
    state = {"first": None, "best": None, "leaves": 0}

    def record_auto(ref_order, order):
        g = list(range(n))
        for a, b in zip(ref_order, order):
            g[a] = b
        if any(g[i] != i for i in range(n)):
            generators.append(g)

    def leaf(part):
        order = part.lab[:]
        cert = certificate(order)
        state["leaves"] += 1
        if state["first"] is None:
            state["first"] = (cert, order)
            state["best"] = (cert, order)
            return
        if cert == state["first"][0]:
            record_auto(state["first"][1], order)
            return
        best_cert, best_order = state["best"]
        if cert == best_cert:
            record_auto(best_order, order)
        elif cert < best_cert:
            state["best"] = (cert, order)

    def visit(part, prefix):
        if part.is_discrete():
            leaf(part)
            return
        target = None
        for s in part.cell_starts():
            if part.cell_end[s] - s > 1:
                target = s
                break
        cell = sorted(part.lab[target:part.cell_end[target]])
        explored: list[int] = []
        seen_gens = -1
        find = None
        for v in cell:
            if explored:
                if len(generators) != seen_gens:
                    find = _orbits_containing(generators, cell, prefix)
                    seen_gens = len(generators)
                rv = find(v)
                if any(find(w) == rv for w in explored):
                    continue
            child = part.copy()
            s = child.individualize(v)
            child.refine(graph, [s])
            visit(child, prefix + [v])
            explored.append(v)

    visit(root, [])
    cert, order = state["best"]
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    return Labeling(order, position, cert, generators, state["leaves"])


def orbits(n: int, generators) -> list[int]:
    """Orbit representative (smallest member) for each of ``n`` points."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]
