"""Pure-Python hot kernels (fallback for the compiled ``_kernels`` module).

Graphs are passed as ``n`` plus a list of sorted triples. Internally every edge
is a 64-bit vertex mask, which is why ``n`` is capped at 64.
"""

from __future__ import annotations

import heapq

IMPLEMENTATION = "python"


def _incidence(n, edges):
    inc = [[] for _ in range(n)]
    for a, b, c in edges:
        m = (1 << a) | (1 << b) | (1 << c)
        inc[a].append(m)
        inc[b].append(m)
        inc[c].append(m)
    return inc


def _rainbow(fa, fb, fc):
    for x in fa:
        for y in fb:
            if x & y:
                continue
            xy = x | y
            for z in fc:
                if not xy & z:
                    return (x, y, z)
    return None


def _crown_with(inc, a, b, c):
    """True iff the graph with incidence ``inc`` plus edge (a, b, c) has a crown
    using that edge as base or jewel. (a, b, c) must not be in ``inc``."""
    t = (1 << a) | (1 << b) | (1 << c)
    if _rainbow(inc[a], inc[b], inc[c]) is not None:
        return True
    for v in (a, b, c):
        for base in inc[v]:
            others = base & ~(1 << v)
            u = (others & -others).bit_length() - 1
            w = (others & ~(1 << u)).bit_length() - 1
            for fu in inc[u]:
                if fu == base or fu & t:
                    continue
                for fw in inc[w]:
                    if fw != base and not fw & t and not fw & fu:
                        return True
    return False


def crown_with_edge(n, edges, t):
    """Does ``edges + [t]`` contain a crown in which ``t`` takes part?"""
    return _crown_with(_incidence(n, edges), *t)


def _bits(m):
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def find_crown(n, edges):
    """First crown as (base, (j1, j2, j3)) with bases in lexicographic order,
    or None. Jewels are listed by the base vertex they meet."""
    inc = _incidence(n, edges)
    for a, b, c in edges:
        base = (1 << a) | (1 << b) | (1 << c)
        fa = sorted(m for m in inc[a] if m != base)
        fb = sorted(m for m in inc[b] if m != base)
        fc = sorted(m for m in inc[c] if m != base)
        hit = _rainbow(fa, fb, fc)
        if hit is not None:
            return (a, b, c), tuple(tuple(_bits(m)) for m in hit)
    return None


def _dominated(d1, d2, d3, restrictions):
    for r1, r2, r3 in restrictions:
        if d1 >= r1 and d2 >= r2 and d3 >= r3:
            return True
    return False


def _dv(deg, a, b, c):
    x, y, z = deg[a], deg[b], deg[c]
    if x < y:
        x, y = y, x
    if y < z:
        y, z = z, y
    if x < y:
        x, y = y, x
    return x, y, z


def admissible(n, edges, candidates, restrictions=()):
    """Filter ``candidates`` to triples t for which ``edges + [t]`` stays
    linear, crown-free and free of restricted degree vectors.

    ``edges`` itself is assumed to satisfy all three conditions.
    """
    inc = _incidence(n, edges)
    covered = [0] * n
    deg = [0] * n
    for a, b, c in edges:
        covered[a] |= (1 << b) | (1 << c)
        covered[b] |= (1 << a) | (1 << c)
        covered[c] |= (1 << a) | (1 << b)
        deg[a] += 1
        deg[b] += 1
        deg[c] += 1
    out = []
    for t in candidates:
        a, b, c = t
        if covered[a] >> b & 1 or covered[a] >> c & 1 or covered[b] >> c & 1:
            continue
        if restrictions:
            deg[a] += 1
            deg[b] += 1
            deg[c] += 1
            bad = _dominated(*_dv(deg, a, b, c), restrictions)
            if not bad:
                for v in (a, b, c):
                    for m in inc[v]:
                        x, y, z = _bits(m)
                        if _dominated(*_dv(deg, x, y, z), restrictions):
                            bad = True
                            break
                    if bad:
                        break
            deg[a] -= 1
            deg[b] -= 1
            deg[c] -= 1
            if bad:
                continue
        if _crown_with(inc, a, b, c):
            continue
        out.append(t)
    return out


def refine(lab, start_of, cell_end, off, tgt, queue):
    """Refine an ordered partition in place to the coarsest equitable one.

    ``lab``/``start_of``/``cell_end`` describe the partition (see canon), the
    graph is in CSR form (``off``, ``tgt``), and ``queue`` holds the starts of
    the splitter cells. Splitters are taken smallest start first and fragments
    are ordered by neighbor count, so the outcome does not depend on labels.
    Returns the number of cells.
    """
    n = len(lab)
    pending = [False] * n
    heap = []
    for s in queue:
        if not pending[s]:
            pending[s] = True
            heap.append(s)
    heapq.heapify(heap)
    count = [0] * n
    while heap:
        s = heapq.heappop(heap)
        pending[s] = False
        touched = []
        for i in range(s, cell_end[s]):
            w = lab[i]
            for j in range(off[w], off[w + 1]):
                u = tgt[j]
                if count[u] == 0:
                    touched.append(u)
                count[u] += 1
        for cs in sorted({start_of[u] for u in touched}):
            ce = cell_end[cs]
            if ce - cs == 1:
                continue
            cell = lab[cs:ce]
            first = count[cell[0]]
            if all(count[v] == first for v in cell):
                continue
            cell.sort(key=count.__getitem__)
            lab[cs:ce] = cell
            frags = [cs]
            for i in range(1, ce - cs):
                if count[cell[i]] != count[cell[i - 1]]:
                    frags.append(cs + i)
            bounds = frags + [ce]
            largest, size = 0, -1
            for k in range(len(frags)):
                cell_end[bounds[k]] = bounds[k + 1]
                for j in range(bounds[k], bounds[k + 1]):
                    start_of[lab[j]] = bounds[k]
                if bounds[k + 1] - bounds[k] > size:
                    largest, size = k, bounds[k + 1] - bounds[k]
            was_pending = pending[cs]
            for k, f in enumerate(frags):
                if (was_pending or k != largest) and not pending[f]:
                    pending[f] = True
                    heapq.heappush(heap, f)
        for u in touched:
            count[u] = 0
    cells = 0
    s = 0
    while s < n:
        cells += 1
        s = cell_end[s]
    return cells
