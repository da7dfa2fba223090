# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Same API and results as ``_kernels_py``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"

cdef enum:
    MAXN = 64
    MAXDEG = 32


cdef struct Inc:
    int cnt[MAXN]
    uint64_t m[MAXN][MAXDEG]


cdef inline uint64_t _mask(int a, int b, int c) nogil:
    return (<uint64_t>1 << a) | (<uint64_t>1 << b) | (<uint64_t>1 << c)


cdef inline int _low(uint64_t m) nogil:
    cdef int i = 0
    while not (m >> i) & 1:
        i += 1
    return i


cdef inline int _high(uint64_t m) nogil:
    cdef int i = 63
    while not (m >> i) & 1:
        i -= 1
    return i


cdef int _load(Inc* inc, int n, edges) except -1:
    cdef int v, a, b, c
    cdef uint64_t m
    if n > MAXN:
        raise ValueError("n > 64")
    for v in range(n):
        inc.cnt[v] = 0
    for t in edges:
        a, b, c = t
        m = _mask(a, b, c)
        for v in (a, b, c):
            if inc.cnt[v] >= MAXDEG:
                raise ValueError("degree too large for a linear 3-graph")
            inc.m[v][inc.cnt[v]] = m
            inc.cnt[v] += 1
    return 0


cdef bint _rainbow(uint64_t* fa, int na, uint64_t* fb, int nb, uint64_t* fc, int nc,
                   uint64_t* hit) nogil:
    cdef int i, j, k
    cdef uint64_t x, y, xy
    for i in range(na):
        x = fa[i]
        for j in range(nb):
            y = fb[j]
            if x & y:
                continue
            xy = x | y
            for k in range(nc):
                if not xy & fc[k]:
                    hit[0] = x
                    hit[1] = y
                    hit[2] = fc[k]
                    return True
    return False


cdef bint _crown_with(Inc* inc, int a, int b, int c) nogil:
    cdef uint64_t t = _mask(a, b, c)
    cdef uint64_t hit[3]
    cdef uint64_t base, others, fu, fw
    cdef int vs[3]
    cdef int k, i, j, l, v, u, w
    if _rainbow(inc.m[a], inc.cnt[a], inc.m[b], inc.cnt[b], inc.m[c], inc.cnt[c], hit):
        return True
    vs[0] = a
    vs[1] = b
    vs[2] = c
    for k in range(3):
        v = vs[k]
        for i in range(inc.cnt[v]):
            base = inc.m[v][i]
            others = base & ~(<uint64_t>1 << v)
            u = _low(others)
            w = _high(others)
            for j in range(inc.cnt[u]):
                fu = inc.m[u][j]
                if fu == base or fu & t:
                    continue
                for l in range(inc.cnt[w]):
                    fw = inc.m[w][l]
                    if fw != base and not fw & t and not fw & fu:
                        return True
    return False


def crown_with_edge(int n, edges, t):
    """Does ``edges + [t]`` contain a crown in which ``t`` takes part?"""
    cdef Inc inc
    _load(&inc, n, edges)
    a, b, c = t
    return bool(_crown_with(&inc, a, b, c))


cdef tuple _bits(uint64_t m):
    out = []
    cdef int i
    for i in range(64):
        if (m >> i) & 1:
            out.append(i)
    return tuple(out)


cdef void _sort_masks(uint64_t* xs, int k) nogil:
    cdef int i, j
    cdef uint64_t x
    for i in range(1, k):
        x = xs[i]
        j = i - 1
        while j >= 0 and xs[j] > x:
            xs[j + 1] = xs[j]
            j -= 1
        xs[j + 1] = x


cdef int _others(Inc* inc, int v, uint64_t base, uint64_t* out) nogil:
    cdef int i, k = 0
    for i in range(inc.cnt[v]):
        if inc.m[v][i] != base:
            out[k] = inc.m[v][i]
            k += 1
    _sort_masks(out, k)
    return k


def find_crown(int n, edges):
    """First crown as (base, (j1, j2, j3)) with bases in lexicographic order,
    or None. Jewels are listed by the base vertex they meet."""
    cdef Inc inc
    cdef uint64_t fa[MAXDEG]
    cdef uint64_t fb[MAXDEG]
    cdef uint64_t fc[MAXDEG]
    cdef uint64_t hit[3]
    cdef uint64_t base
    cdef int a, b, c, na, nb, nc
    _load(&inc, n, edges)
    for t in edges:
        a, b, c = t
        base = _mask(a, b, c)
        na = _others(&inc, a, base, fa)
        nb = _others(&inc, b, base, fb)
        nc = _others(&inc, c, base, fc)
        if _rainbow(fa, na, fb, nb, fc, nc, hit):
            return (a, b, c), (_bits(hit[0]), _bits(hit[1]), _bits(hit[2]))
    return None


cdef inline void _dv(int* deg, int a, int b, int c, int* out) nogil:
    cdef int x = deg[a], y = deg[b], z = deg[c], s
    if x < y:
        s = x; x = y; y = s
    if y < z:
        s = y; y = z; z = s
    if x < y:
        s = x; x = y; y = s
    out[0] = x
    out[1] = y
    out[2] = z


cdef inline bint _dominated(int* d, int* r, int nr) nogil:
    cdef int i
    for i in range(nr):
        if d[0] >= r[3 * i] and d[1] >= r[3 * i + 1] and d[2] >= r[3 * i + 2]:
            return True
    return False


def admissible(int n, edges, candidates, restrictions=()):
    """Filter ``candidates`` to triples t for which ``edges + [t]`` stays
    linear, crown-free and free of restricted degree vectors.

    ``edges`` itself is assumed to satisfy all three conditions.
    """
    cdef Inc inc
    cdef uint64_t covered[MAXN]
    cdef int deg[MAXN]
    cdef int d[3]
    cdef int vs[3]
    cdef int nr = len(restrictions)
    cdef int* r = <int*>malloc(sizeof(int) * 3 * (nr + 1))
    cdef int a, b, c, v, i, k, x, y, z
    cdef uint64_t m
    cdef bint bad
    if r == NULL:
        raise MemoryError()
    try:
        _load(&inc, n, edges)
        for i in range(nr):
            r[3 * i], r[3 * i + 1], r[3 * i + 2] = restrictions[i]
        for v in range(n):
            covered[v] = 0
            deg[v] = inc.cnt[v]
        for t in edges:
            a, b, c = t
            covered[a] |= (<uint64_t>1 << b) | (<uint64_t>1 << c)
            covered[b] |= (<uint64_t>1 << a) | (<uint64_t>1 << c)
            covered[c] |= (<uint64_t>1 << a) | (<uint64_t>1 << b)
        out = []
        for t in candidates:
            a, b, c = t
            if (covered[a] >> b) & 1 or (covered[a] >> c) & 1 or (covered[b] >> c) & 1:
                continue
            if nr:
                deg[a] += 1
                deg[b] += 1
                deg[c] += 1
                _dv(deg, a, b, c, d)
                bad = _dominated(d, r, nr)
                vs[0] = a
                vs[1] = b
                vs[2] = c
                k = 0
                while not bad and k < 3:
                    v = vs[k]
                    for i in range(inc.cnt[v]):
                        m = inc.m[v][i]
                        x = _low(m)
                        z = _high(m)
                        y = _low(m & ~((<uint64_t>1 << x) | (<uint64_t>1 << z)))
                        _dv(deg, x, y, z, d)
                        if _dominated(d, r, nr):
                            bad = True
                            break
                    k += 1
                deg[a] -= 1
                deg[b] -= 1
                deg[c] -= 1
                if bad:
                    continue
            if _crown_with(&inc, a, b, c):
                continue
            out.append(t)
        return out
    finally:
        free(r)


cdef void _heap_push(int* h, int* size, int x) nogil:
    cdef int i = size[0], p
    size[0] += 1
    while i > 0:
        p = (i - 1) >> 1
        if h[p] <= x:
            break
        h[i] = h[p]
        i = p
    h[i] = x


cdef int _heap_pop(int* h, int* size) nogil:
    cdef int top = h[0], x, i = 0, ch
    size[0] -= 1
    x = h[size[0]]
    while True:
        ch = 2 * i + 1
        if ch >= size[0]:
            break
        if ch + 1 < size[0] and h[ch + 1] < h[ch]:
            ch += 1
        if h[ch] >= x:
            break
        h[i] = h[ch]
        i = ch
    if size[0] > 0:
        h[i] = x
    return top


cdef int _refine(int n, int* lab, int* start_of, int* cell_end, int* off, int* tgt,
                 int* heap, int hsize, char* pending, int* count, int* touched,
                 int* cells, char* cell_mark) nogil:
    cdef int s, i, j, w, u, nt, nc, ci, cs, ce, first, x, cx, k, fs, fe
    cdef int largest, size
    cdef bint split, was_pending
    while hsize > 0:
        s = _heap_pop(heap, &hsize)
        pending[s] = 0
        nt = 0
        for i in range(s, cell_end[s]):
            w = lab[i]
            for j in range(off[w], off[w + 1]):
                u = tgt[j]
                if count[u] == 0:
                    touched[nt] = u
                    nt += 1
                count[u] += 1
        nc = 0
        for i in range(nt):
            cs = start_of[touched[i]]
            if not cell_mark[cs]:
                cell_mark[cs] = 1
                cells[nc] = cs
                nc += 1
        for i in range(1, nc):
            x = cells[i]
            j = i - 1
            while j >= 0 and cells[j] > x:
                cells[j + 1] = cells[j]
                j -= 1
            cells[j + 1] = x
        for ci in range(nc):
            cs = cells[ci]
            cell_mark[cs] = 0
            ce = cell_end[cs]
            if ce - cs == 1:
                continue
            first = count[lab[cs]]
            split = False
            for i in range(cs + 1, ce):
                if count[lab[i]] != first:
                    split = True
                    break
            if not split:
                continue
            # stable insertion sort by count
            for i in range(cs + 1, ce):
                x = lab[i]
                cx = count[x]
                j = i - 1
                while j >= cs and count[lab[j]] > cx:
                    lab[j + 1] = lab[j]
                    j -= 1
                lab[j + 1] = x
            was_pending = pending[cs]
            largest = cs
            size = -1
            fs = cs
            while fs < ce:
                fe = fs + 1
                while fe < ce and count[lab[fe]] == count[lab[fs]]:
                    fe += 1
                cell_end[fs] = fe
                for j in range(fs, fe):
                    start_of[lab[j]] = fs
                if fe - fs > size:
                    largest = fs
                    size = fe - fs
                fs = fe
            fs = cs
            while fs < ce:
                if (was_pending or fs != largest) and not pending[fs]:
                    pending[fs] = 1
                    _heap_push(heap, &hsize, fs)
                fs = cell_end[fs]
        for i in range(nt):
            count[touched[i]] = 0
    k = 0
    s = 0
    while s < n:
        k += 1
        s = cell_end[s]
    return k


def refine(lab, start_of, cell_end, off, tgt, queue):
    """Refine an ordered partition in place to the coarsest equitable one.
    See ``_kernels_py.refine`` for the contract."""
    cdef int n = len(lab)
    cdef int ne = len(tgt)
    cdef int i, hsize = 0, s, k
    if n == 0:
        return 0
    cdef int* buf = <int*>malloc(sizeof(int) * (8 * n + 1 + ne))
    cdef char* flags = <char*>malloc(2 * n)
    if buf == NULL or flags == NULL:
        free(buf)
        free(flags)
        raise MemoryError()
    cdef int* c_lab = buf
    cdef int* c_start = buf + n
    cdef int* c_end = buf + 2 * n
    cdef int* heap = buf + 3 * n
    cdef int* count = buf + 4 * n
    cdef int* touched = buf + 5 * n
    cdef int* cells = buf + 6 * n
    cdef int* c_off = buf + 7 * n
    cdef int* c_tgt = buf + 8 * n + 1
    cdef char* pending = flags
    cdef char* cell_mark = flags + n
    try:
        for i in range(n):
            c_lab[i] = lab[i]
            c_start[i] = start_of[i]
            c_end[i] = cell_end[i]
            count[i] = 0
            pending[i] = 0
            cell_mark[i] = 0
        for i in range(n + 1):
            c_off[i] = off[i]
        for i in range(ne):
            c_tgt[i] = tgt[i]
        for s in queue:
            if not pending[s]:
                pending[s] = 1
                _heap_push(heap, &hsize, s)
        with nogil:
            k = _refine(n, c_lab, c_start, c_end, c_off, c_tgt, heap, hsize, pending,
                        count, touched, cells, cell_mark)
        for i in range(n):
            lab[i] = c_lab[i]
            start_of[i] = c_start[i]
            cell_end[i] = c_end[i]
        return k
    finally:
        free(buf)
        free(flags)
