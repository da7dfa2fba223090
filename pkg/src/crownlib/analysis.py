"""Counting-argument auditor, critical configurations, and the G6 exclusion scan."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .catalog import builtin, color_iso
from .constructions import minimal_host
from .core import DegreeVector, LinearThreeGraph, Triple, dominates, pairs_of, triple
from .errors import EmptyVertexSet, PreconditionViolated, Reducible
from .links import Color, Crown, crown_from_quintuple, find_crown, is_crown, link_graph

DV_443 = DegreeVector(4, 4, 3)
DV_542 = DegreeVector(5, 4, 2)
DV_642 = DegreeVector(6, 4, 2)
THEOREM2_RESTRICTIONS = (DV_443, DV_542)


def special_vertices(H: LinearThreeGraph) -> set[int]:
    """Degree-2 vertices whose two edges have all four other ends of degree 4."""
    out = set()
    for v in range(H.n):
        if H.degree(v) != 2:
            continue
        others = [u for t in H.incident(v) for u in t if u != v]
        if all(H.degree(u) == 4 for u in others):
            out.add(v)
    return out


def reduce_low_degree(H: LinearThreeGraph) -> tuple[LinearThreeGraph, list[int]]:
    """Repeatedly delete a vertex of degree <= 1 together with its edge.

    Returns the reduced graph (vertices relabeled densely, order kept) and the
    original ids of the deleted vertices. Each deletion removes one vertex and
    at most one edge, so |E| <= 3n/2 for the result implies it for H.
    """
    edges = set(H.edges)
    alive = set(range(H.n))
    removed = []
    while True:
        deg = {v: 0 for v in alive}
        for t in edges:
            for v in t:
                deg[v] += 1
        low = [v for v in sorted(alive) if deg[v] <= 1]
        if not low:
            break
        v = low[0]
        edges = {t for t in edges if v not in t}
        alive.discard(v)
        removed.append(v)
    keep = sorted(alive)
    index = {v: i for i, v in enumerate(keep)}
    return LinearThreeGraph(len(keep), [[index[v] for v in t] for t in edges]), removed


def satisfies_theorem2_hypotheses(H: LinearThreeGraph) -> bool:
    return find_crown(H) is None and not forbidden_edges(H)


def forbidden_edges(H: LinearThreeGraph, restrictions=THEOREM2_RESTRICTIONS) -> list[Triple]:
    return [e for e in H.edges if any(dominates(H.degree_vector(e), r) for r in restrictions)]


def _half(x) -> float | int:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else float(x)


@dataclass
class AuditReport:
    n: int
    m: int
    Y: list[int]
    Z: list[int]
    Z1: list[int]
    Z2: list[int]
    Z3: list[int]
    Y1: list[int]
    E1: list[Triple]
    E2: list[Triple]
    chain: dict[str, Fraction]
    checks: dict[str, bool]
    crown_free: bool
    forbidden: list[Triple]
    hypotheses_ok: bool
    conclusion_ok: bool
    violations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "y": self.Y,
            "y1": self.Y1,
            "z1": self.Z1,
            "z2": self.Z2,
            "z3": self.Z3,
            "e1": [list(t) for t in self.E1],
            "e2": [list(t) for t in self.E2],
            "chain": {k: _half(v) for k, v in self.chain.items()},
            "checks": self.checks,
            "crown_free": self.crown_free,
            "forbidden_edges": [list(t) for t in self.forbidden],
            "hypotheses_ok": self.hypotheses_ok,
            "conclusion_ok": self.conclusion_ok,
            "violations": self.violations,
        }


def audit_theorem2(H: LinearThreeGraph) -> AuditReport:
    """Recompute every quantity of the 3n/2 counting argument for H.

    Partitions and chain values are always reported. Checks that only hold
    under the hypotheses (crown-free, no edge dominating <4,4,3> or <5,4,2>)
    become violations only when those hypotheses are met.
    """
    if H.n == 0:
        raise EmptyVertexSet("cannot audit a graph without vertices")
    for v in range(H.n):
        if H.degree(v) <= 1:
            raise Reducible(v, H.degree(v))
    n, deg = H.n, H.degrees
    Z = [v for v in range(n) if deg[v] <= 3]
    Y = [v for v in range(n) if deg[v] >= 4]
    special = special_vertices(H)
    Z1 = [v for v in Z if deg[v] == 3]
    Z2 = [v for v in Z if deg[v] == 2 and v not in special]
    Z3 = sorted(special)
    Y1 = [v for v in Y if deg[v] == 4]
    zset = set(Z)
    E1 = [t for t in H.edges if len(zset.intersection(t)) >= 2]
    E2 = [t for t in H.edges if len(zset.intersection(t)) < 2]

    d_e1 = [0] * n
    d_e2 = [0] * n
    for t in E1:
        for v in t:
            d_e1[v] += 1
    for t in E2:
        for v in t:
            d_e2[v] += 1

    # Each special vertex contributes the Y1-pairs of its two edges.
    y1set = set(Y1)
    special_pairs = []
    for z in Z3:
        for t in H.incident(z):
            if t in E2:
                pair = tuple(u for u in t if u != z)
                if all(u in y1set for u in pair):
                    special_pairs.append(pair)
    g_deg = {y: 0 for y in Y1}
    for p in special_pairs:
        for y in p:
            g_deg[y] += 1

    m = len(H.edges)
    sum_z1_e1 = sum(d_e1[v] for v in Z1)
    sum_z2_e2 = sum(d_e2[v] for v in Z2)
    sum_z3_e2 = sum(d_e2[v] for v in Z3)
    e1_bound = Fraction(sum_z1_e1 + sum(2 - d_e2[v] for v in Z2), 2)
    e2_sum = Fraction(sum_z2_e2 + sum_z3_e2)
    regrouped = Fraction(sum_z1_e1 + 2 * len(Z2) + sum_z2_e2, 2) + sum_z3_e2
    rhs_first = Fraction(3 * len(Z1) + 3 * len(Z2), 2) + 2 * len(Z3)
    rhs_second = Fraction(3 * len(Z1) + 3 * len(Z2), 2) + len(Z3) + len(Y)
    expanded = len(Z1) + len(Z2) + len(Z3) + len(Y) + Fraction(len(Z1) + len(Z2), 2)
    final = Fraction(3 * n, 2)
    chain = {
        "edges": Fraction(m),
        "e1": Fraction(len(E1)),
        "e2": Fraction(len(E2)),
        "e1_bound": e1_bound,
        "e2_sum": e2_sum,
        "regrouped": regrouped,
        "rhs_first_ineq": rhs_first,
        "rhs_second_ineq": rhs_second,
        "expanded": expanded,
        "final_bound": final,
    }
    checks = {
        "double_count": sum(d_e1[v] for v in Z) >= 2 * len(E1),
        "e2_meets_z_once": all(len(zset.intersection(t)) == 1 for t in E2),
        "prop_z1_no_e2": all(d_e2[v] == 0 for v in Z1),
        "prop_z2_at_most_one_e2": all(d_e2[v] <= 1 for v in Z2),
        "special_pairs_distinct": len(set(special_pairs)) == len(special_pairs),
        "special_pair_count": len(special_pairs) == 2 * len(Z3),
        "special_degree_le_4": all(g_deg[y] <= deg[y] for y in Y1),
        "special_pairs_le_2y1": len(special_pairs) <= 2 * len(Y1),
        "prop_z3_le_y": len(Z3) <= len(Y),
        "e1_le_bound": len(E1) <= e1_bound,
        "e2_equals_sum": len(E2) == e2_sum,
        "split": m == len(E1) + len(E2),
        "regroup_equal": e1_bound + e2_sum == regrouped,
        "edges_le_regrouped": m <= regrouped,
        "first_ineq": regrouped <= rhs_first,
        "second_ineq": rhs_first <= rhs_second,
        "expansion_equal": rhs_second == expanded,
        "final_ineq": expanded <= final,
    }
    crown_free = find_crown(H) is None
    forbidden = forbidden_edges(H)
    hypotheses_ok = crown_free and not forbidden
    violations = [k for k, ok in checks.items() if not ok] if hypotheses_ok else []
    if not checks["double_count"] or not checks["split"]:
        violations = sorted(set(violations) | {k for k in ("double_count", "split") if not checks[k]})
    return AuditReport(
        n=n, m=m, Y=Y, Z=Z, Z1=Z1, Z2=Z2, Z3=Z3, Y1=Y1, E1=E1, E2=E2,
        chain=chain, checks=checks, crown_free=crown_free, forbidden=forbidden,
        hypotheses_ok=hypotheses_ok, conclusion_ok=m <= final, violations=violations,
    )


@dataclass(frozen=True)
class CriticalConfig:
    center: Triple
    incident: tuple[Triple, ...]
    dv: DegreeVector


def find_critical_configurations(H: LinearThreeGraph) -> list[CriticalConfig]:
    """Edges whose degree vector is exactly <4,4,3> or <5,4,2>, with their
    incident edges. The incident count is whatever the host gives (8 when all
    three endpoints realize their degrees inside the configuration)."""
    out = []
    for e in H.edges:
        dv = H.degree_vector(e)
        if dv in THEOREM2_RESTRICTIONS:
            out.append(CriticalConfig(e, tuple(H.edges_meeting(e)), dv))
    return out


def check_642_free(H: LinearThreeGraph) -> Triple | None:
    """An edge whose degree vector dominates <6,4,2>, or None."""
    for e in H.edges:
        if dominates(H.degree_vector(e), DV_642):
            return e
    return None


def host_with_degree_vector(dv, overlap: bool = True) -> tuple[LinearThreeGraph, Triple]:
    """A small linear host in which e = (0, 1, 2) has degree vector ``dv``.

    With ``overlap`` the link edges reuse vertices greedily (keeping the
    coloring proper and the host linear), which gives the tightest hosts.
    """
    dv = DegreeVector.of(*dv)
    e = (0, 1, 2)
    edges = [e]
    covered: set[tuple[int, int]] = set(pairs_of(e))
    n = 3
    for z, d in zip(e, dv):
        for _ in range(d - 1):
            placed = False
            if overlap:
                for x, y in itertools.combinations(range(3, n), 2):
                    t = triple(x, y, z)
                    if not covered.intersection(pairs_of(t)):
                        edges.append(t)
                        covered.update(pairs_of(t))
                        placed = True
                        break
            if not placed:
                t = (z, n, n + 1)
                n += 2
                edges.append(t)
                covered.update(pairs_of(t))
    return LinearThreeGraph(n, edges), e


# ---------------------------------------------------------------------------
# G6 exclusion


class Verdict:
    ALLOWED = "Allowed"
    CROWN_FORCED = "CrownForced"
    LINEARITY = "LinearityViolation"


@dataclass(frozen=True)
class Candidate:
    edge: Triple
    verdict: str
    in_pattern: bool
    witness: Crown | None = None


@dataclass
class ExclusionReport:
    X: list[int]
    fresh: list[int]
    allowed_patterns: list[tuple[str, tuple[int, ...]]]
    tested: list[Candidate]
    capacity: int
    notes: list[str]

    @property
    def allowed_outside_patterns(self) -> list[Candidate]:
        return [c for c in self.tested if c.verdict == Verdict.ALLOWED and not c.in_pattern]

    @property
    def ok(self) -> bool:
        return not self.allowed_outside_patterns and self.capacity <= 16 and 2 * self.capacity < 33

    def counts(self) -> dict[str, int]:
        out = {Verdict.ALLOWED: 0, Verdict.CROWN_FORCED: 0, Verdict.LINEARITY: 0}
        for c in self.tested:
            out[c.verdict] += 1
        return out

    def to_json(self) -> dict:
        return {
            "X": self.X,
            "fresh": self.fresh,
            "allowed_patterns": [{"kind": k, "vertices": list(v)} for k, v in self.allowed_patterns],
            "pattern_count": len(self.allowed_patterns),
            "counts": self.counts(),
            "allowed_outside_patterns": [list(c.edge) for c in self.allowed_outside_patterns],
            "capacity": self.capacity,
            "capacity_limit": 16.5,
            "ok": self.ok,
            "notes": self.notes,
            "tested": [
                {
                    "edge": list(c.edge),
                    "verdict": c.verdict,
                    "in_pattern": c.in_pattern,
                    "witness": [list(t) for t in c.witness.edges()] if c.witness else None,
                }
                for c in self.tested
            ],
        }


def four_cycles(G) -> list[tuple[int, int, int, int]]:
    """4-cycles of the underlying graph as vertex sequences."""
    out = []
    for quad in itertools.combinations(sorted(G.verts), 4):
        a, b, c, d = quad
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if all(G.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
                out.append(cyc)
                break
    return out


def saturated_g6_host() -> tuple[LinearThreeGraph, Triple, tuple[int, int]]:
    """Minimal host of G6 plus two isolated vertices for fresh completions.

    The minimal host already holds e and the extensions of all 8 link edges,
    which are the only host edges the exclusion argument draws on.
    """
    H, e = minimal_host(builtin("G6"))
    return LinearThreeGraph(H.n + 2, H.edges), e, (H.n, H.n + 1)


def _crown_in(H: LinearThreeGraph) -> Crown | None:
    hit = kernels.find_crown(H.n, list(H.edges))
    if hit is None:
        return None
    base, jewels = hit
    return Crown(tuple(base), tuple(triple(*j) for j in jewels))  # type: ignore[arg-type]


def g6_exclusion_scan(H: LinearThreeGraph, e, threads: int = 1, fresh=None) -> ExclusionReport:
    """Classify every possible extra edge touching X = V(G6) + e.

    ``fresh`` names two isolated vertices of H used to complete edges that meet
    X in one or two vertices; by default two new vertices are appended.
    """
    e = H._require(e)
    if H.degree_vector(e) != DV_443:
        raise PreconditionViolated(f"D(e) = {H.degree_vector(e)} is not <4,4,3>")
    G = link_graph(H, e)
    if color_iso(G, builtin("G6").graph) is None:
        raise PreconditionViolated("link graph of e is not color-isomorphic to G6")
    if kernels.find_crown(H.n, list(H.edges)) is not None:
        raise PreconditionViolated("host already contains a crown")
    X = sorted(G.verts | set(e))
    if fresh is None:
        if H.n + 2 > 64:
            raise PreconditionViolated("no room for two fresh vertices")
        fresh = [H.n, H.n + 1]
        host = LinearThreeGraph(H.n + 2, H.edges)
    else:
        fresh = sorted(fresh)
        if len(fresh) != 2 or set(fresh) & set(X) or any(H.degree(v) for v in fresh):
            raise PreconditionViolated("fresh vertices must be two isolated vertices outside X")
        host = H

    link_pairs = [p for p, _ in G.colored_edges]
    diagonals = sorted({
        tuple(sorted(p))
        for cyc in four_cycles(G)
        for p in ((cyc[0], cyc[2]), (cyc[1], cyc[3]))
    })
    patterns: list[tuple[str, tuple[int, ...]]] = [("extension", p) for p in link_pairs]
    patterns.append(("host-edge", e))
    patterns += [("diagonal", p) for p in diagonals]

    def in_pattern(f):
        s = set(f)
        if f == e:
            return True
        return any(set(p) <= s for p in link_pairs) or any(set(p) <= s for p in diagonals)

    candidates = [
        f for f in itertools.combinations(X + fresh, 3)
        if set(f) & set(X) and f not in host
    ]

    def classify(f):
        if not host.can_add(f):
            return Candidate(f, Verdict.LINEARITY, in_pattern(f))
        crown = _crown_in(host.add_edge(f))
        if crown is not None:
            return Candidate(f, Verdict.CROWN_FORCED, in_pattern(f), crown)
        return Candidate(f, Verdict.ALLOWED, in_pattern(f))

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(threads) as pool:
            tested = list(pool.map(classify, candidates))
    else:
        tested = [classify(f) for f in candidates]
    tested.sort(key=lambda c: c.edge)

    incident_now = sum(1 for t in host.edges if set(t) & set(X))
    capacity = incident_now + len(diagonals)
    notes = [
        f"{len(patterns)} allowed slots: {len(link_pairs)} extensions, the edge e, "
        f"{len(diagonals)} diagonals",
    ]
    return ExclusionReport(X, fresh, patterns, tested, capacity, notes)


def _components(G):
    seen, comps = set(), []
    for v in sorted(G.verts):
        if v in seen:
            continue
        stack, comp = [v], set()
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(G.neighbors(u))
        seen |= comp
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class CaseFixture:
    case: int
    f: Triple
    crown: Crown
    host: LinearThreeGraph


def g6_case_fixtures() -> list[CaseFixture]:
    """One extra edge per branch of the G6 exclusion argument, each paired with
    the crown that branch exhibits in the saturated host plus that edge."""
    host, e, (p, q) = saturated_g6_host()
    a, b, c = e
    G = link_graph(host, e)
    comps = _components(G)
    first = next(s for s in comps if any(G.color(x, y) == Color.C for x in s for y in G.neighbors(x)))
    second = next(s for s in comps if s is not first)

    def edges_of(comp, color):
        return [pr for pr, col in G.colored_edges if col == color and pr[0] in comp]

    def ext(pair):
        return host.covering_edge(*pair)

    out = []
    # Case 1: f through a and an end of the first component's B-edge.
    w = edges_of(first, Color.B)[0][0]
    f = triple(a, w, q)
    g = ext(next(pr for pr in edges_of(first, Color.C) if w not in pr))
    h = ext(edges_of(second, Color.B)[0])
    H1 = host.add_edge(f)
    out.append(CaseFixture(1, f, Crown(e, (f, g, h)), H1))
    # Case 2: f through c and a vertex of the second component.
    w = min(second)
    f = triple(c, w, q)
    g = ext(next(pr for pr in edges_of(second, Color.B) if w not in pr))
    h = ext(edges_of(first, Color.A)[0])
    H2 = host.add_edge(f)
    out.append(CaseFixture(2, f, Crown(e, (f, g, h)), H2))
    # Cases 3 and 4: f disjoint from e, meeting the link graph in one vertex.
    for case, here, there in ((3, first, second), (4, second, first)):
        x1 = min(here)
        f = triple(x1, p, q)
        Hf = host.add_edge(f)
        crown = None
        for x2 in G.neighbors(x1):
            col = G.color(x1, x2)
            if col == Color.C:
                continue
            for x3 in G.neighbors(x2):
                if x3 == x1:
                    continue
                for x4, x5 in edges_of(there, col):
                    crown = crown_from_quintuple(Hf, e, (x1, x2, x3, x4, x5), f)
                    break
                if crown:
                    break
            if crown:
                break
        out.append(CaseFixture(case, f, crown, Hf))
    for fx in out:
        if fx.crown is None or not is_crown(fx.host, fx.crown.base, fx.crown.jewels):
            raise AssertionError(f"case {fx.case} fixture does not produce a crown")
    return out


def g6_verify(threads: int = 1) -> tuple[ExclusionReport, list[CaseFixture]]:
    host, e, fresh = saturated_g6_host()
    return g6_exclusion_scan(host, e, threads, fresh), g6_case_fixtures()
