"""The verification campaign behind ``crownlib verify all``.

Each check returns a :class:`CheckResult`; the campaign passes iff all do.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .analysis import (
    DV_642,
    audit_theorem2,
    check_642_free,
    g6_verify,
    host_with_degree_vector,
    reduce_low_degree,
)
from .catalog import NAMES, enumerate_444, verify_catalog
from .constructions import fano, lower_bound_construction, random_linear, random_min_degree, sts9
from .core import LinearThreeGraph, is_linear
from .errors import InfeasibleRequest
from .links import crown_with_base, find_crown, is_crown
from .search import SearchConfig, ex_crown, ex_restricted, lower_bound_value, verify_bounds

CONSTRUCTION_SIZES = tuple(range(7, 44, 4))
MIN_DEGREE_SIZES = (15, 20, 25)
EXPECTED_EX = {7: 7, 8: 8}


@dataclass
class CheckResult:
    name: str
    ok: bool
    seconds: float
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "seconds": round(self.seconds, 3),
                "detail": self.detail}


def _timed(name, fn) -> CheckResult:
    t = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, ok, time.perf_counter() - t, detail)


def brute_force_crowns(H: LinearThreeGraph, base) -> bool:
    """Is there a crown with this base, by trying every triple of other edges?"""
    others = [f for f in H.edges if f != base]
    return any(is_crown(H, base, js) for js in itertools.combinations(others, 3))


def check_catalog():
    rows = verify_catalog(enumerate_444())
    names = sorted(r["name"] for r in rows if r["name"])
    ok = len(rows) == 5 and all(r["matched"] for r in rows) and names == sorted(NAMES[:5])
    return ok, {"classes": len(rows), "rows": rows}


def check_constructions():
    bad = []
    for n in CONSTRUCTION_SIZES:
        H = lower_bound_construction(n)
        low = [v for v in range(3, H.n) if 0 < H.degree(v) != 3]
        if (not is_linear(H.n, H.edges) or find_crown(H) is not None
                or len(H.edges) != lower_bound_value(n) or low):
            bad.append(n)
    return not bad, {"sizes": list(CONSTRUCTION_SIZES), "failures": bad}


def check_min_degree_four(seeds: int = 100, base_seed: int = 0):
    tried = generated = 0
    failures = []
    for n in MIN_DEGREE_SIZES:
        for s in range(base_seed, base_seed + seeds):
            tried += 1
            H = random_min_degree(n, 4, s)
            if H is None:
                continue
            generated += 1
            if find_crown(H) is None:
                failures.append([n, s])
    sts_ok = find_crown(sts9()) is not None
    fano_ok = find_crown(fano()) is None
    ok = not failures and sts_ok and fano_ok
    return ok, {"tried": tried, "generated": generated, "failures": failures,
                "sts9_has_crown": sts_ok, "fano_crown_free": fano_ok}


def check_rainbow(hosts: int = 200, seed: int = 0):
    rng = random.Random(seed)
    disagreements = []
    for i in range(hosts):
        n = rng.randint(7, 14)
        m = rng.randint(4, 12)
        try:
            H = random_linear(n, m, rng.randrange(1 << 30))
        except InfeasibleRequest:
            H = random_linear(n, 4, i)
        for e in H.edges:
            if (crown_with_base(H, e) is not None) != brute_force_crowns(H, e):
                disagreements.append([i, list(e)])
    return not disagreements, {"hosts": hosts, "disagreements": disagreements}


def restricted_witnesses(max_n: int = 12) -> list[LinearThreeGraph]:
    return [ex_restricted(SearchConfig(n)).witness for n in range(7, max_n + 1)]


def audit_family(max_n: int = 12) -> list[LinearThreeGraph]:
    family = [lower_bound_construction(n) for n in CONSTRUCTION_SIZES]
    family += restricted_witnesses(max_n)
    return family


def check_audit(family=None):
    family = audit_family() if family is None else family
    audited = 0
    violations = []
    for H in family:
        H0, _ = reduce_low_degree(H)
        if H0.n == 0:
            continue
        rep = audit_theorem2(H0)
        if not rep.hypotheses_ok:
            continue
        audited += 1
        if rep.violations or not rep.conclusion_ok or 2 * len(H.edges) > 3 * H.n:
            violations.append({"n": H.n, "m": len(H.edges), "violations": rep.violations})
    return not violations and audited > 0, {"audited": audited, "violations": violations}


def check_g6(threads: int = 1):
    report, fixtures = g6_verify(threads)
    cases = [{"case": fx.case, "crown": fx.crown is not None} for fx in fixtures]
    ok = report.ok and len(fixtures) == 4 and all(c["crown"] for c in cases)
    return ok, {"counts": report.counts(), "capacity": report.capacity,
                "patterns": len(report.allowed_patterns),
                "allowed_outside_patterns": len(report.allowed_outside_patterns),
                "cases": cases}


def check_search(max_n: int = 9, threads: int = 1):
    rows = []
    ok = True
    for n in range(3, max_n + 1):
        r = ex_crown(SearchConfig(n, threads=threads))
        good = r.exact and verify_bounds(r) and EXPECTED_EX.get(n, r.best) == r.best
        ok = ok and good
        rows.append({"n": n, "best": r.best, "exact": r.exact, "nodes": r.nodes_explored,
                     "gap_to_3n_over_2": r.gap_to_three_halves(), "ok": good})
    return ok, {"results": rows}


def check_642(family=None):
    family = audit_family() if family is None else family
    pool = list(family) + [fano()]
    hits = [H.n for H in pool if find_crown(H) is None and check_642_free(H) is not None]
    host, e = host_with_degree_vector(DV_642)
    host_crown = find_crown(host) is not None
    return not hits and host_crown, {"instances": len(pool), "hits": hits,
                                     "host_has_crown": host_crown}


def run_all(seed: int = 0, threads: int = 1) -> list[CheckResult]:
    family = audit_family()
    return [
        _timed("catalog", check_catalog),
        _timed("constructions", check_constructions),
        _timed("min_degree_four", lambda: check_min_degree_four(base_seed=seed)),
        _timed("rainbow", lambda: check_rainbow(seed=seed)),
        _timed("audit_3n_over_2", lambda: check_audit(family)),
        _timed("g6", lambda: check_g6(threads)),
        _timed("search", lambda: check_search(threads=threads)),
        _timed("no642", lambda: check_642(family)),
    ]
