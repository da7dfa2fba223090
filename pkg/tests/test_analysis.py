import pytest

import oracles
from crownlib.analysis import (
    DV_642,
    Verdict,
    audit_theorem2,
    check_642_free,
    find_critical_configurations,
    g6_case_fixtures,
    g6_exclusion_scan,
    g6_verify,
    host_with_degree_vector,
    reduce_low_degree,
    saturated_g6_host,
    special_vertices,
)
from crownlib.catalog import builtin
from crownlib.constructions import fano, lower_bound_construction, minimal_host
from crownlib.core import LinearThreeGraph
from crownlib.errors import EmptyVertexSet, PreconditionViolated, Reducible
from crownlib.links import find_crown, is_crown


def test_special_vertices():
    assert special_vertices(lower_bound_construction(7)) == set()
    assert special_vertices(fano()) == set()
    # v = 0 in (0,1,2), (0,3,4); 1..4 completed to degree 4 with pendant edges
    edges = [(0, 1, 2), (0, 3, 4)]
    nxt = 5
    for u in (1, 2, 3, 4):
        for _ in range(3):
            edges.append((u, nxt, nxt + 1))
            nxt += 2
    H = LinearThreeGraph(nxt, edges)
    assert special_vertices(H) == {0}


def test_audit_lower_bound_eleven():
    rep = audit_theorem2(lower_bound_construction(11))
    assert rep.hypotheses_ok and rep.conclusion_ok and not rep.violations
    assert rep.Y == [0, 1, 2]
    assert len(rep.Z1) == 8 and rep.Z2 == [] and rep.Z3 == []
    assert len(rep.E1) == 12 and rep.E2 == []
    assert rep.chain["final_bound"] == pytest.approx(16.5)
    assert all(rep.checks.values())


def test_audit_dominating_edge():
    H, e = host_with_degree_vector((5, 5, 3))
    H0, _ = reduce_low_degree(H)
    rep = audit_theorem2(H0)
    assert not rep.hypotheses_ok
    assert "final_bound" in rep.chain


def test_audit_reducible():
    H = LinearThreeGraph(4, [(0, 1, 2)])
    with pytest.raises(Reducible):
        audit_theorem2(H)
    with pytest.raises(EmptyVertexSet):
        audit_theorem2(LinearThreeGraph(0))


def test_reduce_low_degree():
    H0, removed = reduce_low_degree(LinearThreeGraph(9, [(0, 1, 2)]))
    assert H0.n == 0 and sorted(removed) == list(range(9))
    H0, removed = reduce_low_degree(fano())
    assert H0 == fano() and removed == []


def test_audit_json_keys():
    data = audit_theorem2(lower_bound_construction(11)).to_json()
    for key in ("y", "z1", "z2", "z3", "e1", "e2", "chain", "hypotheses_ok", "conclusion_ok"):
        assert key in data


def test_critical_configurations():
    H, e = minimal_host(builtin("G6"))
    found = find_critical_configurations(H)
    assert len(found) == 1
    assert found[0].center == e and found[0].dv == (4, 4, 3)
    assert len(found[0].incident) == 8
    assert find_critical_configurations(lower_bound_construction(11)) == []
    assert find_critical_configurations(fano()) == []


def test_642():
    H, e = host_with_degree_vector(DV_642)
    assert H.degree_vector(e) == (6, 4, 2)
    assert check_642_free(H) == e
    c = find_crown(H)
    assert c is not None and oracles.is_crown(c.base, c.jewels)
    assert check_642_free(LinearThreeGraph(5)) is None
    for n in (7, 11, 19):
        assert check_642_free(lower_bound_construction(n)) is None


def test_g6_scan():
    report, fixtures = g6_verify()
    assert report.ok
    assert len(report.allowed_patterns) == 13
    assert report.allowed_outside_patterns == []
    assert report.capacity <= 16 and 2 * report.capacity < 33
    for c in report.tested:
        assert c.verdict in (Verdict.ALLOWED, Verdict.CROWN_FORCED, Verdict.LINEARITY)
        if c.verdict == Verdict.CROWN_FORCED:
            assert is_crown(
                LinearThreeGraph(report.fresh[-1] + 1, list(saturated_g6_host()[0].edges) + [c.edge]),
                c.witness.base, c.witness.jewels)


def test_g6_scan_threads_agree():
    H, e, fresh = saturated_g6_host()
    one = g6_exclusion_scan(H, e, 1, fresh)
    four = g6_exclusion_scan(H, e, 4, fresh)
    assert one.to_json() == four.to_json()


def test_g6_diagonal_allowed():
    H, e, (p, q) = saturated_g6_host()
    report = g6_exclusion_scan(H, e, fresh=(p, q))
    diagonals = [v for kind, v in report.allowed_patterns if kind == "diagonal"]
    assert diagonals
    x, y = diagonals[0]
    verdict = {c.edge: c.verdict for c in report.tested}
    assert verdict[tuple(sorted((x, y, p)))] == Verdict.ALLOWED


def test_g6_case_fixtures():
    fixtures = g6_case_fixtures()
    assert [fx.case for fx in fixtures] == [1, 2, 3, 4]
    for fx in fixtures:
        assert fx.f in fx.crown.edges()
        assert is_crown(fx.host, fx.crown.base, fx.crown.jewels)
        assert oracles.is_crown(fx.crown.base, fx.crown.jewels)
    # case 1: the extra edge is a jewel of a crown with base e
    H, e, _ = saturated_g6_host()
    assert fixtures[0].crown.base == e


def test_g6_scan_preconditions():
    with pytest.raises(PreconditionViolated):
        g6_exclusion_scan(lower_bound_construction(11), (0, 3, 4))
