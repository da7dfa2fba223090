import pytest

import oracles
from crownlib.catalog import NAMES, builtin, color_iso
from crownlib.constructions import (
    ConstructionSpec,
    fano,
    is_steiner,
    lower_bound_construction,
    minimal_host,
    random_linear,
    random_min_degree,
    sts9,
)
from crownlib.core import is_linear
from crownlib.errors import InfeasibleRequest, TooFewVertices
from crownlib.links import find_crown, link_graph


def test_lower_bound_small():
    L = lower_bound_construction(7)
    assert len(L.edges) == 6
    assert [L.degree(v) for v in range(7)] == [2, 2, 2, 3, 3, 3, 3]


@pytest.mark.parametrize("n", range(7, 44, 4))
def test_lower_bound_family(n):
    L = lower_bound_construction(n)
    assert len(L.edges) == 6 * ((n - 3) // 4)
    assert oracles.linear(L.edges)
    assert all(L.degree(v) == 3 for v in range(3, n))
    assert not oracles.has_crown(L.edges) if n <= 15 else find_crown(L) is None


def test_lower_bound_eleven():
    L = lower_bound_construction(11)
    assert len(L.edges) == 12
    assert all(L.degree_vector(e) == (4, 3, 3) for e in L.edges)


def test_lower_bound_leftover_isolated():
    L = lower_bound_construction(10)
    assert len(L.edges) == 6
    assert [L.degree(v) for v in range(7, 10)] == [0, 0, 0]
    with pytest.raises(TooFewVertices):
        lower_bound_construction(6)


def test_steiner_tables():
    for H, deg, m in ((fano(), 3, 7), (sts9(), 4, 12)):
        assert H.min_degree() == deg and len(H.edges) == m
        assert all(c == 1 for c in oracles.pair_counts(H.n, H.edges).values())
        assert is_linear(H.n, H.edges) and is_steiner(H)


def test_minimal_host_g6():
    H, e = minimal_host(builtin("G6"))
    assert (H.n, len(H.edges)) == (11, 9)
    assert H.degree_vector(e) == (4, 4, 3)


def test_minimal_host_g1():
    H, e = minimal_host(builtin("G1"))
    assert H.degree_vector(e) == (4, 4, 4)
    assert find_crown(H) is None and not oracles.has_crown(H.edges)


@pytest.mark.parametrize("name", NAMES)
def test_minimal_host_round_trip(name):
    G = builtin(name).graph
    H, e = minimal_host(G)
    assert color_iso(link_graph(H, e), G) is not None


def test_random_linear():
    assert random_linear(12, 0, 3).edges == ()
    H = random_linear(12, 15, 3)
    assert len(H.edges) == 15 and oracles.linear(H.edges)
    assert random_linear(12, 15, 3) == H
    with pytest.raises(InfeasibleRequest):
        random_linear(7, 8, 0)


@pytest.mark.parametrize("seed", range(10))
def test_random_min_degree(seed):
    H = random_min_degree(20, 4, seed)
    assert H is not None
    assert H.min_degree() >= 4 and oracles.linear(H.edges)
    assert random_min_degree(20, 4, seed) == H


def test_random_min_degree_impossible():
    # a linear 3-graph on 7 vertices has degree at most 3
    assert random_min_degree(7, 4, 0) is None


def test_spec_build():
    assert ConstructionSpec("fano").build() == fano()
    assert ConstructionSpec("lower-bound", 11).build() == lower_bound_construction(11)
    H = ConstructionSpec("random", 20, 7, {"min_degree": 4}).build()
    assert H == random_min_degree(20, 4, 7)
    with pytest.raises(ValueError):
        ConstructionSpec("petersen").build()
