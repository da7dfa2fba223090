import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from crownlib.core import LinearThreeGraph, parse, serialize
from crownlib.links import crown_with_base, find_crown, has_rainbow_matching, link_graph


@st.composite
def linear_graphs(draw, max_n=12):
    n = draw(st.integers(3, max_n))
    triples = list(itertools.combinations(range(n), 3))
    order = draw(st.permutations(triples))
    k = draw(st.integers(0, 14))
    edges, covered = [], set()
    for t in order:
        if len(edges) == k:
            break
        ps = set(itertools.combinations(t, 2))
        if not ps & covered:
            edges.append(t)
            covered |= ps
    return LinearThreeGraph(n, edges)


@settings(max_examples=150, deadline=None)
@given(linear_graphs())
def test_serialize_round_trip(H):
    assert parse(serialize(H)) == H


@settings(max_examples=150, deadline=None)
@given(linear_graphs(), st.randoms(use_true_random=False))
def test_canonical_code_invariant(H, rnd):
    perm = list(range(H.n))
    rnd.shuffle(perm)
    assert H.relabel(perm).canonical_code() == H.canonical_code()


@settings(max_examples=150, deadline=None)
@given(linear_graphs())
def test_rainbow_iff_crown(H):
    for e in H.edges:
        G = link_graph(H, e)
        rb = has_rainbow_matching(G) is not None
        assert rb == (crown_with_base(H, e) is not None)
        assert rb == bool(oracles.crowns_with_base(H.edges, e))
    assert (find_crown(H) is not None) == oracles.has_crown(H.edges)


@settings(max_examples=100, deadline=None)
@given(linear_graphs())
def test_degree_sum(H):
    assert sum(H.degrees) == 3 * len(H.edges)
    for e in H.edges:
        assert len(link_graph(H, e).colored_edges) == sum(H.degrees[v] for v in e) - 3


@settings(max_examples=100, deadline=None)
@given(linear_graphs())
def test_remove_add_inverse(H):
    for e in H.edges:
        assert H.remove_edge(e).add_edge(e) == H
