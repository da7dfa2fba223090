import random

import pytest

import oracles
from crownlib.catalog import (
    NAMES,
    builtin,
    classify_444,
    color_iso,
    enumerate_444,
    two_disjoint_four_cycles,
    verify_catalog,
)
from crownlib.constructions import minimal_host, random_linear
from crownlib.errors import UnknownName
from crownlib.links import ColoredLinkGraph, has_rainbow_matching, link_graph, trim_to_degree_vector


def as_triples(G):
    return [(x, y, int(c)) for (x, y), c in G.colored_edges]


def scramble(G, seed):
    rng = random.Random(seed)
    verts = sorted(G.verts)
    image = rng.sample(range(20), len(verts))
    perm = tuple(rng.sample(range(3), 3))
    return G.relabel(dict(zip(verts, image)), perm), perm


def test_g3_layout():
    G = builtin("G3").graph
    assert len(G.verts) == 7
    path = [(i, i + 1) for i in range(6)]
    assert all(G.has_edge(*p) for p in path)
    assert {G.color(*p) for p in path[::2]} == {G.color(0, 1)}
    assert {G.color(*p) for p in path[1::2]} == {G.color(1, 2)}
    gamma = {(0, 2), (1, 3), (4, 6)}
    others = {p for p, _ in G.colored_edges} - set(path)
    assert others == gamma


def test_g6_shape():
    G = builtin("G6").graph
    assert len(G.colored_edges) == 8
    assert sorted(G.class_sizes()) == [2, 3, 3]
    assert two_disjoint_four_cycles(G)


def test_four_cycles_only_in_g6():
    for name in NAMES[:5]:
        assert not two_disjoint_four_cycles(builtin(name).graph)
    squares = ColoredLinkGraph.from_edges(
        [(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1), (4, 5, 0), (5, 6, 1), (6, 7, 0), (7, 4, 1)])
    assert two_disjoint_four_cycles(squares)


def test_g5_has_one_non_starter():
    from crownlib.links import quintuple_starters

    G = builtin("G5").graph
    assert len(set(G.verts) - quintuple_starters(G)) == 1


def test_unknown_name():
    with pytest.raises(UnknownName):
        builtin("G7")


def test_color_iso_identity_and_swap():
    G = builtin("G3").graph
    iso = color_iso(G, G)
    assert iso is not None and iso.apply(G) == G
    swapped = G.relabel({v: v for v in G.verts}, (1, 0, 2))
    iso = color_iso(G, swapped)
    assert iso is not None and iso.color_perm == (1, 0, 2)
    moved, perm = scramble(G, 4)
    iso = color_iso(G, moved)
    assert iso is not None and iso.apply(G) == moved


def test_color_iso_distinguishes():
    assert color_iso(builtin("G3").graph, builtin("G4").graph) is None
    for a in NAMES:
        for b in NAMES:
            if a != b:
                assert color_iso(builtin(a).graph, builtin(b).graph) is None


def test_classify():
    for seed, name in enumerate(NAMES[:5]):
        moved, _ = scramble(builtin(name).graph, seed)
        assert classify_444(moved) == name
    rainbow = ColoredLinkGraph.from_edges([(0, 1, 0), (2, 3, 1), (4, 5, 2)])
    assert classify_444(rainbow) is None


def test_enumeration():
    classes = enumerate_444()
    assert len(classes) == 5
    names = [classify_444(G) for G in classes]
    assert sorted(names) == list(NAMES[:5])
    for G in classes:
        assert has_rainbow_matching(G) is None
        m = {c: [set(p) for p in G.color_class(c)] for c in range(3)}
        for i in range(3):
            for j in range(3):
                if i != j:
                    span = set().union(*m[i])
                    assert all(span & edge for edge in m[j])


def test_enumeration_matches_oracle():
    reps = oracles.classify_unions()
    assert len(reps) == 5
    for R in reps:
        G = ColoredLinkGraph.from_edges(R)
        name = classify_444(G)
        assert name is not None
        assert oracles.color_isomorphic(R, as_triples(builtin(name).graph))


def test_verify_catalog_rows():
    rows = verify_catalog()
    assert len(rows) == 5 and all(r["matched"] for r in rows)
    assert {r["edges"] for r in rows} == {9}


def test_trimmed_links_are_classified():
    # A trimmed <4,4,4> link is a union of three 3-edge matchings, so it is
    # classified exactly when it has no rainbow matching.
    rng = random.Random(1)
    seen = 0
    for _ in range(300):
        H = random_linear(18, 40, rng.randrange(10**6))
        for e in H.edges:
            if H.degree_vector(e).d3 < 4:
                continue
            G = link_graph(trim_to_degree_vector(H, e, (4, 4, 4)), e)
            if len(G.colored_edges) != 9:
                continue
            seen += 1
            assert (classify_444(G) is None) == (has_rainbow_matching(G) is not None)
    assert seen > 0
    for name in NAMES[:5]:
        H, e = minimal_host(builtin(name))
        assert classify_444(link_graph(H, e)) == name
