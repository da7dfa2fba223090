import itertools
import random

import pytest

import oracles
from crownlib.constructions import FANO_LINES, fano, lower_bound_construction, sts9
from crownlib.core import (
    DegreeVector,
    LinearThreeGraph,
    add_edge,
    canonical_code,
    degree,
    degree_vector,
    dominates,
    is_linear,
    min_degree,
    parse,
    remove_edge,
    serialize,
    triple,
)
from crownlib.errors import (
    DuplicateEdge,
    EdgeNotPresent,
    EmptyVertexSet,
    InvalidTriple,
    LinearityViolation,
    ParseError,
    VertexOutOfRange,
)


def test_add_to_empty():
    H = add_edge(LinearThreeGraph(7), (0, 1, 2))
    assert H.edges == ((0, 1, 2),)


def test_add_violating_pair():
    H = LinearThreeGraph(7, [(0, 1, 2)])
    with pytest.raises(LinearityViolation) as exc:
        add_edge(H, (0, 1, 3))
    assert exc.value.pair == (0, 1)


def test_fano_any_order():
    for seed in range(5):
        lines = list(FANO_LINES)
        random.Random(seed).shuffle(lines)
        H = LinearThreeGraph(7)
        for t in lines:
            H = H.add_edge(t)
        assert len(H.edges) == 7
        assert all(c == 1 for c in oracles.pair_counts(7, H.edges).values())


def test_add_errors():
    H = LinearThreeGraph(5, [(0, 1, 2)])
    with pytest.raises(DuplicateEdge):
        H.add_edge((2, 1, 0))
    with pytest.raises(VertexOutOfRange):
        H.add_edge((2, 3, 5))
    with pytest.raises(InvalidTriple):
        triple(1, 1, 2)


def test_remove_then_add_restores():
    H = fano()
    for e in H.edges:
        assert H.remove_edge(e).add_edge(e) == H
    with pytest.raises(EdgeNotPresent):
        remove_edge(H, (0, 1, 3))


def test_degrees():
    assert all(degree(fano(), v) == 3 for v in range(7))
    assert degree(LinearThreeGraph(4), 2) == 0
    assert degree(lower_bound_construction(7), 0) == 2


def test_degree_vectors():
    L = lower_bound_construction(7)
    assert degree_vector(L, (0, 3, 4)) == DegreeVector(3, 3, 2)
    assert all(degree_vector(fano(), e) == (3, 3, 3) for e in fano().edges)
    assert degree_vector(LinearThreeGraph(3, [(0, 1, 2)]), (0, 1, 2)) == (1, 1, 1)
    assert str(DegreeVector.of(2, 4, 3)) == "<4,3,2>"


def test_dominates():
    assert dominates(DegreeVector(5, 5, 3), DegreeVector(4, 4, 3))
    assert not dominates(DegreeVector(5, 4, 2), DegreeVector(4, 4, 3))
    assert not dominates(DegreeVector(4, 4, 3), DegreeVector(5, 4, 2))
    for p in itertools.product(range(4), repeat=3):
        assert dominates(DegreeVector(*p), DegreeVector(*p))


def test_min_degree():
    assert min_degree(fano()) == 3
    assert min_degree(lower_bound_construction(7)) == 2
    assert min_degree(sts9()) == 4
    with pytest.raises(EmptyVertexSet):
        min_degree(LinearThreeGraph(0))


def test_canonical_code_invariance():
    rng = random.Random(0)
    for H in (fano(), sts9(), lower_bound_construction(15)):
        code = canonical_code(H)
        for _ in range(10):
            perm = list(range(H.n))
            rng.shuffle(perm)
            assert canonical_code(H.relabel(perm)) == code


def test_canonical_code_distinguishes():
    assert canonical_code(LinearThreeGraph(6, [(0, 1, 2)])) != canonical_code(LinearThreeGraph(6))
    a = LinearThreeGraph(6, [(0, 1, 2), (0, 3, 4)])
    b = LinearThreeGraph(6, [(0, 1, 2), (3, 4, 5)])
    assert canonical_code(a) != canonical_code(b)


def test_canonical_code_matches_brute_force_isomorphism():
    rng = random.Random(5)
    triples = list(itertools.combinations(range(6), 3))
    graphs = []
    for _ in range(40):
        edges = []
        for t in rng.sample(triples, rng.randint(0, 4)):
            if is_linear(6, edges + [t]):
                edges.append(t)
        graphs.append(LinearThreeGraph(6, edges))
    for g, h in itertools.combinations(graphs[:25], 2):
        same = oracles.isomorphic(6, g.edges, h.edges)
        assert (g.canonical_code() == h.canonical_code()) == same


def test_round_trip():
    H = fano()
    text = serialize(H)
    assert text.splitlines()[0] == "7 7"
    assert parse(text) == H
    assert parse("# comment\n\n" + text) == H


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n0 1 1", 2),
        ("3 1\n0 1 3", 2),
        ("x", 1),
        ("3 2\n0 1 2", 2),
        ("3 0\n0 1 2", 2),
        ("65 0", 1),
        ("6 2\n0 1 2\n2 1 0", 3),
        ("", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_parse_linearity():
    with pytest.raises(LinearityViolation):
        parse("5 2\n0 1 2\n0 1 3\n")


def test_is_linear_oracle_agrees():
    rng = random.Random(2)
    triples = list(itertools.combinations(range(7), 3))
    for _ in range(200):
        edges = rng.sample(triples, rng.randint(0, 6))
        assert is_linear(7, edges) == oracles.linear(edges)
