"""Self-checks of the brute-force reference implementations."""

import pytest

from hypercc import RandomHypergraphSpec, build, random_hypergraph
from hypercc.oracle import naive_cc, naive_census

from conftest import pair_only_spec, watts_strogatz_reference

FIXTURES = {
    "I": ([{"a", "b"}, {"a", "c"}], "a"),
    "II": ([{"a", "b"}, {"a", "c"}, {"b", "c"}], "a"),
    "III": ([{"a", "b", "c"}], "a"),
    "IV-a": ([{"a", "b", "c"}, {"a", "b"}], "a"),
    "IV-b": ([{"a", "b", "c"}, {"a", "b"}], "c"),
    "V": ([{"a", "b", "c"}, {"a", "b"}, {"a", "c"}], "a"),
    "VI": ([{"a", "b", "c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}], "a"),
}

EXPECTED = {
    "opsahl": [0, 1, 0, 0, 0, 1 / 3, 1],
    "zhou": [0, 1, 0, 0, 0, 1 / 3, 1 / 3],
    "baseline": [0, 1, 1, 1, 1, 1, 1],
    "proposed": [0, 1, 1 / 2, 1 / 2, 1, 1 / 2, 1],
}

ORDER = ["I", "II", "III", "IV-a", "IV-b", "V", "VI"]


@pytest.mark.parametrize("definition", list(EXPECTED))
def test_naive_reproduces_fixture_matrix(definition):
    for name, want in zip(ORDER, EXPECTED[definition]):
        edges, root = FIXTURES[name]
        h = build(edges)
        got = naive_cc(definition, h, h.id_of(root))
        assert got == pytest.approx(want, abs=1e-12), name


def test_naive_matches_simple_graph_reference():
    for seed in range(15):
        h = random_hypergraph(pair_only_spec(seed, max_n=12))
        pair_edges = [{h.label_of(u) for u in e} for e in h.edges]
        for v in range(h.n_nodes):
            want = watts_strogatz_reference(pair_edges, h.label_of(v))
            for definition in EXPECTED:
                assert naive_cc(definition, h, v) == pytest.approx(want, abs=1e-12)


def test_naive_census_examples():
    wedge_and_triangle = build(
        [{"a", "b"}, {"b", "c"}, {"x", "y"}, {"y", "z"}, {"x", "z"}])
    counts = naive_census(wedge_and_triangle)
    assert counts[1] == 1 and counts[2] == 1
    one_big_edge = build([{"a", "b", "c", "d"}])
    assert all(v == 0 for v in naive_census(one_big_edge).values())


def test_naive_cc_rejects_unknown_definition():
    h = build([{"a", "b"}])
    with pytest.raises(ValueError, match="unknown definition"):
        naive_cc("estrada", h, 0)


def test_generator_reproducible_across_calls():
    spec = RandomHypergraphSpec(n=6, m=5, min_size=2, max_size=3, seed=42)
    assert random_hypergraph(spec).edges == random_hypergraph(spec).edges


def test_generator_validates_parameters():
    with pytest.raises(ValueError):
        RandomHypergraphSpec(n=3, m=1, min_size=4, max_size=4, seed=0).validate()
    with pytest.raises(ValueError, match="infeasible"):
        random_hypergraph(RandomHypergraphSpec(n=4, m=11, min_size=2,
                                               max_size=3, seed=0))


def test_generator_edges_distinct_sets():
    h = random_hypergraph(RandomHypergraphSpec(n=8, m=12, min_size=2,
                                               max_size=4, seed=3))
    assert len({frozenset(e) for e in h.edges}) == h.n_edges
