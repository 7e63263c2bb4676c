"""Canonical labeling, exhaustive enumeration, and random graph models."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquebounds import (
    CapExceededError,
    Graph,
    canonical_form,
    canonical_graph,
    enumerate_graphs,
    from_edge_list,
    random_gnp,
    random_graph,
    random_regular,
    write_graph6,
)


def relabel(g, perm):
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@st.composite
def graph_and_permutation(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    npairs = n * (n - 1) // 2
    bits = draw(st.integers(min_value=0, max_value=(1 << npairs) - 1)) if npairs else 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    g = from_edge_list(n, [pairs[k] for k in range(npairs) if (bits >> k) & 1])
    perm = draw(st.permutations(range(n)))
    return g, list(perm)


class TestCanonicalForm:
    def test_relabelings_collide(self):
        a = from_edge_list(3, [(0, 1), (1, 2)])
        b = from_edge_list(3, [(0, 1), (0, 2)])
        assert canonical_form(a) == canonical_form(b)

    def test_different_graphs_differ(self):
        p3 = from_edge_list(3, [(0, 1), (1, 2)])
        k3 = from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
        assert canonical_form(p3) != canonical_form(k3)

    @given(graph_and_permutation())
    @settings(max_examples=150)
    def test_invariant_under_relabeling(self, data):
        g, perm = data
        assert canonical_form(g) == canonical_form(relabel(g, perm))

    def test_three_edge_graphs_on_four_vertices(self):
        from itertools import combinations

        pairs = list(combinations(range(4), 2))
        labels = {
            canonical_form(from_edge_list(4, list(combo))) for combo in combinations(pairs, 3)
        }
        assert len(labels) == 3  # path, triangle plus isolated, star

    def test_canonical_graph_is_its_own_form(self):
        g = from_edge_list(5, [(0, 2), (2, 4), (4, 1), (1, 3)])
        cg = canonical_graph(g)
        assert write_graph6(cg) == canonical_form(g)
        assert canonical_form(cg) == canonical_form(g)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            canonical_form(Graph(11, [0] * 11))


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_class_counts(self, n, count):
        assert len(enumerate_graphs(n)) == count

    def test_representatives_are_canonical_and_unique(self):
        graphs = enumerate_graphs(5)
        forms = [write_graph6(g) for g in graphs]
        assert forms == sorted(forms)
        assert len(set(forms)) == len(forms)
        for g in graphs:
            assert write_graph6(canonical_graph(g)) == write_graph6(g)

    def test_deterministic_order(self):
        assert [write_graph6(g) for g in enumerate_graphs(4)] == [
            write_graph6(g) for g in enumerate_graphs(4)
        ]

    def test_over_cap_suggests_external_enumerator(self):
        with pytest.raises(CapExceededError, match="external enumerator"):
            enumerate_graphs(9)


class TestRandomModels:
    def test_extreme_probabilities(self):
        assert random_gnp(5, 1.0, 3).m == 10
        assert random_gnp(5, 0.0, 3).m == 0

    def test_seed_reproducibility(self):
        assert random_gnp(9, 0.5, 42) == random_gnp(9, 0.5, 42)
        assert random_regular(8, 3, 7) == random_regular(8, 3, 7)

    def test_regular_sampler_is_simple_and_regular(self):
        for seed in range(5):
            g = random_regular(8, 3, seed)
            assert g.degrees() == (3,) * 8

    def test_infeasible_degree_sequence(self):
        with pytest.raises(ValueError, match="infeasible"):
            random_regular(5, 3, 0)
        with pytest.raises(ValueError, match="infeasible"):
            random_regular(4, 4, 0)

    def test_probability_validation(self):
        with pytest.raises(ValueError):
            random_gnp(4, 1.5, 0)

    def test_dispatch(self):
        assert random_graph("gnp", 5, {"p": 1.0}, 0).m == 10
        assert random_graph("regular", 6, {"d": 2}, 0).degrees() == (2,) * 6
        with pytest.raises(ValueError, match="unknown random model"):
            random_graph("smallworld", 5, {}, 0)
