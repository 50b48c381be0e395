import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from demon import DomainError, Graph, LabelState, LpConfig, frequency_vote, propagate, whole_graph

from bruteforce import lp_groups
from conftest import BARBELL, labeled, random_edge_list


def as_labels(result, g):
    return {frozenset(g.label_of(m) for m in c) for c in result}


class TestFrequencyVote:
    def build(self):
        # node v with neighbors a, a2 (labeled a) and b
        g = Graph.from_edges([("v", "a"), ("v", "a2"), ("v", "b")])
        sub = whole_graph(g)
        return g, sub

    def test_strict_majority(self):
        g, sub = self.build()
        state = LabelState.initial(sub)
        state.labels[g.id_of("a2")] = g.id_of("a")
        winner = frequency_vote(g.id_of("v"), state, sub)
        assert g.label_of(winner) == "a"

    def test_tie_breaks_to_smallest_label(self):
        g = Graph.from_edges([("v", "b"), ("v", "a")])
        sub = whole_graph(g)
        state = LabelState.initial(sub)
        winner = frequency_vote(g.id_of("v"), state, sub)
        assert g.label_of(winner) == "a"

    def test_consensus_fixed_point(self):
        g, sub = self.build()
        state = LabelState.initial(sub)
        for name in ("a", "a2", "b"):
            state.labels[g.id_of(name)] = g.id_of("a")
        winner = frequency_vote(g.id_of("v"), state, sub)
        assert g.label_of(winner) == "a"

    def test_isolated_node_is_domain_error(self):
        g = Graph.from_edges([], nodes=["x"])
        sub = whole_graph(g)
        with pytest.raises(DomainError):
            frequency_vote(g.id_of("x"), LabelState.initial(sub), sub)

    def test_initial_state_maps_nodes_to_themselves(self):
        g, sub = self.build()
        state = LabelState.initial(sub)
        assert state.iteration == 0
        assert state.labels == {v: v for v in sub.nodes}


class TestPropagate:
    def test_edgeless_subgraph_gives_singletons(self):
        g = Graph.from_edges([], nodes=["1", "2", "3"])
        assert as_labels(propagate(whole_graph(g)), g) == labeled({"1"}, {"2"}, {"3"})

    def test_two_disjoint_edges(self):
        g = Graph.from_edges([("1", "2"), ("4", "5")])
        assert as_labels(propagate(whole_graph(g)), g) == labeled({"1", "2"}, {"4", "5"})

    def test_barbell_splits_into_triangles(self, barbell):
        result = as_labels(propagate(whole_graph(barbell)), barbell)
        assert result == labeled({"1", "2", "3"}, {"4", "5", "6"})
        # bridge endpoints sit in different communities and do not overlap
        for c in result:
            assert not {"3", "6"} <= c

    def test_empty_subgraph(self):
        g = Graph.from_edges([])
        assert propagate(whole_graph(g)) == set()

    def test_matches_bruteforce_simulation(self, barbell):
        expected = lp_groups([str(i) for i in range(1, 7)], BARBELL)
        assert as_labels(propagate(whole_graph(barbell)), barbell) == expected

    @given(seed=st.integers(0, 2000), n=st.integers(1, 25))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_bruteforce_on_random_graphs(self, seed, n):
        edges = random_edge_list(n, 0.18, seed)
        nodes = [str(i) for i in range(n)]
        g = Graph.from_edges(edges, nodes=nodes)
        assert as_labels(propagate(whole_graph(g)), g) == lp_groups(nodes, edges)

    @given(seed=st.integers(0, 2000), n=st.integers(1, 25), perm=st.integers(0, 500))
    @settings(max_examples=40, deadline=None)
    def test_insertion_order_does_not_matter(self, seed, n, perm):
        import random as _random

        edges = random_edge_list(n, 0.18, seed)
        nodes = [str(i) for i in range(n)]
        g1 = Graph.from_edges(edges, nodes=nodes)
        shuffled_edges = list(edges)
        shuffled_nodes = list(nodes)
        _random.Random(perm).shuffle(shuffled_edges)
        _random.Random(perm + 1).shuffle(shuffled_nodes)
        g2 = Graph.from_edges(shuffled_edges, nodes=shuffled_nodes)
        assert as_labels(propagate(whole_graph(g1)), g1) == as_labels(
            propagate(whole_graph(g2)), g2
        )

    @given(seed=st.integers(0, 2000), n=st.integers(1, 30))
    @settings(max_examples=50, deadline=None)
    def test_every_node_is_covered(self, seed, n):
        g = Graph.from_edges(random_edge_list(n, 0.12, seed), nodes=[str(i) for i in range(n)])
        communities = propagate(whole_graph(g))
        covered = set().union(*communities) if communities else set()
        assert covered == set(g.nodes())
        assert all(c for c in communities)

    @given(seed=st.integers(0, 2000), n=st.integers(2, 25))
    @settings(max_examples=40, deadline=None)
    def test_no_community_spans_components(self, seed, n):
        g = Graph.from_edges(random_edge_list(n, 0.1, seed), nodes=[str(i) for i in range(n)])
        comp: dict[int, int] = {}
        for v in g.nodes():
            if v in comp:
                continue
            stack, comp[v] = [v], v
            while stack:
                u = stack.pop()
                for w in g.neighbors(u):
                    if w not in comp:
                        comp[w] = v
                        stack.append(w)
        for c in propagate(whole_graph(g)):
            assert len({comp[m] for m in c}) == 1

    @given(seed=st.integers(0, 2000), n=st.integers(2, 22))
    @settings(max_examples=40, deadline=None)
    def test_early_stop_state_is_a_vote_fixed_point(self, seed, n):
        """If propagation settles before the round cap, replaying one round of
        votes from the final grouping state must change nothing."""
        edges = random_edge_list(n, 0.2, seed)
        nodes = [str(i) for i in range(n)]
        g = Graph.from_edges(edges, nodes=nodes)
        sub = whole_graph(g)
        big = propagate(sub, LpConfig(t_max=100))
        tiny_budget_matches = propagate(sub, LpConfig(t_max=99)) == big
        if not tiny_budget_matches:
            return  # only oscillating runs differ; fixed point not claimed there
        # reconstruct final labels via the brute-force simulator and verify
        # each node's label frequency is maximal among its neighbors
        from collections import Counter

        from bruteforce import skey

        adj = {v: set() for v in nodes}
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        labels = {v: v for v in nodes}
        order = sorted(nodes, key=skey)
        for _ in range(100):
            for v in order:
                if adj[v]:
                    counts = Counter(labels[u] for u in adj[v])
                    top = max(counts.values())
                    labels[v] = min(
                        (l for l, c in counts.items() if c == top), key=skey
                    )
            settled = all(
                not adj[v]
                or Counter(labels[u] for u in adj[v])[labels[v]]
                == max(Counter(labels[u] for u in adj[v]).values())
                for v in order
            )
            if settled:
                break
        for v in order:
            if adj[v]:
                counts = Counter(labels[u] for u in adj[v])
                assert counts[labels[v]] == max(counts.values())

    def test_oscillation_hits_round_cap_without_error(self):
        # a 4-cycle under synchronous-style swaps can two-cycle; the round cap
        # must end the run and still produce a covering grouping
        g = Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        communities = propagate(whole_graph(g), LpConfig(t_max=3))
        covered = set().union(*communities)
        assert covered == set(g.nodes())

    def test_t_max_validation(self):
        with pytest.raises(ValueError):
            LpConfig(t_max=0)
