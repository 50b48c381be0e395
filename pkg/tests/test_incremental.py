import random

import pytest

from demon import (
    DeltaError,
    DomainError,
    Graph,
    GraphDelta,
    affected_nodes,
    apply_delta,
    demon,
    demon_incremental,
    load_delta,
)

from conftest import label_sets, random_edge_list


def names(ids, g):
    return {g.label_of(v) for v in ids}


class TestAffectedNodes:
    def test_new_edge_touches_endpoints_and_their_neighbors(self):
        g = Graph.from_edges([("u", "x"), ("x", "w")])
        delta = GraphDelta(new_edges=(("u", "w"),))
        affected = affected_nodes(g, delta)
        updated = apply_delta(g, delta)
        assert {"u", "w", "x"} <= names(affected, updated)

    def test_new_isolated_node(self):
        g = Graph.from_edges([("a", "b")])
        delta = GraphDelta(new_nodes=("z",))
        updated = apply_delta(g, delta)
        assert names(affected_nodes(g, delta), updated) == {"z"}

    def test_empty_delta(self):
        g = Graph.from_edges([("a", "b")])
        assert affected_nodes(g, GraphDelta()) == set()

    def test_unknown_undeclared_endpoint_rejected(self):
        g = Graph.from_edges([("a", "b")])
        with pytest.raises(DomainError):
            affected_nodes(g, GraphDelta(new_edges=(("a", "nope"),)))

    def test_covers_every_node_whose_ego_view_changes(self):
        # independent check: recompute each ego-minus-ego before and after
        from demon import ego_minus_ego

        edges = random_edge_list(18, 0.15, 3)
        g = Graph.from_edges(edges, nodes=[str(i) for i in range(18)])
        delta = GraphDelta(
            new_nodes=("18",),
            new_edges=(("18", "0"), ("2", "5"), ("7", "11")),
        )
        updated = apply_delta(g, delta)
        affected = affected_nodes(g, delta)

        def view(graph, v):
            sub = ego_minus_ego(v, graph)
            edge_set = frozenset(
                frozenset((graph.label_of(a), graph.label_of(b)))
                for a in sub.nodes
                for b in sub.adj[a]
            )
            return (frozenset(graph.label_of(x) for x in sub.nodes), edge_set)

        for v in g.nodes():
            if view(g, v) != view(updated, v):
                assert v in affected


class TestApplyDelta:
    def test_original_graph_untouched(self):
        g = Graph.from_edges([("a", "b")])
        apply_delta(g, GraphDelta(new_nodes=("c",), new_edges=(("a", "c"),)))
        assert g.node_count == 2
        assert g.edge_count == 1

    def test_ids_preserved(self):
        g = Graph.from_edges([("a", "b")])
        updated = apply_delta(g, GraphDelta(new_nodes=("c",)))
        for v in g.nodes():
            assert updated.label_of(v) == g.label_of(v)

    def test_self_loop_rejected(self):
        g = Graph.from_edges([("a", "b")])
        with pytest.raises(DomainError):
            apply_delta(g, GraphDelta(new_edges=(("a", "a"),)))

    def test_existing_edge_ignored(self):
        g = Graph.from_edges([("a", "b")])
        updated = apply_delta(g, GraphDelta(new_edges=(("b", "a"),)))
        assert updated.edge_count == 1


class TestLoadDelta:
    def test_new_labels_become_new_nodes(self, tmp_path):
        g = Graph.from_edges([("a", "b")])
        path = tmp_path / "d.txt"
        path.write_text("a c\nc d\n", encoding="utf-8")
        delta = load_delta(path, g)
        assert delta.new_nodes == ("c", "d")
        assert delta.new_edges == (("a", "c"), ("c", "d"))

    def test_single_field_line_is_malformed(self, tmp_path):
        from demon import GraphParseError

        g = Graph.from_edges([("a", "b")])
        path = tmp_path / "d.txt"
        path.write_text("c\n", encoding="utf-8")
        with pytest.raises(GraphParseError):
            load_delta(path, g)

    def test_deletion_syntax_rejected_with_line(self, tmp_path):
        g = Graph.from_edges([("a", "b")])
        path = tmp_path / "d.txt"
        path.write_text("a c\n- a b\n", encoding="utf-8")
        with pytest.raises(DeltaError) as err:
            load_delta(path, g)
        assert ":2:" in str(err.value)


class TestDemonIncremental:
    def test_two_triangles_built_in_two_batches(self):
        g = Graph.from_edges([("1", "2"), ("1", "3"), ("2", "3")])
        cover = demon(g, 0.0)
        delta = GraphDelta(
            new_nodes=("4", "5"),
            new_edges=(("3", "4"), ("3", "5"), ("4", "5")),
        )
        updated, out = demon_incremental(g, delta, cover)
        scratch = demon(updated, 0.0)
        assert label_sets(out, updated) == label_sets(scratch, updated)
        assert label_sets(out, updated) == {
            frozenset({"1", "2", "3"}),
            frozenset({"3", "4", "5"}),
        }

    def test_empty_delta_keeps_cover(self, two_triangles):
        cover = demon(two_triangles, 0.0)
        updated, out = demon_incremental(two_triangles, GraphDelta(), cover)
        assert out.communities == cover.communities

    def test_whole_graph_as_delta_onto_empty_graph(self):
        empty = Graph()
        base = demon(empty, 0.0)
        edges = random_edge_list(15, 0.2, 11)
        nodes = [str(i) for i in range(15)]
        delta = GraphDelta(new_nodes=tuple(nodes), new_edges=tuple(edges))
        updated, out = demon_incremental(empty, delta, base)
        scratch = demon(Graph.from_edges(edges, nodes=nodes), 0.0)
        assert label_sets(out, updated) == label_sets(scratch, updated)

    def test_epsilon_mismatch_rejected(self, two_triangles):
        cover = demon(two_triangles, 0.0)
        with pytest.raises(DomainError):
            demon_incremental(two_triangles, GraphDelta(), cover, epsilon=0.5)

    def test_foreign_cover_rejected(self, two_triangles):
        from demon import CommunityCover

        foreign = CommunityCover([{0, 1}], 0.0)
        with pytest.raises(DomainError):
            demon_incremental(two_triangles, GraphDelta(), foreign)

    @pytest.mark.parametrize("batches", [2, 3, 4])
    def test_batched_equals_scratch_after_every_batch(self, batches):
        rng = random.Random(batches * 101)
        edges = random_edge_list(24, 0.14, batches)
        nodes = [str(i) for i in range(24)]
        rng.shuffle(edges)
        chunk = max(1, len(edges) // batches)
        parts = [edges[i : i + chunk] for i in range(0, len(edges), chunk)]

        g = Graph()
        cover = demon(g, 0.0)
        seen: set[str] = set()
        for part in parts:
            new_nodes = []
            for a, b in part:
                for x in (a, b):
                    if x not in seen:
                        seen.add(x)
                        new_nodes.append(x)
            delta = GraphDelta(tuple(new_nodes), tuple(part))
            g, cover = demon_incremental(g, delta, cover)
            scratch_graph = Graph.from_edges(
                [e for p in parts[: parts.index(part) + 1] for e in p]
            )
            scratch = demon(scratch_graph, 0.0)
            assert label_sets(cover, g) == label_sets(scratch, scratch_graph)

    @pytest.mark.parametrize("eps", [0.25, 0.5])
    def test_batched_equals_scratch_at_positive_epsilon(self, eps):
        """Replayed merging makes scratch equivalence hold beyond epsilon 0."""
        edges = random_edge_list(20, 0.18, 77)
        nodes = [str(i) for i in range(20)]
        half = len(edges) // 2

        g = Graph.from_edges(edges[:half])
        cover = demon(g, eps)
        new_nodes = tuple(
            x
            for e in edges[half:]
            for x in e
            if not g.has_node(x)
        )
        # preserve first-seen order without duplicates
        uniq, seen = [], set()
        for x in new_nodes:
            if x not in seen:
                seen.add(x)
                uniq.append(x)
        delta = GraphDelta(tuple(uniq), tuple(edges[half:]))
        g2, out = demon_incremental(g, delta, cover, epsilon=eps)
        scratch_graph = Graph.from_edges(edges)
        scratch = demon(scratch_graph, eps)
        assert label_sets(out, g2) == label_sets(scratch, scratch_graph)

    def test_never_loses_a_maximal_scratch_community(self):
        edges = random_edge_list(22, 0.15, 123)
        half = len(edges) // 2
        g = Graph.from_edges(edges[:half])
        cover = demon(g, 0.0)
        uniq, seen = [], set()
        for a, b in edges[half:]:
            for x in (a, b):
                if not g.has_node(x) and x not in seen:
                    seen.add(x)
                    uniq.append(x)
        g2, out = demon_incremental(
            g, GraphDelta(tuple(uniq), tuple(edges[half:])), cover
        )
        scratch_graph = Graph.from_edges(edges)
        scratch = demon(scratch_graph, 0.0)
        assert label_sets(scratch, scratch_graph) <= label_sets(out, g2)
