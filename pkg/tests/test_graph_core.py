"""Graph construction, enumeration primitives, and the PMC test."""

import random

import pytest

from tclq.bitset import bit_list, bits, mask_of
from tclq.graph import (
    Graph,
    enumerate_maximal_independent_sets,
    enumerate_minimal_separators,
    is_pmc,
    maximal_cliques_within,
)
from tclq.oracle import OracleBudget, brute_pmcs

from corpus import all_graphs, connected_graphs, graphs_up_to
from helpers import complete, cycle, path


def brute_mis(g: Graph):
    """All maximal independent sets by filtering every subset."""
    out = []
    for s in range(1 << g.n):
        if not g.is_independent(s):
            continue
        if any(not (g.adj[v] & s) for v in bits(g.full & ~s)):
            continue
        if s == 0 and g.n > 0:
            continue
        out.append(s)
    return out


def brute_min_seps(g: Graph):
    """Minimal a,b-separators: S with two or more full components."""
    out = []
    for s in range(1 << g.n):
        info = g.components_of_removal(s)
        if sum(info.full) >= 2:
            out.append(s)
    return out


class TestFromEdges:
    def test_c4(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.edge_count() == 4
        assert g.has_edge(0, 1) and g.has_edge(3, 0)
        assert not g.has_edge(0, 2) and not g.has_edge(1, 3)

    def test_empty_on_three(self):
        g = Graph.from_edges(3, [])
        assert g.n == 3 and g.edge_count() == 0

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(4, [(0, 1), (1, 0)])
        assert g.edge_count() == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match=r"\(0,4\)"):
            Graph.from_edges(4, [(0, 4)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(3, [(1, 1)])

    def test_adjacency_symmetric(self, graphs_to_6):
        for g in graphs_to_6:
            for u in range(g.n):
                for v in bits(g.adj[u]):
                    assert g.has_edge(v, u)


class TestComplement:
    def test_k4_complement_empty(self):
        assert complete(4).complement().edge_count() == 0

    def test_c5_self_complementary(self):
        c5 = cycle(5)
        co = c5.complement()
        # complement of C5 is the 5-cycle 0-2-4-1-3
        assert sorted(co.edges()) == sorted(
            [(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)]
        )

    def test_involution(self, graphs_to_6):
        for g in graphs_to_6:
            assert g.complement().complement() == g

    def test_edge_count_sums(self, graphs_to_6):
        for g in graphs_to_6:
            total = g.n * (g.n - 1) // 2
            assert g.edge_count() + g.complement().edge_count() == total


class TestInducedSubgraph:
    def test_c4_path(self):
        sub, verts = cycle(4).induced_subgraph(mask_of([1, 2, 3]))
        assert verts == [1, 2, 3]
        assert sorted(sub.edges()) == [(0, 1), (1, 2)]

    def test_empty_set(self):
        sub, verts = cycle(4).induced_subgraph(0)
        assert sub.n == 0 and verts == []

    def test_full_set_identity(self, graphs_to_6):
        for g in graphs_to_6:
            sub, verts = g.induced_subgraph(g.full)
            assert verts == list(range(g.n))
            assert sub == g

    def test_edges_restricted(self):
        rng = random.Random(11)
        for g in connected_graphs(5):
            s = rng.randrange(1 << g.n)
            sub, verts = g.induced_subgraph(s)
            back = {i: v for i, v in enumerate(verts)}
            for i, j in sub.edges():
                assert g.has_edge(back[i], back[j])
            inside = [(u, v) for u, v in g.edges() if (s >> u & 1) and (s >> v & 1)]
            assert len(inside) == sub.edge_count()


class TestComponentsOfRemoval:
    def test_c4_diagonal(self):
        info = cycle(4).components_of_removal(mask_of([1, 3]))
        assert info.separator == mask_of([1, 3])
        assert info.components == (mask_of([0]), mask_of([2]))
        assert info.full == (True, True)

    def test_p4_inner_vertex(self):
        info = path(4).components_of_removal(1 << 1)
        assert info.components == (1 << 0, mask_of([2, 3]))
        assert info.full == (True, True)

    def test_k4_pair(self):
        info = complete(4).components_of_removal(mask_of([1, 2]))
        assert info.components == (mask_of([0, 3]),)
        assert info.full == (True,)

    def test_components_partition(self, graphs_to_6):
        rng = random.Random(5)
        for g in graphs_to_6:
            s = rng.randrange(1 << g.n) if g.n else 0
            info = g.components_of_removal(s)
            acc = 0
            for c in info.components:
                assert c and not (c & s) and not (c & acc)
                acc |= c
            assert acc == g.full & ~s
            # sorted by least vertex, full flag matches definition
            mins = [c & -c for c in info.components]
            assert mins == sorted(mins)
            for c, f in zip(info.components, info.full):
                assert f == (g.neighbors(c) == s)


class TestCompleteSet:
    def test_c4_chord(self):
        g = cycle(4).complete_set(mask_of([1, 3]))
        assert g.has_edge(1, 3)
        assert g.edge_count() == 5

    def test_singleton_identity(self):
        g = cycle(4)
        assert g.complete_set(1 << 2) == g

    def test_fill_empty_triangle(self):
        g = Graph.from_edges(3, []).complete_set(mask_of([0, 1, 2]))
        assert g.is_complete()

    def test_only_adds_inside(self, graphs_to_6):
        rng = random.Random(7)
        for g in graphs_to_6:
            s = rng.randrange(1 << g.n) if g.n else 0
            h = g.complete_set(s)
            assert h.is_clique(s)
            for u, v in h.edges():
                assert g.has_edge(u, v) or ((s >> u & 1) and (s >> v & 1))


class TestMaximalIndependentSets:
    def test_k3(self):
        assert enumerate_maximal_independent_sets(complete(3)) == [1, 2, 4]

    def test_c5_pairs(self):
        out = enumerate_maximal_independent_sets(cycle(5))
        assert len(out) == 5
        assert all(s.bit_count() == 2 for s in out)

    def test_p4(self):
        out = enumerate_maximal_independent_sets(path(4))
        assert sorted(out) == sorted([mask_of([0, 2]), mask_of([0, 3]), mask_of([1, 3])])

    def test_matches_brute_small(self, graphs_to_6):
        for g in graphs_to_6:
            assert enumerate_maximal_independent_sets(g) == brute_mis(g)

    def test_matches_brute_seven(self):
        for g in connected_graphs(7):
            assert enumerate_maximal_independent_sets(g) == brute_mis(g)

    def test_matches_brute_eight_sample(self, graphs_8):
        rng = random.Random(13)
        for g in rng.sample(graphs_8, 300):
            assert enumerate_maximal_independent_sets(g) == brute_mis(g)

    def test_moon_moser_bound(self, graphs_to_6):
        for g in graphs_up_to(7):
            count = len(enumerate_maximal_independent_sets(g))
            assert count <= 3 ** ((g.n + 2) // 3)

    def test_no_duplicates_sorted(self, graphs_to_6):
        for g in graphs_to_6:
            out = enumerate_maximal_independent_sets(g)
            assert out == sorted(set(out))


class TestMinimalSeparators:
    def test_p4(self):
        assert enumerate_minimal_separators(path(4)) == [1 << 1, 1 << 2]

    def test_c4(self):
        want = sorted([mask_of([0, 2]), mask_of([1, 3])])
        assert enumerate_minimal_separators(cycle(4)) == want

    def test_k4_none(self):
        assert enumerate_minimal_separators(complete(4)) == []

    def test_matches_brute_small(self, graphs_to_6):
        for g in graphs_to_6:
            assert enumerate_minimal_separators(g) == brute_min_seps(g)

    def test_matches_brute_seven(self):
        for g in all_graphs(7):
            assert enumerate_minimal_separators(g) == brute_min_seps(g)

    def test_matches_brute_eight_sample(self, graphs_8):
        rng = random.Random(17)
        for g in rng.sample(graphs_8, 300):
            assert enumerate_minimal_separators(g) == brute_min_seps(g)

    def test_disconnected_has_empty_separator(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        seps = enumerate_minimal_separators(g)
        assert seps[0] == 0


class TestIsPmc:
    def test_c4_triple(self):
        assert is_pmc(cycle(4), mask_of([1, 2, 3]))

    def test_c4_diagonal_rejected(self):
        assert not is_pmc(cycle(4), mask_of([1, 3]))

    def test_k3_whole(self):
        assert is_pmc(complete(3), mask_of([0, 1, 2]))

    def test_sweep_matches_triangulations_small(self, graphs_to_6):
        for g in graphs_to_6:
            if g.n == 0:
                continue
            sweep = [s for s in range(1, 1 << g.n) if is_pmc(g, s)]
            assert sweep == brute_pmcs(g)

    def test_sweep_matches_triangulations_seven(self):
        for g in connected_graphs(7):
            sweep = [s for s in range(1, 1 << g.n) if is_pmc(g, s)]
            assert sweep == brute_pmcs(g)

    def test_sweep_matches_triangulations_eight_sample(self, graphs_8):
        rng = random.Random(19)
        budget = OracleBudget(max_n=8)
        for g in rng.sample(graphs_8, 60):
            sweep = [s for s in range(1, 1 << g.n) if is_pmc(g, s)]
            assert sweep == brute_pmcs(g, budget)

    def test_maximal_cliques_are_pmcs(self, connected_to_6):
        # every maximal clique of G survives in the trivial triangulation
        # of anything chordal, and is a PMC whenever it is one of some
        # minimal triangulation; here check the weaker standard fact that
        # a maximal clique with no full component is a PMC.
        for g in connected_to_6:
            for c in maximal_cliques_within(g, g.full):
                info = g.components_of_removal(c)
                if all(not f for f in info.full):
                    assert is_pmc(g, c)


class TestMaximalCliques:
    def test_empty_sub(self):
        assert maximal_cliques_within(cycle(4), 0) == [0]

    def test_matches_brute(self, graphs_to_6):
        for g in graphs_to_6:
            got = maximal_cliques_within(g, g.full)
            want = brute_mis(g.complement())
            assert got == want

    def test_clique_number(self):
        assert complete(5).clique_number() == 5
        assert cycle(5).clique_number() == 2
        assert Graph.from_edges(0, []).clique_number() == 0


class TestBitset:
    def test_round_trip(self):
        xs = [0, 3, 17, 40]
        assert bit_list(mask_of(xs)) == xs

    def test_bits_order(self):
        assert list(bits(0b101001)) == [0, 3, 5]
