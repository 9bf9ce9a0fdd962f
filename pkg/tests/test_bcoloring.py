from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bkneser import (
    BColoringFailure,
    Coloring,
    KneserParams,
    ProofStep,
    VertexSubset,
    analyze_proof_structure,
    build_graph,
    class_core,
    dominating_vertices,
    exact_phi,
    is_b_coloring,
    is_proper,
)

from oracles import adjacency_sets, naive_is_b_coloring, proper_partitions


class TestColoring:
    def test_surjectivity_enforced(self):
        with pytest.raises(ValueError):
            Coloring((0, 2), 3)  # color 1 unused
        with pytest.raises(ValueError):
            Coloring((0, 1), 1)  # color out of range
        with pytest.raises(ValueError):
            Coloring((), 0)

    def test_from_sequence_canonicalizes(self):
        c = Coloring.from_sequence([5, 5, 7, 5])
        assert c.colors == (0, 0, 1, 0)
        assert c.color_count == 2

    def test_class_members(self):
        c = Coloring.from_sequence([0, 1, 0, 2])
        assert c.class_members(0) == (0, 2)
        assert c.classes() == ((0, 2), (1,), (3,))

    @given(st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=12))
    def test_canonicalization_idempotent(self, labels):
        once = Coloring.from_sequence(labels)
        assert once.canonical() == once
        # classes are numbered by ascending minimum vertex index
        first_seen = []
        for v, c in enumerate(once.colors):
            if c == len(first_seen):
                first_seen.append(v)
        assert first_seen == sorted(first_seen)


class TestIsProper:
    def test_k3_examples(self, k3):
        ok, edge = is_proper(k3, Coloring.from_sequence([0, 1, 2]))
        assert ok and edge is None
        ok, edge = is_proper(k3, Coloring.from_sequence([0, 0, 1]))
        assert not ok and edge == (0, 1)

    def test_domain_mismatch(self, k3):
        with pytest.raises(ValueError):
            is_proper(k3, Coloring.from_sequence([0, 1]))

    def test_petersen_three_coloring(self, petersen):
        # derive one proper 3-coloring by naive enumeration, then verify
        adj = adjacency_sets(petersen)
        colors = next(iter(proper_partitions(adj, 3)))
        ok, edge = is_proper(petersen, Coloring.from_sequence(colors))
        assert ok and edge is None


class TestDominatingVertices:
    def test_complete_graph_all_dominating(self, k3):
        c = Coloring.from_sequence([0, 1, 2])
        for color in range(3):
            assert dominating_vertices(k3, c, color) == {color}

    def test_matching_two_sides(self, matching6):
        # one endpoint of each matching edge per side
        colors = [0] * 6
        for u, v in matching6.edges():
            colors[u], colors[v] = 0, 1
        c = Coloring.from_sequence(colors)
        assert dominating_vertices(matching6, c, 0) | dominating_vertices(
            matching6, c, 1
        ) == set(range(6))

    def test_color_out_of_range(self, k3):
        with pytest.raises(ValueError):
            dominating_vertices(k3, Coloring.from_sequence([0, 1, 2]), 3)

    def test_petersen_4_3_3_coloring_has_witnesses(self, petersen):
        # among all proper 3-colorings with class sizes 4,3,3 at least one
        # has a dominating vertex in every class
        adj = adjacency_sets(petersen)
        found = False
        for colors in proper_partitions(adj, 3):
            sizes = sorted(colors.count(c) for c in range(3))
            if sizes != [3, 3, 4]:
                continue
            c = Coloring.from_sequence(colors)
            if all(dominating_vertices(petersen, c, color) for color in range(3)):
                found = True
                break
        assert found


class TestIsBColoring:
    def test_k3_valid(self, k3):
        verdict = is_b_coloring(k3, Coloring.from_sequence([0, 1, 2]))
        assert verdict.valid
        assert verdict.witnesses == (0, 1, 2)
        assert bool(verdict)

    def test_k2_two_colors(self):
        g = build_graph(KneserParams(1, 0))
        verdict = is_b_coloring(g, Coloring.from_sequence([0, 1]))
        assert verdict.valid

    def test_not_proper_reason(self, k3):
        verdict = is_b_coloring(k3, Coloring.from_sequence([0, 0, 1]))
        assert not verdict.valid
        assert verdict.reason is BColoringFailure.NOT_PROPER
        assert verdict.violating_edge == (0, 1)

    def test_petersen_no_4_color_b_coloring(self, petersen):
        # verdict must reject every proper 4-coloring for want of witnesses
        adj = adjacency_sets(petersen)
        count = 0
        for colors in proper_partitions(adj, 4):
            verdict = is_b_coloring(petersen, Coloring.from_sequence(colors))
            assert not verdict.valid
            assert verdict.reason is BColoringFailure.MISSING_DOMINATING_VERTEX
            count += 1
        assert count > 0

    def test_all_witnesses_flag(self, matching6):
        colors = [0] * 6
        for u, v in matching6.edges():
            colors[u], colors[v] = 0, 1
        verdict = is_b_coloring(
            matching6, Coloring.from_sequence(colors), all_witnesses=True
        )
        assert verdict.valid
        assert verdict.all_witnesses is not None
        assert all(len(w) == 3 for w in verdict.all_witnesses)

    def test_valid_implies_proper_exhaustive_small(self, k3):
        # every labelling of K_3 and K_2: valid b-coloring implies proper
        from bkneser import build_graph

        k2 = build_graph(KneserParams(1, 0))
        for graph, n in ((k3, 3), (k2, 2)):
            for labels in _all_labellings(n):
                verdict = is_b_coloring(graph, Coloring.from_sequence(labels))
                if verdict.valid:
                    assert is_proper(graph, Coloring.from_sequence(labels))[0]

    def test_verdict_matches_naive_oracle_under_mutation(self, petersen, petersen_exact):
        # recolor any single dominating witness to each alternative color and
        # compare the verdict against the from-scratch naive recomputation
        base = petersen_exact.certificate
        verdict = is_b_coloring(petersen, base, all_witnesses=True)
        assert verdict.valid
        adj = adjacency_sets(petersen)
        for witnesses in verdict.all_witnesses:
            for w in witnesses:
                for new_color in range(base.color_count):
                    if new_color == base.colors[w]:
                        continue
                    mutated = list(base.colors)
                    mutated[w] = new_color
                    c = Coloring.from_sequence(mutated)
                    got = is_b_coloring(petersen, c)
                    assert got.valid == naive_is_b_coloring(adj, list(c.colors))


def _all_labellings(n):
    if n == 0:
        yield []
        return
    for rest in _all_labellings(n - 1):
        for c in range(n):
            yield rest + [c]


class TestClassCore:
    def test_singleton(self):
        s = VertexSubset.from_elements([1, 2], 5)
        assert class_core([s]) == s

    def test_pairwise(self):
        a = VertexSubset.from_elements([1, 2], 5)
        b = VertexSubset.from_elements([2, 3], 5)
        assert class_core([a, b]).elements() == (2,)

    def test_triangle_family_has_empty_core(self):
        # minimal witness that a class with empty core needs three members
        members = [
            VertexSubset.from_elements(e, 3)
            for e in ([1, 2], [2, 3], [1, 3])
        ]
        assert class_core(members).is_empty()
        assert not class_core(members[:2]).is_empty()

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            class_core([])

    @settings(max_examples=50)
    @given(
        st.lists(
            st.integers(min_value=0, max_value=2**8 - 1), min_size=1, max_size=5
        )
    )
    def test_order_independence(self, bit_list):
        members = [VertexSubset(b, 8) for b in bit_list]
        cores = {
            class_core(perm).bits for perm in permutations(members)
        }
        assert len(cores) == 1


class TestAnalyzeProofStructure:
    def test_k3_singletons_tight(self, k3):
        params = KneserParams(1, 1)
        analysis = analyze_proof_structure(
            params, k3, Coloring.from_sequence([0, 1, 2])
        )
        assert analysis.ok
        assert [ca.core.elements() for ca in analysis.classes] == [(1,), (2,), (3,)]
        assert analysis.intersecting_family == (0, 1, 2)
        assert analysis.injection == {0: 1, 1: 2, 2: 3}
        counting = analysis.counting
        assert counting.family_size == 3
        assert counting.class_bound == Fraction(3 + 6, 3)
        assert counting.color_count == 3  # equality case
        assert counting.class_bound_holds and counting.global_bound_holds

    def test_singleton_class_core_is_member(self, petersen, petersen_exact):
        params = KneserParams(2, 1)
        analysis = analyze_proof_structure(
            params, petersen, petersen_exact.certificate
        )
        assert analysis.ok
        assert len(analysis.intersecting_family) <= 5
        for ca in analysis.classes:
            if len(ca.members) == 1:
                assert ca.core == petersen.subsets[ca.members[0]]
                assert ca.color in analysis.intersecting_family
            assert ca.dominating  # valid b-coloring: every class witnessed
            if ca.non_intersecting:
                assert len(ca.members) >= 3

    def test_rejects_non_b_coloring(self, petersen):
        adj = adjacency_sets(petersen)
        colors = next(iter(proper_partitions(adj, 4)))
        with pytest.raises(ValueError, match="not a valid b-coloring"):
            analyze_proof_structure(
                KneserParams(2, 1), petersen, Coloring.from_sequence(colors)
            )

    def test_rejects_foreign_graph(self, k3):
        with pytest.raises(ValueError, match="not generated"):
            analyze_proof_structure(
                KneserParams(2, 1), k3, Coloring.from_sequence([0, 1, 2])
            )

    def test_matching_two_classes(self, matching6):
        result = exact_phi(matching6)
        analysis = analyze_proof_structure(
            KneserParams(2, 0), matching6, result.certificate
        )
        assert analysis.ok
        assert analysis.counting.color_count == 2

    def test_proof_step_names_are_stable(self):
        assert {s.value for s in ProofStep} == {
            "core_disjointness",
            "injection_injective",
            "family_size_bound",
            "nonintersecting_class_size",
            "counting_inequality",
            "global_upper_bound",
        }


class TestKneserClassesIntersect:
    def test_certificate_classes_are_intersecting_families(self, petersen, petersen_exact):
        # independent sets in a Kneser graph are pairwise-intersecting families
        cert = petersen_exact.certificate
        for members in cert.classes():
            for i, u in enumerate(members):
                for v in members[i + 1 :]:
                    a = petersen.subsets[u]
                    b = petersen.subsets[v]
                    assert set(a.elements()) & set(b.elements())
