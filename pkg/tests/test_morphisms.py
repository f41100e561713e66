"""Explicit maps: verification, covers, swaps, component isos, lifting."""

import pytest

from kneserlab.decompose import canonical_colors, delete_colors
from kneserlab.errors import DegenerateCaseError, ParameterError
from kneserlab.graphs import Family, PathSeq, build, girth, graph_from_edges
from kneserlab.morphisms import (
    VertexMap,
    biregular_cross_iso,
    biregular_internal_iso,
    color_swap_iso,
    cover_map,
    embed_middle_in_odd,
    find_isomorphism,
    generic_double_cover,
    is_isomorphism,
    is_morphism,
    kappa,
    kappa_preserves_labels,
    lift_circuit,
    middle_class_to_middle,
    middle_component_iso,
    perm_automorphism,
    regular_component_to_middle,
    verify_cover,
)
from kneserlab.setcore import Block, Perm

b = Block.from_elements


def identity_map(g):
    return VertexMap(g, g, {v: v for v in g.vertices}, kind="isomorphism")


def brute_force_cycle(g, length, start=0):
    """Oracle: find a simple closed walk of the given length by DFS."""
    path = [start]
    seen = {start}

    def dfs():
        if len(path) == length:
            return g.has_edge(path[-1], path[0])
        for y in g.neighbors(path[-1]):
            if y not in seen:
                path.append(y)
                seen.add(y)
                if dfs():
                    return True
                seen.discard(y)
                path.pop()
        return False

    assert dfs(), f"no cycle of length {length}"
    return PathSeq.from_indices(g, path, closed=True)


class TestMorphismPredicates:
    def test_identity(self, odd3):
        assert is_morphism(odd3, odd3, identity_map(odd3))
        assert is_isomorphism(odd3, odd3, identity_map(odd3))

    def test_constant_map_fails(self, odd3):
        const = {v: odd3.vertices[0] for v in odd3.vertices}
        assert not is_morphism(odd3, odd3, const)

    def test_partial_map_rejected(self, odd3):
        partial = {odd3.vertices[0]: odd3.vertices[0]}
        with pytest.raises(ParameterError):
            is_morphism(odd3, odd3, partial)

    def test_size_mismatch_never_isomorphism(self, odd3, middle2):
        mapping = {v: middle2.vertices[0] for v in odd3.vertices}
        assert not is_isomorphism(odd3, middle2, mapping)

    def test_non_injective_morphism_not_isomorphism(self, middle2):
        km = kappa(2, middle_graph=middle2)
        assert is_morphism(middle2, middle2, km)
        squash = dict(km.mapping)
        squash[middle2.vertices[0]] = km.mapping[middle2.vertices[1]]
        assert not is_isomorphism(middle2, middle2, squash)


class TestCoverMap:
    @pytest.mark.parametrize("n,k", [(3, 1), (5, 2), (7, 3), (9, 4)])
    def test_verified_double_cover(self, n, k):
        cm = cover_map(n, k)
        rep = verify_cover(cm, expected_fiber=2)
        assert rep.ok, rep.failures
        assert rep.details["fiber"] == 2

    def test_formula(self):
        cm = cover_map(5, 2)
        assert cm.apply(b([1, 2], 5)) == b([1, 2], 5)
        assert cm.apply(b([1, 2, 3], 5)) == b([4, 5], 5)

    def test_fibers_are_complement_pairs(self):
        cm = cover_map(7, 3)
        for target, fiber in cm.fibers().items():
            assert len(fiber) == 2
            lo, hi = sorted(fiber, key=lambda x: x.card)
            assert hi == lo.complement()
            assert target in fiber or target == lo.complement()

    def test_degenerate_half_split_rejected(self):
        with pytest.raises(DegenerateCaseError):
            cover_map(4, 2)

    def test_kappa_is_not_a_double_cover(self, middle2):
        km = kappa(2, middle_graph=middle2)
        km.kind = "covering"
        rep = verify_cover(km, expected_fiber=2)
        assert not rep.ok  # fiber is 1, not 2


class TestKappa:
    def test_small_example(self):
        assert kappa(2).apply(b([1], 3)) == b([2, 3], 3)

    def test_involution(self, middle4):
        km = kappa(4, middle_graph=middle4)
        assert km.verify()
        twice = km.compose(km)
        assert all(twice.apply(v) == v for v in middle4.vertices)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_label_preserving(self, n):
        rep = kappa_preserves_labels(n)
        assert rep.ok, rep.failures[:3]

    def test_specific_edge_relabeling(self, middle3):
        km = kappa(3, middle_graph=middle3)
        u, v = b([1, 2], 5), b([1, 2, 3], 5)
        assert km.apply(u) == b([3, 4, 5], 5)
        assert km.apply(v) == b([4, 5], 5)


class TestPermAutomorphism:
    def test_transposition_fixes_expected(self, odd3):
        pa = perm_automorphism(odd3, Perm.transposition(5, 1, 2))
        assert pa.verify()
        for fixed in [b([3, 4], 5), b([3, 5], 5), b([4, 5], 5)]:
            assert pa.apply(fixed) == fixed

    def test_full_cycle_fixes_nothing(self, middle3):
        pa = perm_automorphism(middle3, Perm.cycle(5, range(1, 6)))
        assert pa.verify()
        assert all(pa.apply(v) != v for v in middle3.vertices)

    def test_identity(self, odd3):
        pa = perm_automorphism(odd3, Perm.identity(5))
        assert pa.verify()
        assert all(pa.apply(v) == v for v in odd3.vertices)


class TestColorSwap:
    def test_verified_examples(self):
        assert color_swap_iso(3, [4, 5], [1, 2]).verify()
        assert color_swap_iso(4, [5, 6, 7], [1, 6, 7]).verify()

    def test_same_set_is_identity(self, odd3):
        cs = color_swap_iso(3, [4, 5], [4, 5], odd_graph=odd3)
        assert cs.verify()
        assert all(cs.apply(v) == v for v in cs.source.vertices)

    def test_size_mismatch_rejected(self):
        with pytest.raises(ParameterError):
            color_swap_iso(3, [4, 5], [1])


class TestComponentIsos:
    def test_internal_same_size(self):
        vmap = biregular_internal_iso(5, 4, [6], [7])
        assert vmap.verify()
        vmap = biregular_internal_iso(5, 4, [6, 7], [6, 8])
        assert vmap.verify()

    def test_internal_identity(self):
        vmap = biregular_internal_iso(5, 4, [6], [6])
        assert vmap.verify()
        assert all(vmap.apply(v) == v for v in vmap.source.vertices)

    def test_internal_complement_pair_rejected(self):
        with pytest.raises(ParameterError):
            biregular_internal_iso(5, 4, [6, 7], [8, 9])  # T1 = S - T2

    def test_cross_parameter(self):
        assert biregular_cross_iso(4, 2, [], 5, 4, [6]).verify()
        assert biregular_cross_iso(3, 2, [], 4, 4, [4]).verify()

    def test_cross_same_parameters_identity(self):
        vmap = biregular_cross_iso(4, 2, [6], 4, 2, [6])
        assert vmap.verify()
        assert all(vmap.apply(v) == v for v in vmap.source.vertices)

    def test_cross_signature_mismatch_rejected(self):
        with pytest.raises(ParameterError):
            biregular_cross_iso(4, 2, [], 5, 4, [6, 7])


class TestMiddleComponentIso:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_verified(self, m):
        vmap = middle_component_iso(m)
        assert vmap.verify()
        assert vmap.target.n_vertices == vmap.source.n_vertices

    def test_explicit_images(self):
        vmap = middle_component_iso(2)
        assert vmap.apply(b([1, 4], 5)) == b([1], 3)
        assert vmap.apply(b([2, 4], 5)) == b([2], 3)
        assert vmap.apply(b([3, 4], 5)) == b([3], 3)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_embed_is_inverse(self, m):
        emb = embed_middle_in_odd(m)
        assert emb.verify()  # injective morphism
        assert len(set(emb.mapping.values())) == len(emb.mapping)
        iso = middle_component_iso(m)
        for w in emb.source.vertices:
            assert iso.apply(emb.apply(w)) == w

    def test_embed_examples(self):
        emb = embed_middle_in_odd(2)
        assert emb.apply(b([1], 3)) == b([1, 4], 5)
        assert emb.apply(b([1, 2], 3)) == b([3, 5], 5)

    def test_embed_image_is_regular_component(self, odd4):
        emb = embed_middle_in_odd(3, odd_graph=odd4)
        image = {emb.apply(v) for v in emb.source.vertices}
        deleted = delete_colors(odd4, canonical_colors(4, 2))
        from kneserlab.graphs import component_index_sets

        comps = component_index_sets(deleted)
        regular = [
            c for c in comps
            if len(c) == 20
        ]
        assert len(regular) == 1
        assert image == {deleted.vertices[i] for i in regular[0]}

    def test_chain_to_middle_noncanonical_colors(self):
        vmap = regular_component_to_middle(4, b([1, 2], 7), b([1], 7))
        assert vmap.verify()

    def test_middle_class_chain(self, middle4):
        vmap = middle_class_to_middle(4, canonical_colors(4, 2), b([6], 7),
                                      middle_graph=middle4)
        assert vmap.verify()
        assert vmap.target.family == Family.middle_levels(3)


class TestLiftCircuit:
    def test_odd_base_gives_single_doubled(self, odd3, middle3):
        c5 = brute_force_cycle(odd3, 5)
        lift = lift_circuit(c5, middle_graph=middle3)
        assert lift.kind == "single"
        assert lift.circuits[0].length == 10
        assert lift.circuits[0].closed

    def test_even_base_splits_in_two(self, odd3, middle3):
        c6 = brute_force_cycle(odd3, 6)
        lift = lift_circuit(c6, middle_graph=middle3)
        assert lift.kind == "pair"
        assert [c.length for c in lift.circuits] == [6, 6]
        assert lift.antipodal
        first, second = lift.circuits
        assert [x.complement() for x in first.blocks()] == list(second.blocks())
        cm = cover_map(5, 2)
        base = list(c6.blocks())
        for circuit in lift.circuits:
            assert [cm.apply(x) for x in circuit.blocks()] == base

    def test_projection_reproduces_base(self, odd3, middle3):
        cm = cover_map(5, 2)
        c5 = brute_force_cycle(odd3, 5)
        lifted = lift_circuit(c5, middle_graph=middle3).circuits[0]
        projected = [cm.apply(x) for x in lifted.blocks()]
        base = list(c5.blocks())
        assert projected == base + base

    def test_starts_at_lex_smaller_preimage(self, odd3, middle3):
        c5 = brute_force_cycle(odd3, 5)
        lifted = lift_circuit(c5, middle_graph=middle3).circuits[0]
        v0 = c5.blocks()[0]
        lo = min(v0, v0.complement(), key=lambda x: x.lex_key())
        assert lifted.blocks()[0] == lo

    def test_open_walk_rejected(self, odd3):
        p = PathSeq.from_blocks(odd3, [b([1, 2], 5), b([3, 4], 5)], closed=False)
        with pytest.raises(ParameterError):
            lift_circuit(p)

    def test_non_simple_closed_walks_lift_and_project(self, odd3, middle3):
        import random

        cm = cover_map(5, 2)
        rng = random.Random(11)
        walks_found = 0
        for _ in range(200):
            walk = [0]
            for _step in range(rng.randrange(3, 12)):
                walk.append(rng.choice(odd3.neighbors(walk[-1])))
            if walk[-1] != walk[0] or not odd3.has_edge(walk[-2], walk[-1]):
                continue
            walk.pop()  # closing edge is implicit
            if len(set(walk)) == len(walk):
                continue  # want genuinely non-simple walks here
            walks_found += 1
            seq = PathSeq.from_indices(odd3, walk, closed=True)
            lift = lift_circuit(seq, middle_graph=middle3)
            base = list(seq.blocks())
            expect_single = len(walk) % 2 == 1
            assert (lift.kind == "single") == expect_single
            for circuit in lift.circuits:
                assert circuit.closed
                projected = [cm.apply(x) for x in circuit.blocks()]
                assert projected == (base + base if expect_single else base)
        assert walks_found >= 5


class TestGenericDoubleCover:
    def test_triangle_lifts_to_hexagon(self):
        tri = build(Family.kneser(3, 1))
        cover, vmap = generic_double_cover(tri)
        assert cover.n_vertices == 6
        assert cover.n_edges == 6
        assert girth(cover) == 6
        assert verify_cover(vmap, expected_fiber=2).ok

    def test_bipartite_base_splits(self):
        square = graph_from_edges(
            4,
            [b([1], 4), b([2], 4), b([3], 4), b([4], 4)],
            [(0, 1, None), (1, 2, None), (2, 3, None), (3, 0, None)],
        )
        cover, vmap = generic_double_cover(square)
        from kneserlab.graphs import components

        assert [c.n_vertices for c in components(cover)] == [4, 4]
        assert verify_cover(vmap, expected_fiber=2).ok

    def test_odd3_cover_is_middle3(self, odd3, middle3):
        cover, vmap = generic_double_cover(odd3)
        assert verify_cover(vmap, expected_fiber=2).ok
        iso = find_isomorphism(cover, middle3)
        assert iso is not None and iso.verified


class TestFindIsomorphism:
    def test_finds_automorphism_with_pin(self, odd3):
        iso = find_isomorphism(odd3, odd3, pin={0: 5})
        assert iso is not None and iso.verified
        assert iso.apply(odd3.vertices[0]) == odd3.vertices[5]

    def test_distinguishes_non_isomorphic(self):
        hexagon = build(Family.middle_levels(2))
        two_triangles = graph_from_edges(
            6,
            [b([i], 6) for i in range(1, 7)],
            [(0, 1, None), (1, 2, None), (0, 2, None),
             (3, 4, None), (4, 5, None), (3, 5, None)],
        )
        assert find_isomorphism(hexagon, two_triangles) is None

    def test_size_cap_enforced(self, odd4):
        with pytest.raises(ParameterError):
            find_isomorphism(odd4, odd4)
