"""Identities, rotation orbits, necklaces, independent-orbit excision."""

import pytest

from kneserlab.catalan import (
    coxeter_excision,
    independent_orbit_excision,
    necklace_of,
    orbits,
    remainder_size_form,
    rotation,
    verify_difference_identity,
    verify_size_identity,
)
from kneserlab.errors import ParameterError
from kneserlab.graphs import degree_profile
from kneserlab.setcore import Block, apply_perm, binomial, catalan

b = Block.from_elements


class TestIdentities:
    @pytest.mark.parametrize("n", list(range(1, 31)))
    def test_size_identity_exact(self, n):
        assert verify_size_identity(n).ok

    def test_size_identity_values(self):
        assert verify_size_identity(3).details["vertices"] == 10 == 5 * 2
        assert verify_size_identity(4).details["vertices"] == 35 == 7 * 5
        r = verify_size_identity(12)
        assert r.details["vertices"] == binomial(23, 11) == 23 * 58786

    @pytest.mark.parametrize("n", list(range(1, 31)))
    def test_difference_identity_exact(self, n):
        assert verify_difference_identity(n).ok

    def test_difference_identity_values(self):
        r = verify_difference_identity(3)
        assert (r.details["middle"], r.details["remainder"]) == (20, 15)
        assert r.details["catalan"] == 5
        assert verify_difference_identity(1).details["catalan"] == 1
        assert verify_difference_identity(10).details["catalan"] == 16796

    def test_structural_branch_builds_graphs(self):
        r = verify_difference_identity(3)
        assert r.details["built_middle"] == 20
        assert r.details["built_remainder"] == 15

    @pytest.mark.parametrize("n", list(range(1, 21)))
    def test_remainder_form(self, n):
        assert remainder_size_form(n).ok

    def test_remainder_form_values(self):
        assert remainder_size_form(2).details["size"] == 4
        assert remainder_size_form(4).details["size"] == 56 == binomial(8, 3)


class TestOrbits:
    @pytest.mark.parametrize(
        "n,count",
        [(3, 2), (4, 5), (5, 14), (6, 42), (7, 132), (8, 429)],
    )
    def test_counts_match_catalan(self, n, count):
        orb = orbits(n)
        assert len(orb.orbits) == count == catalan(n - 1)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_orbits_partition_with_full_size(self, n):
        orb = orbits(n)
        all_ixs = sorted(i for orbit in orb.orbits for i in orbit)
        assert all_ixs == list(range(orb.graph.n_vertices))
        assert set(orb.sizes) == {2 * n - 1}

    def test_rotation_acts_as_shift(self):
        sigma = rotation(3)
        assert apply_perm(sigma, b([1, 2], 5)) == b([2, 3], 5)
        assert apply_perm(sigma, b([4, 5], 5)) == b([1, 5], 5)

    def test_small_n_rejected(self):
        with pytest.raises(ParameterError):
            orbits(1)


class TestNecklaces:
    def test_examples(self):
        assert necklace_of(b([1, 2], 5), 3) == "00111"
        assert necklace_of(b([1, 3], 5), 3) == "01011"

    def test_weight_is_n(self):
        s = necklace_of(b([2, 4, 6, 8], 9), 5)
        assert s.count("1") == 5
        assert len(s) == 9

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_separates_orbits_exactly(self, n):
        orb = orbits(n)
        g = orb.graph
        canon_by_orbit = []
        for orbit in orb.orbits:
            forms = {necklace_of(g.vertices[i], n) for i in orbit}
            assert len(forms) == 1  # constant on the orbit
            canon_by_orbit.append(forms.pop())
        assert len(set(canon_by_orbit)) == len(orb.orbits)

    def test_wrong_vertex_rejected(self):
        with pytest.raises(ParameterError):
            necklace_of(b([1, 2, 3], 5), 3)


class TestExcision:
    def test_at_three_nothing_to_delete(self):
        rep = independent_orbit_excision(3)
        assert rep.ok
        assert rep.details["pinned_orbit_count"] == 0
        assert rep.details["cubic_outcomes"] == 1  # the graph itself

    def test_at_four_coxeter_fingerprint(self):
        graph, rep = coxeter_excision(4)
        assert rep.ok, rep.failures
        assert graph.n_vertices == 28
        assert graph.n_edges == 42
        assert degree_profile(graph).signature == ("regular", 3)
        from kneserlab.graphs import girth

        assert girth(graph) == 7

    def test_at_four_survey(self):
        rep = independent_orbit_excision(4)
        assert rep.ok
        assert rep.details["pinned_orbit_count"] == 1
        assert rep.details["independent_unions"] >= 1
        assert rep.details["cubic_outcomes"] >= 1
        assert rep.details["cubic_fingerprint"] == (28, 42, 7)

    def test_at_five_reports_without_asserting(self):
        rep = independent_orbit_excision(5)
        assert rep.ok
        assert rep.details["pinned_orbit_count"] == 4
        assert rep.details["independent_unions"] == 0

    def test_orbit_deletion_accounting(self):
        # deleting j independent orbits removes j(2n-1) vertices and
        # j*n*(2n-1) edges
        for n in (3, 4, 5):
            orb = orbits(n)
            g = orb.graph
            from kneserlab.catalan import _deletion_profile, _is_independent

            for orbit in orb.orbits:
                if not _is_independent(g, list(orbit)):
                    continue
                prof = _deletion_profile(g, orbit)
                assert prof["vertices"] == g.n_vertices - (2 * n - 1)
                assert prof["edges"] == g.n_edges - n * (2 * n - 1)

    def test_below_domain_rejected(self):
        with pytest.raises(ParameterError):
            independent_orbit_excision(2)


class TestCoxeterTransitivitySpotCheck:
    def test_automorphisms_carry_sampled_pairs(self):
        graph, rep = coxeter_excision(4)
        assert rep.ok
        from kneserlab.morphisms import find_isomorphism

        for target in (5, 13, 27):
            iso = find_isomorphism(
                graph, graph, pin={0: target}, max_vertices=28
            )
            assert iso is not None and iso.verified
