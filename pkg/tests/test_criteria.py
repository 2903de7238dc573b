import random

from hypothesis import given, settings

from fatwedge.complexes import (alexander_dual, boundary_of_simplex,
                                make_complex, simplex, skeleton_of_simplex,
                                verts)
from fatwedge.corpus import berglund_complex
from fatwedge.criteria import (collapse_search, fill_search,
                               filling_from_dual_shelling, is_cm,
                               is_collapse_sequence, is_dual_scm,
                               is_dual_shellable, is_homology_fillable, is_scm,
                               is_shelling, is_strong_gcd_order,
                               is_weak_shelling, shelling_search,
                               spanning_facets, strong_gcd_search,
                               weak_shelling_search)
from fatwedge.homology import QQ, ZZ, is_acyclic

from helpers import random_complex
from test_complexes import complexes

C4 = make_complex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
PATH = make_complex(4, [[1, 2], [2, 3], [3, 4]])
TWO_EDGES = make_complex(4, [[1, 2], [3, 4]])
THREE_PTS = make_complex(3, [[1], [2], [3]])
RP2 = make_complex(6, [[2, 3, 4], [3, 4, 5], [1, 3, 5], [1, 2, 5], [2, 5, 6],
                       [2, 3, 6], [1, 3, 6], [1, 4, 6], [1, 2, 4], [4, 5, 6]])


class TestShelling:
    def test_skeleta_of_simplices_are_shellable(self):
        for m, k in ((4, 1), (5, 1), (5, 2), (4, 2)):
            res = shelling_search(skeleton_of_simplex(m, k))
            assert res.found
            assert is_shelling(skeleton_of_simplex(m, k), res.certificate.facets)

    def test_four_cycle_shellable(self):
        res = shelling_search(C4)
        assert res.found and is_shelling(C4, res.certificate.facets)

    def test_two_disjoint_edges_not_shellable(self):
        assert shelling_search(TWO_EDGES).status == "none"

    def test_rp2_dual_not_shellable(self):
        assert shelling_search(alexander_dual(RP2)).status == "none"

    def test_budget_exhaustion_reported(self):
        res = shelling_search(alexander_dual(RP2), budget=5)
        assert res.status == "exhausted"

    def test_discrete_points_shellable(self):
        assert shelling_search(THREE_PTS).found

    def test_spanning_facets_three_points(self):
        res = shelling_search(THREE_PTS)
        span = spanning_facets(THREE_PTS, res.certificate.facets)
        assert len(span) == 2  # H~_0 has rank 2

    def test_spanning_facets_of_sphere(self):
        B = boundary_of_simplex(3)
        res = shelling_search(B)
        span = spanning_facets(B, res.certificate.facets)
        assert len(span) == 1  # one H~_1 class


class TestSCM:
    def test_four_cycle_scm(self):
        assert is_scm(C4, QQ)
        assert is_cm(C4, QQ)

    def test_two_disjoint_edges_not_scm(self):
        assert not is_scm(TWO_EDGES, QQ)

    def test_berglund_dual_not_scm_over_Z(self):
        assert not is_dual_scm(berglund_complex(), ZZ)

    def test_nonpure_scm_is_not_cm(self):
        K = make_complex(4, [[1, 2, 3], [3, 4]])
        assert is_scm(K, QQ)
        assert not is_cm(K, QQ)

    def test_full_simplex_vacuous(self):
        assert is_dual_scm(simplex(3), ZZ)
        assert is_dual_shellable(simplex(3)).found

    def test_shellable_implies_scm_over_Z(self):
        rng = random.Random(8)
        checked = 0
        for _ in range(40):
            K = random_complex(rng, max_m=5)
            res = shelling_search(K, budget=20000)
            if res.found:
                checked += 1
                assert is_scm(K, ZZ)
        assert checked > 10


class TestCollapse:
    def test_simplex_collapses(self):
        res = collapse_search(simplex(4))
        assert res.found
        assert is_collapse_sequence(simplex(4), res.certificate)

    def test_path_collapses(self):
        res = collapse_search(PATH)
        assert res.found and is_collapse_sequence(PATH, res.certificate)

    def test_cycle_has_no_free_face(self):
        assert collapse_search(C4).status == "none"

    def test_collapsible_implies_acyclic(self):
        rng = random.Random(17)
        for _ in range(30):
            K = random_complex(rng, max_m=5)
            if collapse_search(K, budget=30000).found:
                assert is_acyclic(K, ZZ)


class TestFill:
    def test_boundary_fills_to_simplex(self):
        for m in (2, 3, 4):
            res = fill_search(boundary_of_simplex(m))
            assert res.found
            assert res.certificate.nonface_tuples() == [tuple(range(1, m + 1))]

    def test_four_cycle_mod_two_refuted(self):
        assert fill_search(C4, "p_acyclic", p=2).status == "refuted"

    def test_four_cycle_contractible_refuted(self):
        assert fill_search(C4).status == "refuted"

    def test_three_points_filling(self):
        res = fill_search(THREE_PTS)
        assert res.found
        cert = res.certificate
        assert len(cert.nonfaces) == 2     # two edges complete a tree
        filled = make_complex(3, [list(verts(f)) for f in cert.nonfaces]
                              + [[1], [2], [3]])
        assert is_acyclic(filled, ZZ)

    def test_full_simplex_trivially_filled(self):
        res = fill_search(simplex(3))
        assert res.found and res.certificate.nonfaces == ()


class TestHomologyFillable:
    def test_rp2_refuted_at_two(self):
        verdict = is_homology_fillable(RP2)
        assert verdict.status == "refuted"
        assert verdict.components[0].refuted_at == "p=2"

    def test_path_certified_with_empty_filling(self):
        verdict = is_homology_fillable(PATH)
        assert verdict.certified
        assert verdict.components[0].fillings_by_prime[0] == ("Q", [])

    def test_dual_shellable_member_certified(self):
        assert is_homology_fillable(skeleton_of_simplex(4, 1)).certified

    def test_four_cycle_refuted(self):
        assert is_homology_fillable(C4).status == "refuted"

    def test_disconnected_components_handled(self):
        verdict = is_homology_fillable(TWO_EDGES)
        assert verdict.certified and len(verdict.components) == 2


class TestGcdAndWeakShelling:
    def test_berglund_found(self):
        res = strong_gcd_search(berglund_complex())
        assert res.found
        assert is_strong_gcd_order(berglund_complex(), res.certificate.nonfaces)

    def test_boundary_vacuous(self):
        assert strong_gcd_search(boundary_of_simplex(4)).found

    def test_four_cycle_none(self):
        assert strong_gcd_search(C4).status == "none"

    @given(complexes(max_m=5))
    @settings(max_examples=50, deadline=None)
    def test_duality_bridge(self, K):
        try:
            dual = alexander_dual(K)
        except ValueError:
            return
        a = strong_gcd_search(K)
        b = weak_shelling_search(dual)
        assert a.found == b.found
        if a.found:
            # reversed complements of a strong gcd order form a weak shelling
            full = (1 << K.m) - 1
            rev = tuple(full ^ M for M in reversed(a.certificate.nonfaces))
            assert is_weak_shelling(dual, rev)


class TestImplicationChain:
    def test_dual_shellable_implies_chain(self):
        # the chain of implications assumes every element of [m] is a vertex;
        # ghost vertices give empty full subcomplexes whose degree -1 classes
        # break Golodness while the dual stays shellable
        rng = random.Random(23)
        checked = 0
        for _ in range(60):
            K = random_complex(rng, max_m=5)
            if K.support != (1 << K.m) - 1:
                continue
            res = is_dual_shellable(K, budget=20000)
            if not res.found:
                continue
            checked += 1
            assert is_dual_scm(K, ZZ)
            assert strong_gcd_search(K).found
            assert is_homology_fillable(K).certified
            cert = filling_from_dual_shelling(K, res.certificate)
            assert cert is not None
        assert checked > 10
