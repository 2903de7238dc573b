import random

import pytest
from hypothesis import given, settings, strategies as st

from fatwedge.complexes import (alexander_dual, boundary_of_simplex,
                                empty_complex, full_subcomplex, join,
                                make_complex, simplex, verts, with_ground)
from fatwedge.corpus import berglund_complex
from fatwedge.homology import (GF, QQ, ZZ, dK, hodim,
                               induced_map_on_homology, is_acyclic,
                               is_i_acyclic, is_zero_on_homology,
                               reduced_homology)

from test_complexes import complexes

C4 = make_complex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
RP2 = make_complex(6, [[2, 3, 4], [3, 4, 5], [1, 3, 5], [1, 2, 5], [2, 5, 6],
                       [2, 3, 6], [1, 3, 6], [1, 4, 6], [1, 2, 4], [4, 5, 6]])


class TestRings:
    def test_prime_checked(self):
        with pytest.raises(ValueError):
            GF(4)
        with pytest.raises(ValueError):
            GF(1)
        assert repr(GF(7)) == "Z/7"

    def test_field_flags(self):
        assert not ZZ.is_field
        assert QQ.is_field and GF(2).is_field


class TestReducedHomology:
    def test_circle(self):
        prof = reduced_homology(boundary_of_simplex(3), ZZ)
        assert prof.betti(1) == 1 and prof.nonzero_degrees() == (1,)

    def test_rp2(self):
        prof = reduced_homology(RP2, ZZ)
        assert prof.free == {} and prof.torsion == {1: (2,)}
        assert reduced_homology(RP2, QQ).is_trivial()
        p2 = reduced_homology(RP2, GF(2))
        assert p2.betti(1) == 1 and p2.betti(2) == 1

    def test_empty_complex(self):
        prof = reduced_homology(empty_complex(3), ZZ)
        assert prof.betti(-1) == 1 and prof.nonzero_degrees() == (-1,)

    def test_spheres(self):
        for m in (2, 3, 4, 5):
            prof = reduced_homology(boundary_of_simplex(m), ZZ)
            assert prof.free == {m - 2: 1} and not prof.torsion

    def test_simplex_acyclic(self):
        for ring in (ZZ, QQ, GF(2), GF(5)):
            assert is_acyclic(simplex(4), ring)

    @given(complexes(max_m=5))
    @settings(max_examples=50, deadline=None)
    def test_euler_characteristic(self, K):
        prof = reduced_homology(K, QQ)
        f = K.f_vector()
        chi_chain = sum((-1) ** (d - 1) * f[d] for d in range(len(f)))
        chi_hom = sum((-1) ** q * prof.betti(q)
                      for q in prof.nonzero_degrees())
        assert chi_chain == chi_hom

    @given(complexes(max_m=5), st.sampled_from([2, 3, 5]))
    @settings(max_examples=50, deadline=None)
    def test_universal_coefficients(self, K, p):
        z = reduced_homology(K, ZZ)
        fp = reduced_homology(K, GF(p))
        for q in range(-1, K.dim + 1):
            want = (z.betti(q)
                    + sum(1 for d in z.torsion_at(q) if d % p == 0)
                    + sum(1 for d in z.torsion_at(q - 1) if d % p == 0))
            assert fp.betti(q) == want

    @given(complexes(max_m=4), complexes(max_m=3), st.sampled_from([QQ, GF(2)]))
    @settings(max_examples=40, deadline=None)
    def test_kunneth_for_joins(self, K1, K2, ring):
        pj = reduced_homology(join(K1, K2), ring)
        p1 = reduced_homology(K1, ring)
        p2 = reduced_homology(K2, ring)
        for n in range(-1, K1.dim + K2.dim + 3):
            want = sum(p1.betti(a) * p2.betti(n - 1 - a)
                       for a in range(-1, n + 2))
            assert pj.betti(n) == want


class TestAcyclicity:
    def test_two_points(self):
        two = make_complex(2, [[1], [2]])
        assert is_i_acyclic(two, ZZ, -1)
        assert not is_i_acyclic(two, ZZ, 0)

    def test_empty_complex_is_not_minus_one_acyclic(self):
        assert not is_i_acyclic(empty_complex(2), ZZ, -1)

    def test_berglund_acyclic(self):
        assert is_acyclic(berglund_complex(), ZZ)


class TestHodim:
    def test_rp2(self):
        assert hodim(RP2) == 2
        assert dK(RP2) == 2

    def test_simplex_sentinel(self):
        assert hodim(simplex(3)) is None
        assert dK(simplex(3)) is None

    def test_berglund(self):
        assert dK(berglund_complex()) == 4

    def test_circle(self):
        assert hodim(boundary_of_simplex(3)) == 1


class TestAlexanderDuality:
    @given(complexes(max_m=5), st.sampled_from([QQ, GF(2), GF(3)]))
    @settings(max_examples=60, deadline=None)
    def test_field_duality(self, K, ring):
        try:
            dual = alexander_dual(K)
        except ValueError:
            return
        s = K.m
        pk = reduced_homology(K, ring)
        pd = reduced_homology(dual, ring)
        for i in range(-1, s + 1):
            assert pk.betti(i) == pd.betti(s - i - 3)

    def test_integral_duality_with_torsion(self):
        # RP2 vs its dual over [6]: H~_i(K) = H~^{3-i}(K^dual)
        dual = alexander_dual(RP2)
        co = reduced_homology(dual, ZZ).cohomology()
        prof = reduced_homology(RP2, ZZ)
        for i in range(-1, 7):
            assert prof.betti(i) == co.betti(6 - i - 3)
            assert prof.torsion_at(i) == co.torsion_at(6 - i - 3)


class TestInducedMaps:
    def test_identity_map(self):
        m = induced_map_on_homology(C4, C4, ZZ, 1)
        assert m.matrix == ((1,),) or m.matrix == ((-1,),)

    def test_two_points_merge_in_cycle(self):
        A = make_complex(4, [[1], [3]])
        m = induced_map_on_homology(A, C4, QQ, 0)
        assert m.is_zero
        assert m.source_orders == (0,)

    def test_relabeled_cycle_iso(self):
        B = join(make_complex(2, [[1], [2]]), make_complex(2, [[1], [2]]))
        vmap = {1: 1, 2: 3, 3: 2, 4: 4}
        m = induced_map_on_homology(C4, B, ZZ, 1, vertex_map=vmap)
        assert len(m.matrix) == 1 and abs(m.matrix[0][0]) == 1
        assert not is_zero_on_homology(C4, B, ZZ, vertex_map=vmap)

    def test_torsion_detected_over_Z(self):
        # RP2 into the cone over RP2 kills everything
        cone7 = make_complex(7, [list(verts(f)) + [7] for f in RP2.facets])
        assert is_zero_on_homology(RP2, cone7, ZZ)

    def test_non_simplicial_map_rejected(self):
        A = make_complex(2, [[1, 2]])
        B = make_complex(2, [[1], [2]])
        with pytest.raises(ValueError):
            induced_map_on_homology(A, B, ZZ, 0)

    def test_subcomplex_inclusion_rank(self):
        # boundary of a triangle inside the full 2-skeleton of delta4
        A = with_ground(boundary_of_simplex(3), 4)
        B = simplex(4).skeleton(1)
        m = induced_map_on_homology(A, B, QQ, 1)
        assert not m.is_zero


class TestNeighborlyAcyclicity:
    @given(complexes(max_m=5))
    @settings(max_examples=30, deadline=None)
    def test_k_neighborly_subcomplexes_are_low_acyclic(self, K):
        from fatwedge.complexes import max_neighborliness
        k = max_neighborliness(K)
        if k < 1:
            return
        for imask in range(1, 1 << K.m):
            sub = full_subcomplex(K, verts(imask))
            assert is_i_acyclic(sub, ZZ, k - 1)
