import random

import pytest
from hypothesis import given, settings

from fatwedge.complexes import (boundary_of_simplex, empty_complex, join,
                                make_complex, simplex)
from fatwedge.homology import GF, QQ, ZZ
from fatwedge.rmac import (build_rmac, cubical_chain_complex, cubical_homology,
                           hochster_identity_check, rmac_face_counts_of_join,
                           rmac_filtration)

from helpers import random_complex
from test_complexes import complexes

C4 = make_complex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


class TestBuild:
    def test_two_points_gives_circle(self):
        C = build_rmac(make_complex(2, [[1], [2]]))
        assert C.counts() == {0: 4, 1: 4}
        prof = cubical_homology(C, ZZ)
        assert prof.free == {1: 1} and not prof.torsion

    def test_four_cycle_gives_torus_cells(self):
        C = build_rmac(C4)
        assert C.counts() == {0: 16, 1: 32, 2: 16}
        f = C.counts()
        assert f[0] - f[1] + f[2] == 0

    def test_full_simplex_gives_full_cube(self):
        for m in (1, 2, 3):
            C = build_rmac(simplex(m))
            assert C.total_faces() == 3 ** m
            assert cubical_homology(C, ZZ).is_trivial()

    def test_empty_complex_gives_isolated_vertices(self):
        C = build_rmac(empty_complex(2))
        assert C.counts() == {0: 4}
        assert cubical_homology(C, ZZ).betti(0) == 3

    def test_size_guardrail(self):
        K = empty_complex(13)
        with pytest.raises(ValueError):
            build_rmac(K)
        assert build_rmac(K, allow_large=True).counts() == {0: 2 ** 13}


class TestFiltration:
    def test_level_zero_is_base_vertex(self):
        assert rmac_filtration(C4, 0).counts() == {0: 1}

    def test_level_one_of_cycle_is_tree(self):
        F = rmac_filtration(C4, 1)
        assert F.counts() == {0: 5, 1: 4}
        assert cubical_homology(F, ZZ).is_trivial()

    def test_top_level_is_whole_complex(self):
        assert rmac_filtration(C4, 4).faces == build_rmac(C4).faces

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            rmac_filtration(C4, 5)

    @given(complexes(max_m=4))
    @settings(max_examples=30, deadline=None)
    def test_monotone_and_union_description(self, K):
        faces = [set()]
        for i in range(K.m + 1):
            Fi = rmac_filtration(K, i)
            flat = {st for cells in Fi.faces.values() for st in cells}
            assert faces[-1] <= flat
            faces.append(flat)
        # top level minus previous level counts the faces of K
        top, prev = faces[-1], faces[-2]
        assert len(top) - len(prev) == K.face_count()

    @given(complexes(max_m=4))
    @settings(max_examples=25, deadline=None)
    def test_level_is_union_over_subsets(self, K):
        # level i is the union of the embedded complexes of the full
        # subcomplexes K_I over |I| = i; the embedding pins [m] - I at -1
        from itertools import combinations
        from fatwedge.complexes import full_subcomplex, mask_of, verts
        for i in {1, K.m - 1, K.m}:
            if not 1 <= i <= K.m:
                continue
            want = set()
            for I in combinations(range(1, K.m + 1), i):
                imask = mask_of(I)
                rest = ((1 << K.m) - 1) ^ imask
                sub = full_subcomplex(K, I)
                lift = sorted(I)
                for cells in build_rmac(sub).faces.values():
                    for s, t in cells:
                        s_lift = mask_of(lift[v - 1] for v in verts(s))
                        t_lift = mask_of(lift[v - 1] for v in verts(t))
                        want.add((s_lift | rest, t_lift | rest))
            Fi = rmac_filtration(K, i)
            got = {st for cells in Fi.faces.values() for st in cells}
            assert got == want


class TestHomology:
    def test_torus(self):
        prof = cubical_homology(build_rmac(C4), ZZ)
        assert prof.free == {1: 2, 2: 1} and not prof.torsion

    def test_spheres(self):
        for m in (2, 3, 4, 5):
            prof = cubical_homology(build_rmac(boundary_of_simplex(m)), ZZ)
            assert prof.free == {m - 1: 1} and not prof.torsion

    def test_single_vertex_filtration(self):
        prof = cubical_homology(rmac_filtration(C4, 0), ZZ)
        assert prof.is_trivial()

    def test_boundary_closed_and_dd_zero(self):
        C = build_rmac(C4)
        assert C.is_boundary_closed()
        cubical_chain_complex(C)  # raises if boundary squared is nonzero


class TestProductRule:
    def test_face_counts_multiply(self):
        two = make_complex(2, [[1], [2]])
        assert rmac_face_counts_of_join(two, two)
        assert rmac_face_counts_of_join(C4, two)

    @given(complexes(max_m=3), complexes(max_m=3))
    @settings(max_examples=20, deadline=None)
    def test_join_kunneth_over_Q(self, K1, K2):
        pj = cubical_homology(
            build_rmac(join(K1, K2), allow_large=True), QQ)
        p1 = cubical_homology(build_rmac(K1), QQ)
        p2 = cubical_homology(build_rmac(K2), QQ)
        b1 = {q: p1.betti(q) for q in range(K1.m + 1)}
        b2 = {q: p2.betti(q) for q in range(K2.m + 1)}
        b1[0] += 1
        b2[0] += 1  # unreduced Kunneth needs total H_0
        for n in range(K1.m + K2.m + 1):
            want = sum(b1.get(a, 0) * b2.get(n - a, 0) for a in range(n + 1))
            got = pj.betti(n) + (1 if n == 0 else 0)
            assert got == want


class TestHochsterIdentity:
    def test_four_cycle(self):
        rep = hochster_identity_check(C4, ZZ)
        assert rep.equal
        assert rep.rhs.betti(1) == 2 and rep.rhs.betti(2) == 1

    def test_simplex(self):
        rep = hochster_identity_check(simplex(3), ZZ)
        assert rep.equal and rep.lhs.is_trivial()

    def test_rp2_with_torsion(self):
        RP2 = make_complex(6, [[2, 3, 4], [3, 4, 5], [1, 3, 5], [1, 2, 5],
                               [2, 5, 6], [2, 3, 6], [1, 3, 6], [1, 4, 6],
                               [1, 2, 4], [4, 5, 6]])
        rep = hochster_identity_check(RP2, ZZ)
        assert rep.equal
        assert rep.lhs.torsion_at(2) == (2,)

    def test_random_over_fields(self):
        rng = random.Random(21)
        for _ in range(15):
            K = random_complex(rng, max_m=5)
            for ring in (ZZ, GF(2), QQ):
                assert hochster_identity_check(K, ring).equal
