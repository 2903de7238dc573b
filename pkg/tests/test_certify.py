import random

import pytest

from fatwedge.certify import (RULE_DIM, RULE_DUAL_SCM, RULE_DUAL_SHELLABLE,
                              RULE_FILLABLE, RULE_FLAG, RULE_HOMOLOGY_FILLABLE,
                              RULE_LOW_DUAL, RULE_NEIGHBORLY, RULE_NON_GOLOD,
                              SpacePoincare, bbcg_summands,
                              certify_fwf_trivial, golod_report)
from fatwedge.complexes import (boundary_of_simplex, is_chordal, make_complex,
                                simplex, skeleton_of_simplex)
from fatwedge.corpus import berglund_complex, corpus_names, load
from fatwedge.homology import ZZ
from fatwedge.rmac import build_rmac, cubical_homology

from helpers import random_graph

C4 = make_complex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
PATH = make_complex(4, [[1, 2], [2, 3], [3, 4]])
RP2 = make_complex(6, [[2, 3, 4], [3, 4, 5], [1, 3, 5], [1, 2, 5], [2, 5, 6],
                       [2, 3, 6], [1, 3, 6], [1, 4, 6], [1, 2, 4], [4, 5, 6]])


class TestCertify:
    def test_simplex_by_dimension(self):
        cert = certify_fwf_trivial(simplex(4))
        assert cert.verdict == "trivial" and cert.rule == RULE_DIM

    def test_rp2_by_neighborliness(self):
        cert = certify_fwf_trivial(RP2)
        assert cert.verdict == "trivial" and cert.rule == RULE_NEIGHBORLY
        assert cert.evidence == {"dK": 2, "required_neighborliness": 1,
                                 "max_neighborliness": 1}

    def test_berglund_by_neighborliness(self):
        cert = certify_fwf_trivial(berglund_complex())
        assert cert.verdict == "trivial" and cert.rule == RULE_NEIGHBORLY
        assert cert.evidence["dK"] == 4

    def test_four_cycle_nontrivial_with_witness(self):
        cert = certify_fwf_trivial(C4)
        assert cert.verdict == "nontrivial" and cert.rule == RULE_NON_GOLOD
        assert not cert.golod.golod
        assert cert.golod.join_over_Z.witness == ((1, 3), (2, 4), 1)

    def test_path_by_flag_chordal(self):
        cert = certify_fwf_trivial(PATH)
        assert cert.rule == RULE_FLAG

    def test_skeleton_by_low_dual_dim(self):
        cert = certify_fwf_trivial(skeleton_of_simplex(5, 1))
        assert cert.verdict == "trivial" and cert.rule == RULE_LOW_DUAL

    def test_soundness_assertion_runs(self):
        cert = certify_fwf_trivial(RP2, check_soundness=True)
        assert cert.golod is not None and cert.golod.golod

    def test_all_rules_mode_monotone(self):
        # whenever the dual-shellable rule fires, the weaker rules 6-8 fire too
        for name in corpus_names():
            K = load(name).complex()
            if K.m > 6:
                continue
            cert = certify_fwf_trivial(K, all_rules=True, check_soundness=False)
            run = dict(cert.rules_run)
            if run[RULE_DUAL_SHELLABLE] == "fired":
                assert run[RULE_DUAL_SCM] == "fired"
                assert run[RULE_FILLABLE] == "fired"
                assert run[RULE_HOMOLOGY_FILLABLE] == "fired"


class TestGolodReport:
    def test_chordal_graph(self):
        rep = golod_report(PATH)
        assert rep.golod and rep.oracles_agree

    def test_four_cycle(self):
        rep = golod_report(C4)
        assert not rep.golod and rep.oracles_agree
        assert rep.witness_text is not None

    def test_berglund_primes(self):
        rep = golod_report(berglund_complex())
        assert rep.golod
        assert set(rep.primes) >= {2, 3}

    def test_rp2_includes_torsion_prime(self):
        rep = golod_report(RP2)
        assert 2 in rep.primes and rep.golod


class TestSpacePoincare:
    def test_sphere(self):
        assert SpacePoincare.sphere(0).betti == (1,)
        assert SpacePoincare.sphere(2).betti == (0, 0, 1)

    def test_parse(self):
        assert SpacePoincare.from_string("t^2").betti == (0, 0, 1)
        assert SpacePoincare.from_string("1+2t^3").betti == (1, 0, 0, 2)
        assert SpacePoincare.from_string("2*t").betti == (0, 2)
        with pytest.raises(ValueError):
            SpacePoincare.from_string("t^-1")

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            SpacePoincare((1, -1))


class TestBBCG:
    def test_boundary_d2_single_circle(self):
        rep = bbcg_summands(boundary_of_simplex(2), [SpacePoincare.sphere(0)] * 2)
        assert rep.sphere_list == (1,)
        assert [s.subset for s in rep.summands] == [(1, 2)]
        assert rep.desuspended

    def test_four_cycle_with_disk_pair(self):
        rep = bbcg_summands(C4, [SpacePoincare.sphere(1)] * 4)
        assert rep.sphere_list == (3, 3, 6)
        assert rep.wedge_string() == "S^3 v S^3 v S^6"
        assert not rep.desuspended

    def test_rp2_pattern(self):
        rep = bbcg_summands(RP2, [SpacePoincare.sphere(0)] * 6)
        assert rep.desuspended
        assert rep.sphere_list is None  # torsion in the top summand
        S = {(3, 5, 6), (3, 4, 6), (2, 4, 6), (2, 4, 5), (2, 3, 5), (1, 5, 6),
             (1, 4, 5), (1, 3, 4), (1, 2, 6), (1, 2, 3)}
        by_subset = {s.subset: s.profile for s in rep.summands}
        # ten sphere summands from the missing triangles, suspended once
        for I in S:
            assert by_subset[I].free == {2: 1} and not by_subset[I].torsion
        # every 4- and 5-element subset contributes one suspended circle
        import itertools
        for size in (4, 5):
            for I in itertools.combinations(range(1, 7), size):
                assert by_subset[I].free == {2: 1} and not by_subset[I].torsion
        top = by_subset[(1, 2, 3, 4, 5, 6)]
        assert top.free == {} and top.torsion == {2: (2,)}
        assert len(rep.summands) == 10 + 15 + 6 + 1

    def test_aggregate_matches_rmac_homology(self):
        for K in (C4, RP2, boundary_of_simplex(4)):
            rep = bbcg_summands(K, [SpacePoincare.sphere(0)] * K.m, ZZ)
            assert rep.aggregate == cubical_homology(build_rmac(K), ZZ)

    def test_dual_scm_inputs_yield_sphere_lists(self):
        from fatwedge.criteria import is_dual_scm
        checked = 0
        for name in corpus_names():
            K = load(name).complex()
            if K.m > 6 or not is_dual_scm(K, ZZ):
                continue
            checked += 1
            for n in (1, 2):
                rep = bbcg_summands(K, [SpacePoincare.sphere(n - 1)] * K.m, ZZ)
                assert rep.sphere_list is not None, name
        assert checked >= 8

    def test_generic_betti_polynomials(self):
        rep = bbcg_summands(boundary_of_simplex(2),
                            [SpacePoincare.from_string("t + t^3")] * 2)
        # join of two copies of (S^1 v S^3): degrees 1+1+1, 1+3+1, 3+3+1
        assert rep.aggregate.free == {3: 1, 5: 2, 7: 1}

    def test_wrong_space_count(self):
        with pytest.raises(ValueError):
            bbcg_summands(C4, [SpacePoincare.sphere(0)] * 3)


class TestGraphGolodEqualsChordal:
    def test_small_sweep(self):
        rng = random.Random(77)
        for _ in range(15):
            G = random_graph(rng, max_m=6)
            assert golod_report(G).golod == is_chordal(G)
