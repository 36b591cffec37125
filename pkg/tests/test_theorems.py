from __future__ import annotations

import pytest

from braid_monodromy.braids import BraidWord, braids_equal, expand_band
from braid_monodromy.hurwitz import HurwitzTuple, periodic_tuple
from braid_monodromy.theorems import (
    CapExceeded,
    GeneratorItem,
    GeneratorSet,
    anbraids_generators,
    delta_word,
    exponent_table,
    fullbraid_generators,
    prop_hurwitz_generators,
    theorem1_generators,
    theorem2_generators,
    verify_delta_conjugation,
    verify_redundancy,
    verify_stabilization,
)


def exps(gs):
    return {it.pair: it.exponent for it in gs if it.pair}


class TestTheorem1:
    def test_n1_all_ones(self):
        gs = theorem1_generators(1, 3)
        assert set(exps(gs).values()) == {1}
        # contains every Artin generator, so the set generates Br_3
        artin = {it.pair for it in gs if it.word.letters == (it.pair[0],)}
        assert artin == {(1, 2), (2, 3)}

    def test_n2_k2_table(self):
        e = exps(theorem1_generators(2, 2))
        assert e[(1, 3)] == e[(2, 4)] == 1
        assert e[(1, 2)] == e[(2, 3)] == e[(3, 4)] == e[(1, 4)] == 2
        assert not theorem1_generators(2, 2).by_label("thm1.ii")

    def test_n3_k1_table(self):
        e = exps(theorem1_generators(3, 1))
        assert e == {(1, 2): 3, (2, 3): 3, (1, 3): 2}

    def test_item_count(self):
        assert len(theorem1_generators(3, 3)) == 9 * 8 // 2

    def test_labels_follow_exponent(self):
        for it in theorem1_generators(3, 2):
            assert it.label == {1: "thm1.i", 3: "thm1.ii", 2: "thm1.iii"}[it.exponent]

    def test_table_function(self):
        assert exponent_table(1, 4, 3) == 1
        assert exponent_table(3, 4, 3) == 2  # residues {0, 1}
        assert exponent_table(1, 2, 3) == 3

    def test_n2_table_disagrees_with_a2_model(self):
        # for n = 2 the residues of adjacent strands are always {0, 1}, so the
        # table gives sigma_12^2 where the local A_2 model has sigma_1^3
        assert theorem1_generators(2, 1).items[0].word.letters == (1, 1)
        assert anbraids_generators(2).items[0].word.letters == (1, 1, 1)
        assert not verify_stabilization(theorem1_generators(2, 1), periodic_tuple(2, 1)).passed

    def test_matches_anbraids_when_k1(self):
        for n in (3, 4, 5):
            a = theorem1_generators(n, 1)
            b = anbraids_generators(n)
            pairs = {it.pair: it.word for it in b}
            assert {it.pair for it in a} == set(pairs)
            for it in a:
                assert braids_equal(it.word, pairs[it.pair])

    @pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2), (3, 3), (5, 3), (4, 4)])
    def test_stabilizes_periodic(self, n, k):
        assert verify_stabilization(theorem1_generators(n, k), periodic_tuple(n, k)).passed

    def test_n1_stabilizes(self):
        for k in range(1, 9):
            assert verify_stabilization(theorem1_generators(1, k), periodic_tuple(1, k)).passed

    def test_band_chirality_fails_for_n3(self):
        rep = verify_stabilization(theorem1_generators(3, 2, "band"), periodic_tuple(3, 2))
        assert not rep.passed


class TestTheorem2:
    def test_d2(self):
        gs = theorem2_generators(2)
        assert gs.strands == 2
        assert [it.word.letters for it in gs.by_label("thm2.iv")] == [(1, 1)]
        assert [it.exponent for it in gs.by_label("thm2.i")] == [1]

    def test_d3_staircase(self):
        gs = theorem2_generators(3)
        iv = gs.by_label("thm2.iv")
        assert iv[0].word.letters == (1, 2, 3, 4, 5, 5, 4, 3, 2, 1)
        assert all(it.word.exponent_sum() == 10 for it in iv)
        assert gs.notes["iv_distinct"] == len(iv)

    def test_d3_clause_i(self):
        pairs = {it.pair for it in theorem2_generators(3).by_label("thm2.i")}
        assert pairs == {(1, 3), (2, 4), (3, 5), (4, 6), (1, 5), (2, 6)}

    def test_iv_cap(self):
        assert len(theorem2_generators(3, cap=2).by_label("thm2.iv")) == 2

    def test_iv_conjugates_distinct(self):
        iv = [it.word for it in theorem2_generators(3).by_label("thm2.iv")]
        for a in range(len(iv)):
            for b in range(a + 1, len(iv)):
                assert not braids_equal(iv[a], iv[b])


class TestOtherSets:
    def test_anbraids(self):
        assert [it.word.letters for it in anbraids_generators(2)] == [(1, 1, 1)]
        three = anbraids_generators(3, style="band")
        words = [it.word for it in three]
        assert words[0].letters == (1, 1, 1) and words[1].letters == (2, 2, 2)
        assert braids_equal(words[2], expand_band(1, 3, 3, 2, "prime"))
        assert len(anbraids_generators(1)) == 0

    def test_fullbraid(self):
        assert [it.word.letters for it in fullbraid_generators(4)] == [(1,), (2,), (3,)]

    @pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
    def test_prop_set_stabilizes(self, n, k):
        assert verify_stabilization(prop_hurwitz_generators(n, k), periodic_tuple(n, k)).passed

    def test_bad_label(self):
        with pytest.raises(ValueError):
            GeneratorSet(2, [GeneratorItem("nope", BraidWord(2, (1,)))])

    def test_strand_mismatch(self):
        with pytest.raises(ValueError):
            GeneratorSet(3, [GeneratorItem("anbraids", BraidWord(2, (1,)))])


class TestStabilizationReport:
    def test_single_band_on_equal_entries(self):
        t = HurwitzTuple.parse("(1 2);(2 3);(1 2)", 3)
        item = GeneratorItem("thm1.i", expand_band(1, 3, 3, 1, "mirror"), (1, 3), 1)
        assert verify_stabilization([item], t).passed

    def test_lowered_exponent_fails(self):
        t = HurwitzTuple.parse("(1 2);(2 3)", 3)
        item = GeneratorItem("thm1.ii", BraidWord(2, (1, 1)), (1, 2), 2)
        rep = verify_stabilization([item], t)
        assert not rep.passed and len(rep.failures) == 1

    def test_strand_mismatch(self):
        with pytest.raises(ValueError):
            verify_stabilization(theorem1_generators(2, 2), periodic_tuple(2, 3))


class TestIdentities:
    def test_delta_word(self):
        assert delta_word(1, 2, 3).letters == (1, 3, 5)

    def test_delta_examples(self):
        rep = verify_delta_conjugation(2, 2)
        assert rep.passed and rep.checked == 2
        rep3 = verify_delta_conjugation(3, 2)
        assert rep3.passed

    def test_delta_cases_by_hand(self):
        b = lambda i, j: expand_band(i, j, 4)
        d = delta_word(1, 2, 2)
        assert braids_equal(d.inverse() * b(1, 3) * d, b(1, 3) * b(2, 4) * b(1, 3).inverse())
        assert braids_equal(d.inverse() * b(2, 4) * d, b(1, 3))

    def test_delta_cap(self):
        with pytest.raises(CapExceeded):
            verify_delta_conjugation(4, 4)

    def test_redundancy_examples(self):
        assert verify_redundancy(2, 4).passed
        assert verify_redundancy(2, 5).passed
        assert verify_redundancy(3, 6).passed

    def test_redundancy_cap(self):
        with pytest.raises(CapExceeded):
            verify_redundancy(2, 13)


class TestPlanePipeline:
    def test_premodification_word(self):
        from braid_monodromy.theorems import plane_premodification_word

        w = plane_premodification_word(3)
        assert w.letters == (1, 2, 3, 4, 5, 5, 4, 2, 1)
        assert w.exponent_sum() == 9 and w.permutation().cycle_type() == (2, 1, 1, 1, 1)
        assert plane_premodification_word(2).letters == (1, 1)

    def test_conics_match_mirrored(self):
        from braid_monodromy.theorems import verify_pipeline_plane

        rep = verify_pipeline_plane(2)
        assert rep["diagnostics"]["mirror_exact_word_match"]
        assert all(r["word"] == [-1, -1] for r in rep["tracked"])

    def test_cubics_fingerprint(self):
        from braid_monodromy.theorems import verify_pipeline_plane

        rep = verify_pipeline_plane(3)
        assert rep["verdicts"]["degeneracy_locus"]
        assert [r["expsum"] for r in rep["tracked"]] == [-9, -9, -9]
        assert rep["diagnostics"]["mirror_matches_premodification"]
