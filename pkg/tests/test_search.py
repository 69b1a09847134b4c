from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpsmat.exact import (
    Transform,
    full_j_mps,
    structure_check,
    upper_interval_mps,
)
from mpsmat.search import (
    TooLargeError,
    are_equivalent,
    candidate_ratios,
    canonical_form,
    canonical_transform,
    exhaustive_search,
    naive_search,
)

# The admissible ratios for small orders; the search must reproduce these and
# find nothing anywhere else on the candidate grid.
SMALL_ORDER_RATIOS = {
    3: {Fraction(1, 2)},
    4: {Fraction(1)},
    5: {Fraction(3, 2)},
    6: {Fraction(0), Fraction(2)},
    7: {Fraction(5, 2)},
}


class TestCandidateRatios:
    def test_grid(self):
        assert candidate_ratios(5) == [Fraction(0), Fraction(1, 2), Fraction(1),
                                       Fraction(3, 2)]


class TestExhaustiveSearch:
    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_small_order_classification(self, n):
        nonempty = {d for d in candidate_ratios(n)
                    if exhaustive_search(n, d).count > 0}
        assert nonempty == SMALL_ORDER_RATIOS[n]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_naive_oracle_bit_for_bit(self, n):
        for d in candidate_ratios(n):
            pruned = exhaustive_search(n, d, mode="all")
            oracle = naive_search(n, d)
            got = pruned.two_q_stack.astype(np.int64)
            want = (np.stack([m.two_q for m in oracle])
                    if oracle else np.empty((0, n, n), dtype=np.int64))
            assert got.shape == want.shape
            assert np.array_equal(got, want)

    def test_results_are_valid_members(self):
        res = exhaustive_search(6, 2)
        assert res.complete
        for m in res.matrices():
            assert m.d == 2  # full IntegerMps validation runs on construction

    def test_max_results_stops_early(self):
        res = exhaustive_search(6, 2, max_results=5)
        assert res.count == 5
        assert not res.complete

    def test_budget_flag(self):
        res = exhaustive_search(8, 1, budget_seconds=0.0)
        assert not res.complete

    def test_threads_give_identical_output(self):
        seq = exhaustive_search(6, 2, threads=1)
        par = exhaustive_search(6, 2, threads=4)
        assert np.array_equal(seq.two_q_stack, par.two_q_stack)
        assert par.complete

    def test_non_integral_doubled_ratio_is_empty(self):
        res = exhaustive_search(6, Fraction(1, 3))
        assert res.count == 0 and res.complete

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            exhaustive_search(9, 1)

    def test_up_to_equivalence_two_classes_at_six_two(self):
        res = exhaustive_search(6, 2, mode="up_to_equivalence")
        assert res.complete
        assert res.count == 2
        reps = res.matrices()
        flags = {
            (are_equivalent(rep, full_j_mps(6)) is not None,
             are_equivalent(rep, upper_interval_mps(6, 2)) is not None)
            for rep in reps
        }
        assert flags == {(True, False), (False, True)}

    def test_up_to_equivalence_counts(self):
        assert exhaustive_search(6, 0, mode="up_to_equivalence").count == 1
        assert exhaustive_search(7, Fraction(5, 2),
                                 mode="up_to_equivalence").count == 1

    def test_canonical_mode_representatives_are_canonical(self):
        res = exhaustive_search(6, 2, mode="up_to_equivalence")
        for m in res.matrices():
            assert canonical_form(m) == m

    @pytest.mark.parametrize("n,d", [(6, 0), (6, 2), (7, Fraction(5, 2))])
    def test_up_to_equivalence_matches_full_partition(self, n, d):
        # Canonicalizing every matrix from the full enumeration must give
        # exactly the representative set the restricted search reports.
        full = exhaustive_search(n, d, mode="all")
        forms = {canonical_form(m).encode() for m in full.matrices()}
        reps = exhaustive_search(n, d, mode="up_to_equivalence")
        assert {m.encode() for m in reps.matrices()} == forms


class TestCanonicalForm:
    def test_idempotent(self):
        cf = canonical_form(full_j_mps(6))
        assert canonical_form(cf) == cf

    @settings(max_examples=30, deadline=None)
    @given(st.permutations(range(6)),
           st.lists(st.sampled_from([-1, 1]), min_size=6, max_size=6),
           st.sampled_from([-1, 1]))
    def test_scramble_invariance(self, perm, signs, g):
        m = upper_interval_mps(6, 2)
        t = Transform(perm=tuple(perm), signs=tuple(signs), global_sign=g)
        assert canonical_form(t.apply_mps(m)) == canonical_form(m)

    def test_transform_realizes_form(self):
        m = full_j_mps(5)
        cf, t = canonical_transform(m)
        assert t.apply_mps(m) == cf

    def test_distinguishes_inequivalent(self):
        assert canonical_form(full_j_mps(6)) != canonical_form(
            upper_interval_mps(6, 2))

    def test_zero_ratio(self):
        from mpsmat.designs import paley_conference
        from mpsmat.exact import conference_mps

        m = conference_mps(paley_conference(6))
        cf = canonical_form(m)
        assert canonical_form(cf) == cf

    def test_zero_ratio_global_negation(self):
        # With a zero diagonal the global sign is not absorbed by paired
        # flips, so the canonical scan must cover the negated branch too.
        from mpsmat.designs import paley_conference
        from mpsmat.exact import conference_mps

        m = conference_mps(paley_conference(6))
        neg = Transform(perm=tuple(range(6)), signs=(1,) * 6,
                        global_sign=-1).apply_mps(m)
        assert canonical_form(m) == canonical_form(neg)
        w = are_equivalent(m, neg)
        assert w is not None and w.apply_mps(m) == neg

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            canonical_form(full_j_mps(9))


class TestAreEquivalent:
    def test_self_equivalence(self):
        m = full_j_mps(6)
        w = are_equivalent(m, m)
        assert w is not None
        assert w.apply_mps(m) == m

    def test_negation_witness(self):
        m = full_j_mps(6)
        neg = Transform(perm=tuple(range(6)), signs=(1,) * 6,
                        global_sign=-1).apply_mps(m)
        w = are_equivalent(m, neg)
        assert w is not None and w.apply_mps(m) == neg

    def test_inequivalent_pair(self):
        assert are_equivalent(full_j_mps(6), upper_interval_mps(6, 2)) is None

    def test_mismatched_shapes_rejected(self):
        with pytest.raises(ValueError):
            are_equivalent(full_j_mps(4), full_j_mps(6))

    @settings(max_examples=25, deadline=None)
    @given(st.permutations(range(6)),
           st.lists(st.sampled_from([-1, 1]), min_size=6, max_size=6),
           st.sampled_from([-1, 1]))
    def test_witness_is_exact(self, perm, signs, g):
        m = upper_interval_mps(6, 0)
        t = Transform(perm=tuple(perm), signs=tuple(signs), global_sign=g)
        other = t.apply_mps(m)
        w = are_equivalent(m, other)
        assert w is not None
        assert w.apply_mps(m) == other

    def test_canonical_equality_iff_equivalent(self):
        # Checked across all search output at order 6.
        for d in candidate_ratios(6):
            mats = exhaustive_search(6, d).matrices()
            if not mats:
                continue
            sample = mats[:: max(1, len(mats) // 12)]
            for a in sample[:6]:
                for b in sample[:6]:
                    same = canonical_form(a) == canonical_form(b)
                    assert (are_equivalent(a, b) is not None) == same

    def test_canonical_partition_of_all_order_six_hits(self):
        # Partitioning ALL (6, 2) matrices by canonical form must give the
        # two known classes, and representatives must cross-compare exactly
        # as the partition says.
        mats = exhaustive_search(6, 2).matrices()
        groups: dict[bytes, list] = {}
        for m in mats:
            groups.setdefault(canonical_form(m).encode(), []).append(m)
        assert len(groups) == 2
        assert sorted(len(g) for g in groups.values()) == [
            len(mats) - max(len(g) for g in groups.values()),
            max(len(g) for g in groups.values()),
        ]
        (g1, g2) = groups.values()
        assert are_equivalent(g1[0], g1[-1]) is not None
        assert are_equivalent(g2[0], g2[-1]) is not None
        assert are_equivalent(g1[0], g2[0]) is None


class TestSearchTheoryConsistency:
    def test_structure_on_search_hits(self):
        # Every hit with n/6 - 1 < d < n/2 - 1 must pass the exact block
        # structure checks (here: all of (8, 1)).
        res = exhaustive_search(8, 1, max_results=200)
        for m in res.matrices():
            rep = structure_check(m)
            assert rep.normal and rep.commutes_with_j and rep.gram_ok

    def test_search_agrees_with_classifier_small_orders(self):
        from mpsmat.classify import IMPOSSIBLE_STATUS, necessary_conditions

        for n in range(3, 8):
            for d in candidate_ratios(n):
                verdict = necessary_conditions(n, d)
                found = exhaustive_search(n, d, max_results=1).count > 0
                if verdict.status == IMPOSSIBLE_STATUS:
                    assert not found, (n, d)
                if found:
                    assert verdict.status != IMPOSSIBLE_STATUS, (n, d)
