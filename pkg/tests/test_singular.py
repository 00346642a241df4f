from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpsdeg import (
    Classification,
    CyclicQuotient,
    Verdict,
    WeightTuple,
    is_well_formed,
    isolated_rigid_points,
    normalize,
    reid_tai_classify,
    singular_strata,
    smoothability_report,
)

well_formed_tuples = st.lists(st.integers(1, 60), min_size=3, max_size=5).map(
    lambda entries: normalize(entries))


class TestCyclicQuotient:
    def test_reduces_and_sorts(self):
        q = CyclicQuotient(5, (12, 3))
        assert q.weights == (2, 3)

    def test_notation(self):
        assert CyclicQuotient(25, (1, 4, 10)).notation() == "1/25(1,4,10)"

    def test_rejects_zero_residue(self):
        with pytest.raises(ValueError):
            CyclicQuotient(4, (1, 8))

    def test_rejects_tiny_order(self):
        with pytest.raises(ValueError):
            CyclicQuotient(1, (1,))


class TestReidTai:
    def test_terminal(self):
        assert reid_tai_classify(CyclicQuotient(5, (1, 2, 3))) is Verdict.TERMINAL

    def test_strictly_canonical(self):
        assert reid_tai_classify(CyclicQuotient(2, (1, 1))) is Verdict.STRICTLY_CANONICAL
        assert reid_tai_classify(CyclicQuotient(4, (1, 1, 2))) is Verdict.STRICTLY_CANONICAL

    def test_strictly_klt(self):
        assert reid_tai_classify(CyclicQuotient(4, (1, 1))) is Verdict.STRICTLY_KLT
        assert reid_tai_classify(CyclicQuotient(25, (1, 4, 10))) is Verdict.STRICTLY_KLT

    def test_quasi_reflection_rejected(self):
        with pytest.raises(ValueError):
            reid_tai_classify(CyclicQuotient(4, (1, 2, 2)))

    def test_identity_element_rejected(self):
        # order 6 on residues (2,4): k=3 sends both to 0
        with pytest.raises(ValueError):
            reid_tai_classify(CyclicQuotient(6, (2, 4)))

    def test_verdict_property_is_cached_value(self):
        q = CyclicQuotient(27, (1, 4, 16))
        assert q.verdict is reid_tai_classify(q)

    @given(st.integers(2, 40), st.data())
    @settings(max_examples=120, deadline=None)
    def test_verdict_matches_min_age(self, order, data):
        residues = data.draw(st.lists(st.integers(1, order - 1),
                                      min_size=2, max_size=4))
        germ = CyclicQuotient(order, residues)
        try:
            verdict = reid_tai_classify(germ)
        except ValueError:
            return
        ages = [sum((k * w) % order for w in germ.weights) / order
                for k in range(1, order)]
        low = min(ages)
        if verdict is Verdict.TERMINAL:
            assert low > 1
        elif verdict is Verdict.STRICTLY_CANONICAL:
            assert low == 1
        else:
            assert low < 1


class TestSingularStrata:
    def test_five_strata_example(self):
        strata = singular_strata(WeightTuple((1, 4, 10, 25)))
        summary = {(s.transverse.notation(), s.dimension, str(s.transverse.verdict))
                   for s in strata}
        assert summary == {
            ("1/2(1,1)", 1, "StrictlyCanonical"),
            ("1/5(1,4)", 1, "StrictlyCanonical"),
            ("1/4(1,1,2)", 0, "StrictlyCanonical"),
            ("1/10(1,4,5)", 0, "StrictlyCanonical"),
            ("1/25(1,4,10)", 0, "StrictlyKlt"),
        }

    def test_smooth_space(self):
        assert singular_strata(WeightTuple((1, 1, 1, 1))) == []

    def test_two_strata_example(self):
        strata = singular_strata(WeightTuple((1, 1, 2, 4)))
        assert [(s.order, s.transverse.notation()) for s in strata] == [
            (2, "1/2(1,1)"), (4, "1/4(1,1,2)")]

    def test_curve_contains_points(self):
        strata = {s.indices: s for s in singular_strata(WeightTuple((1, 4, 10, 25)))}
        assert strata[(1, 2)].maximal  # gcd 2 curve through the 4 and 10 points
        assert not strata[(1,)].maximal
        assert not strata[(2,)].maximal

    def test_rejects_non_well_formed(self):
        with pytest.raises(ValueError):
            singular_strata(WeightTuple((1, 2, 4)))

    @given(well_formed_tuples)
    @settings(max_examples=120, deadline=None)
    def test_stratum_shape_invariants(self, w):
        count = len(w)
        for s in singular_strata(w):
            assert s.order >= 2
            assert s.dimension == len(s.indices) - 1
            assert len(s.transverse.weights) == count - len(s.indices)
            assert all(r != 0 for r in s.transverse.weights)
            assert gcd(*(w[j] for j in s.indices)) == s.order
            # saturation: exactly the coordinates divisible by the order
            assert set(s.indices) == {j for j in range(count) if w[j] % s.order == 0}

    @given(well_formed_tuples)
    @settings(max_examples=120, deadline=None)
    def test_maximality_flags(self, w):
        strata = singular_strata(w)
        index_sets = [set(s.indices) for s in strata]
        for s in strata:
            contained = any(set(s.indices) < other for other in index_sets)
            assert s.maximal == (not contained)


class TestIsolatedRigidPoints:
    def test_rigid_examples(self):
        points = isolated_rigid_points(WeightTuple((1, 4, 16, 27)))
        assert [s.transverse.notation() for s in points] == ["1/27(1,4,16)"]
        points = isolated_rigid_points(WeightTuple((1, 7, 27, 49)))
        assert [s.transverse.notation() for s in points] == ["1/27(1,7,22)"]

    def test_non_rigid_examples(self):
        for w in [(1, 1, 1, 1), (1, 1, 2, 4), (1, 4, 10, 25), (1, 6, 9, 32),
                  (1, 9, 50, 60), (1, 22, 32, 121), (3, 4, 63, 98)]:
            assert isolated_rigid_points(WeightTuple(w)) == []

    def test_rejects_low_dimension(self):
        with pytest.raises(ValueError):
            isolated_rigid_points(WeightTuple((1, 1, 4)))

    @given(st.lists(st.integers(1, 60), min_size=4, max_size=5).map(
        lambda entries: normalize(entries)))
    @settings(max_examples=100, deadline=None)
    def test_matches_pairwise_gcd_criterion(self, w):
        if w.dim < 3:
            return
        got = {s.indices[0] for s in isolated_rigid_points(w)}
        expected = {
            i for i in range(len(w))
            if w[i] > 1 and all(gcd(w[i], w[j]) == 1 for j in range(len(w)) if j != i)
        }
        assert got == expected


class TestSmoothabilityReport:
    def test_p2_family_verdict(self):
        report = smoothability_report(WeightTuple((1, 4, 10, 25)))
        assert report.classification is Classification.P2_TYPE
        assert report.verdict_text == "smoothable (ℙ²-type family)"

    def test_sum_family_verdict(self):
        report = smoothability_report(WeightTuple((1, 9, 50, 60)))
        assert report.verdict_text == "smoothable (sum-type family)"

    def test_both_verdict(self):
        report = smoothability_report(WeightTuple((1, 1, 2, 4)))
        assert report.verdict_text == "smoothable (ℙ²-type and sum-type families)"

    def test_rigid_verdict(self):
        report = smoothability_report(WeightTuple((1, 4, 16, 27)))
        assert report.verdict_text == "not smoothable (rigid point)"
        assert report.classification is Classification.SPORADIC

    def test_unknown_verdict(self):
        report = smoothability_report(WeightTuple((3, 4, 63, 98)))
        assert report.verdict_text == "unknown"

    def test_dim2_has_no_classification(self):
        report = smoothability_report(WeightTuple((1, 4, 25)))
        assert report.classification is None
        assert report.rigid_points == ()
        assert report.verdict_text == "unknown"

    def test_rigid_points_subset_of_strata(self):
        report = smoothability_report(WeightTuple((1, 4, 16, 27)))
        assert set(report.rigid_points) <= set(report.strata)
        for s in report.rigid_points:
            assert s.dimension == 0

    def test_rejects_non_solution(self):
        with pytest.raises(ValueError):
            smoothability_report(WeightTuple((1, 1, 1, 2)))

    def test_rejects_non_well_formed(self):
        with pytest.raises(ValueError):
            smoothability_report(WeightTuple((2, 2, 4, 8)))

    def test_family_members_never_rigid(self):
        # the conflict RuntimeError must be unreachable on real solutions
        for w in [(1, 1, 1, 1), (1, 1, 2, 4), (1, 2, 9, 12), (1, 4, 10, 25),
                  (1, 9, 50, 60)]:
            report = smoothability_report(WeightTuple(w))
            assert report.rigid_points == ()
