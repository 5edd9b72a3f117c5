import pytest
from hypothesis import given, strategies as st

from hyperforms import BinaryFormClass, GitClass, classify, moduli_dimension


class TestBinaryFormClass:
    def test_multiplicities_sorted(self):
        f = BinaryFormClass.from_multiplicities([1, 3, 2])
        assert f.multiplicities == (3, 2, 1)
        assert f.degree == 6

    def test_roots_have_distinct_labels(self):
        labels = [label for label, _ in BinaryFormClass.from_multiplicities([2, 2, 2]).roots]
        assert len(set(labels)) == 3

    def test_equality_is_multiset_equality(self):
        assert BinaryFormClass.from_multiplicities([2, 1, 3]) == BinaryFormClass.from_multiplicities([3, 2, 1])
        assert BinaryFormClass.from_multiplicities([2, 2]) != BinaryFormClass.from_multiplicities([3, 1])

    def test_semistable_point_is_single_value(self):
        assert BinaryFormClass.semistable() == BinaryFormClass.semistable()
        assert BinaryFormClass.semistable() != BinaryFormClass.from_multiplicities([3, 3])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            BinaryFormClass.from_multiplicities([2, 0])

    def test_json_round_trip(self):
        f = BinaryFormClass.from_multiplicities([3, 1, 1, 1])
        assert BinaryFormClass.from_dict(f.to_dict()) == f
        s = BinaryFormClass.semistable()
        assert BinaryFormClass.from_dict(s.to_dict()) == s


class TestClassify:
    def test_simple_roots_stable(self):
        assert classify(BinaryFormClass.from_multiplicities([1] * 6)) == GitClass.STABLE

    def test_half_degree_strictly_semistable(self):
        assert classify(BinaryFormClass.from_multiplicities([3, 3])) == GitClass.STRICTLY_SEMISTABLE

    def test_above_half_unstable(self):
        # odd degree: 5 > 7/2, and no strictly semistable forms exist
        assert classify(BinaryFormClass.from_multiplicities([5, 1, 1])) == GitClass.UNSTABLE

    def test_semistable_point_convention(self):
        assert classify(BinaryFormClass.semistable()) == GitClass.STRICTLY_SEMISTABLE

    @given(st.lists(st.integers(1, 6), min_size=1, max_size=8))
    def test_invariant_under_permutation(self, mults):
        f1 = BinaryFormClass.from_multiplicities(mults)
        f2 = BinaryFormClass.from_multiplicities(list(reversed(mults)))
        assert classify(f1) == classify(f2)

    @given(st.lists(st.integers(1, 6), min_size=1, max_size=8))
    def test_odd_degree_never_strictly_semistable(self, mults):
        f = BinaryFormClass.from_multiplicities(mults)
        if f.degree % 2:
            assert classify(f) != GitClass.STRICTLY_SEMISTABLE


class TestModuliDimension:
    @pytest.mark.parametrize("m,expected", [(3, 0), (6, 3), (8, 5)])
    def test_values(self, m, expected):
        assert moduli_dimension(m) == expected

    def test_rejects_small_degree(self):
        with pytest.raises(ValueError):
            moduli_dimension(2)
