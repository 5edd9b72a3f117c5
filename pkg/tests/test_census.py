import pytest

from hyperforms import (
    brute_force_census,
    canonical_code,
    enumerate_stable_trees,
    validate_stable,
)


class TestEnumerate:
    @pytest.mark.parametrize("m,count", [(3, 1), (4, 2), (5, 3), (6, 7)])
    def test_frozen_counts(self, m, count):
        assert len(enumerate_stable_trees(m)) == count

    def test_m_6_classes(self):
        # weight multisets of the 7 classes, as a regression anchor
        profiles = sorted(
            tuple(sorted(w for _, w in t.vertices))
            for t in enumerate_stable_trees(6).trees
        )
        assert profiles == [
            (0, 2, 2, 2),
            (1, 1, 2, 2),
            (1, 2, 3),
            (2, 2, 2),
            (2, 4),
            (3, 3),
            (6,),
        ]

    def test_out_of_bounds(self):
        with pytest.raises(ValueError):
            enumerate_stable_trees(2)
        with pytest.raises(ValueError):
            enumerate_stable_trees(11)

    def test_bound_is_configurable(self):
        assert len(enumerate_stable_trees(11, bound=11)) > 0

    @pytest.mark.parametrize("m", range(3, 11))
    def test_members_stable_and_distinct(self, m):
        census = enumerate_stable_trees(m)
        codes = census.codes
        assert len(set(codes)) == len(codes)
        assert codes == tuple(sorted(codes))
        for code, t in census.classes:
            assert validate_stable(t).stable
            assert canonical_code(t) == code
            assert t.m == m

    def test_deterministic(self):
        a = enumerate_stable_trees(7)
        b = enumerate_stable_trees(7)
        assert a.codes == b.codes
        assert [t.to_dict() for t in a.trees] == [t.to_dict() for t in b.trees]


class TestDualGenerators:
    @pytest.mark.parametrize("m", range(3, 9))
    def test_generators_agree(self, m):
        assert brute_force_census(m).codes == enumerate_stable_trees(m).codes

    @pytest.mark.parametrize("m", range(3, 7))
    def test_brute_force_excludes_unstable(self, m):
        for t in brute_force_census(m).trees:
            assert validate_stable(t).stable
