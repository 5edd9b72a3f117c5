from itertools import permutations

import pytest

from hyperforms import ExponentVector, blowup_chain, reduce


def compositions(total, max_part=None):
    """All ordered sequences of positive integers summing to total."""
    if total == 0:
        yield ()
        return
    top = total if max_part is None else min(total, max_part)
    for first in range(1, top + 1):
        for rest in compositions(total - first, max_part):
            yield (first,) + rest


class TestExponentVector:
    def test_genus(self):
        assert ExponentVector((4, 1, 1, 1, 1)).g == 3
        assert ExponentVector((3, 1, 1), at_infinity=1).g == 2

    def test_rejects_odd_sum(self):
        with pytest.raises(ValueError):
            ExponentVector((3, 1, 1, 1, 1))

    def test_rejects_small_sum(self):
        with pytest.raises(ValueError):
            ExponentVector((2, 2))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            ExponentVector((), at_infinity=6)


class TestReduce:
    def test_even_exponent_tail(self):
        out = reduce(ExponentVector((4, 1, 1, 1, 1)))
        (tail,) = out.tails
        assert (tail.exponent, tail.genus, tail.attachment_points) == (4, 1, 2)
        assert tail.equation == "y^2 = z^4 - 1"
        assert (out.central_branch_points, out.central_genus) == (4, 1)
        assert out.arithmetic_genus == 3

    def test_odd_exponent_tail(self):
        out = reduce(ExponentVector((3, 1, 1, 1)))
        (tail,) = out.tails
        assert (tail.exponent, tail.genus, tail.attachment_points) == (3, 1, 1)
        assert tail.equation == "y^2 = z^3 - 1"
        # the odd root stays as a branch point of the central component
        assert (out.central_branch_points, out.central_genus) == (4, 1)
        assert out.arithmetic_genus == 2

    def test_exponent_2_contracts_to_node(self):
        out = reduce(ExponentVector((2, 1, 1, 1, 1)))
        assert out.tails == ()
        assert out.extra_nodes == 1
        assert (out.central_branch_points, out.central_genus) == (4, 1)
        assert out.arithmetic_genus == 2

    def test_all_simple_roots(self):
        out = reduce(ExponentVector((1,) * 6))
        assert out.tails == () and out.extra_nodes == 0
        assert (out.central_branch_points, out.central_genus) == (6, 2)

    def test_all_even_splits_central(self):
        # no branch points survive: the central fiber is two genus-0 sheets
        out = reduce(ExponentVector((4, 2)))
        assert out.central_split
        assert out.component_count == 3
        assert out.arithmetic_genus == 2

    def test_infinity_treated_as_root(self):
        a = reduce(ExponentVector((3, 1, 1), at_infinity=1))
        b = reduce(ExponentVector((3, 1, 1, 1)))
        assert a.to_dict()["central"] == b.to_dict()["central"]
        assert [t.exponent for t in a.tails] == [t.exponent for t in b.tails]

    def test_unstable_input_flagged(self):
        out = reduce(ExponentVector((4, 1, 1)))  # g=2, 4 > g+1
        assert out.git_unstable_input
        assert out.arithmetic_genus == 2
        assert not reduce(ExponentVector((3, 1, 1, 1))).git_unstable_input

    def test_too_large_exponent_rejected(self):
        with pytest.raises(ValueError):
            reduce(ExponentVector((5, 1)))  # g=2, 5 > 2g

    @pytest.mark.parametrize("g", range(2, 6))
    def test_genus_conserved_exhaustively(self, g):
        for comp in compositions(2 * g + 2, max_part=2 * g):
            out = reduce(ExponentVector(comp))
            assert out.arithmetic_genus == g, comp
            for tail in out.tails:
                assert tail.genus == (tail.exponent - 1) // 2
                assert tail.attachment_points == 2 - (tail.exponent % 2)
            assert out.central_branch_points % 2 == 0

    def test_commutes_with_permutation(self):
        base = (4, 3, 2, 1, 1, 1)
        ref = reduce(ExponentVector(base))
        for perm in set(permutations(base)):
            out = reduce(ExponentVector(perm))
            assert sorted(
                (t.exponent, t.genus, t.attachment_points) for t in out.tails
            ) == sorted((t.exponent, t.genus, t.attachment_points) for t in ref.tails)
            assert out.to_dict()["central"] == ref.to_dict()["central"]
            assert out.extra_nodes == ref.extra_nodes


class TestBlowupChain:
    def test_single_blow_up(self):
        assert blowup_chain(2).multiplicities == (2,)

    def test_even(self):
        assert blowup_chain(6).multiplicities == (2, 4, 6)

    def test_odd(self):
        assert blowup_chain(5).multiplicities == (2, 4, 5, 10)

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            blowup_chain(1)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_stated_sequences(self, n):
        chain = blowup_chain(n).multiplicities
        i = n // 2
        if n % 2 == 0:
            assert chain == tuple(2 * j for j in range(1, i + 1))
        else:
            assert chain == tuple(2 * j for j in range(1, i + 1)) + (2 * i + 1, 4 * i + 2)
