"""
Unit tests for the closed-form formulas
"""

import pytest

from domcover.graphs import FamilySpec, ParameterBoundError
from domcover.psi import (
    decompose,
    psi_btree,
    psi_complete,
    psi_core,
    psi_cycle,
    psi_formula,
    psi_multipartite,
    psi_path,
    psi_wheel,
)


class TestDecompose:
    """Test the n - 2 = alpha + 3k decomposition"""

    @pytest.mark.parametrize("n, alpha, k", [(3, 1, 0), (5, 0, 1), (7, 2, 1), (2, 0, 0)])
    def test_examples(self, n, alpha, k):
        """Test worked examples"""
        d = decompose(n)
        assert (d.alpha, d.k) == (alpha, k)

    def test_identity(self):
        """Test the defining identity over a range"""
        for n in range(2, 60):
            d = decompose(n)
            assert n - 2 == d.alpha + 3 * d.k
            assert d.alpha in (0, 1, 2)

    def test_rejects_small(self):
        """Test n < 2"""
        with pytest.raises(ParameterBoundError):
            decompose(1)


class TestPath:
    """Test the path formula"""

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 9), (6, 18)])
    def test_values(self, n, expected):
        """Test small values"""
        assert psi_path(n) == expected

    def test_recurrence(self):
        """Test psi(P_n) - psi(P_{n-3}) = 2^(n-2)"""
        for n in range(6, 41):
            assert psi_path(n) - psi_path(n - 3) == 2 ** (n - 2)

    def test_exact_for_large_n(self):
        """Test the main term stays integral far beyond float precision"""
        assert psi_core(200) * 7 == 2**201 - 2 ** decompose(200).alpha

    def test_rejects_zero(self):
        """Test n <= 0"""
        with pytest.raises(ParameterBoundError):
            psi_path(0)


class TestCycle:
    """Test the cycle formula"""

    @pytest.mark.parametrize("n, expected", [(3, 1), (4, 3), (5, 4), (6, 7), (7, 9)])
    def test_values(self, n, expected):
        """Test small values as the formula states them"""
        assert psi_cycle(n) == expected

    def test_rejects_small(self):
        """Test n < 3"""
        with pytest.raises(ParameterBoundError):
            psi_cycle(2)


class TestSmallFamilies:
    """Test complete, multipartite and wheel formulas"""

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_complete(self, n):
        """Test psi(K_n) = 1"""
        assert psi_complete(n) == 1

    @pytest.mark.parametrize(
        "sizes, expected", [([4, 2], 4), ([2, 2], 3), ([1, 1, 1], 1), ([3, 3, 1], 3)]
    )
    def test_multipartite(self, sizes, expected):
        """Test the three multipartite cases"""
        assert psi_multipartite(sizes) == expected

    def test_multipartite_needs_two_classes(self):
        """Test r < 2"""
        with pytest.raises(ParameterBoundError, match="two classes"):
            psi_multipartite([3])

    def test_multipartite_order(self):
        """Test increasing sizes are rejected"""
        with pytest.raises(ParameterBoundError):
            psi_multipartite([1, 2])

    @pytest.mark.parametrize("n, expected", [(3, 1), (5, 3), (6, 4)])
    def test_wheel(self, n, expected):
        """Test psi(W_n) = n - 2"""
        assert psi_wheel(n) == expected

    def test_cross_family(self):
        """Test coincidences between families"""
        assert psi_cycle(3) == psi_complete(3)
        assert psi_cycle(4) == psi_multipartite([2, 2])
        assert psi_wheel(3) == psi_complete(4)


class TestBinaryTree:
    """Test the binary-tree terms"""

    def test_base_cases(self):
        """Test heights zero and one"""
        assert psi_btree(0).total == 1
        assert psi_btree(1).total == 2
        assert psi_btree(1).base_case

    def test_terms_two(self):
        """Test the term breakdown at height two"""
        t = psi_btree(2)
        assert (t.t1, t.t2, t.t3, t.t4) == (1, 2, 8, 0)
        assert t.total == 11

    def test_terms_three(self):
        """Test the term breakdown at height three"""
        t = psi_btree(3)
        assert (t.t1, t.t2, t.t3, t.t4) == (3, 10, 64, 4)
        assert t.gamma == 4
        assert t.total == 81

    def test_golden_values(self):
        """Test the known values for heights 2 through 10"""
        expected = [11, 81, 609, 4777, 38105, 304473, 2434969, 19478809, 155827481]
        assert [psi_btree(n).total for n in range(2, 11)] == expected

    def test_gamma(self):
        """Test gamma is 2^(n-1) exactly when 3 divides n"""
        for n in range(2, 30):
            t = psi_btree(n)
            assert t.t4 == t.gamma
            assert t.gamma == (2 ** (n - 1) if n % 3 == 0 else 0)

    def test_growth_bounds(self):
        """Test the six-fold lower bound and the ratio approaching eight"""
        for n in range(3, 21):
            assert psi_btree(n).total >= 6 * psi_btree(n - 1).total
        for n in range(8, 21):
            ratio = psi_btree(n).total / psi_btree(n - 1).total
            assert abs(ratio - 8) <= 0.08

    def test_rejects_negative(self):
        """Test negative heights"""
        with pytest.raises(ParameterBoundError):
            psi_btree(-1)

    def test_to_dict(self):
        """Test the JSON-ready breakdown carries the total"""
        assert psi_btree(5).to_dict()["total"] == 4777


class TestDispatch:
    """Test psi_formula dispatch"""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("path:6", 18),
            ("cycle:7", 9),
            ("complete:5", 1),
            ("multipartite:4,2", 4),
            ("wheel:6", 4),
            ("btree:5", 4777),
        ],
    )
    def test_dispatch(self, text, expected):
        """Test each family through the spec"""
        assert psi_formula(FamilySpec.parse(text)) == expected
