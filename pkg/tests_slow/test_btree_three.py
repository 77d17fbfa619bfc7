"""
The height-three binary tree: certification and sampled upper evidence (slow)
"""

import random

import pytest

from domcover.graphs import Family, FamilySpec, build
from domcover.harness import VerifyMode, verify_family
from domcover.psi import btree_worst, psi_btree, sample_config
from domcover.search import Outcome, solvable, verify_strategy

pytestmark = pytest.mark.slow


class TestBTreeThree:
    """Test psi(B3) = 81 as far as the solver can show it"""

    def setup_method(self):
        self.g = build(FamilySpec(Family.BTREE, (3,)))

    def test_worst_is_unsolvable(self):
        """Test the 80-pebble construction is stuck"""
        worst = btree_worst(3)
        assert worst.total == psi_btree(3).total - 1
        assert solvable(self.g, worst).outcome is Outcome.UNSOLVABLE

    def test_lower_bound_row(self):
        """Test the lower-bound-only sweep"""
        report = verify_family(Family.BTREE, 3, 3, mode=VerifyMode.LOWER_BOUND_ONLY)
        row = report.rows[0]
        assert row.certified
        assert row.lower == 81
        assert row.method == "lower-bound"
        assert report.passed

    def test_sampled_81_solvable(self):
        """Test 200 seeded configurations of 81 pebbles are all solvable"""
        rng = random.Random("btree-3-81")
        for _ in range(200):
            config = sample_config(self.g.n, 81, rng)
            decision = solvable(self.g, config)
            assert decision.solvable, config.to_compact()
            assert verify_strategy(self.g, config, decision.witness)
