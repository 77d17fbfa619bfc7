"""
Exhaustive formula-versus-oracle sweeps over every feasible family range (slow)
"""

import pytest

from domcover.graphs import Family, FamilySpec, build
from domcover.harness import VerifyMode, known_formula_gap, verify_family
from domcover.harness.verification import instances
from domcover.psi import max_unsolvable_single_vertex, psi_exact

pytestmark = pytest.mark.slow


def gap_free(report):
    rows = [r for r in report.rows if r.note is None]
    return rows, [r for r in report.rows if r.note is not None]


class TestFullRanges:
    """Test every row outside the known gaps agrees and certifies"""

    @pytest.mark.parametrize(
        "family, low, high",
        [
            (Family.PATH, 1, 6),
            (Family.CYCLE, 3, 7),
            (Family.WHEEL, 3, 6),
            (Family.COMPLETE, 1, 5),
            (Family.MULTIPARTITE, 2, 6),
            (Family.BTREE, 0, 2),
        ],
    )
    def test_agreement(self, family, low, high):
        """Test agreement family by family"""
        report = verify_family(family, low, high, threads=2)
        rows, gaps = gap_free(report)
        assert rows
        for row in rows:
            assert row.agree, row.instance
            assert row.certified, row.instance
            assert row.exact == row.formula
        for row in gaps:
            assert not row.agree

    def test_known_gaps_are_exactly_these(self):
        """Test the flagged instances inside the feasible ranges"""
        flagged = [
            str(spec)
            for family, (low, high) in [
                (Family.CYCLE, (3, 7)),
                (Family.MULTIPARTITE, (2, 6)),
            ]
            for spec in instances(family, low, high)
            if known_formula_gap(spec)
        ]
        assert "cycle:6" in flagged
        assert "multipartite:2,1" in flagged
        assert all(s == "cycle:6" or s.startswith("multipartite:2,") for s in flagged)

    def test_btree_two(self):
        """Test psi(B2) = 11 by exhaustive search"""
        report = verify_family(Family.BTREE, 2, 2)
        row = report.rows[0]
        assert row.exact == 11
        assert row.formula == 11
        assert row.worst_total == 10
        # layer 11 in full, then every one of the 8008 configurations of layer 10
        assert row.configs_tested == 12376 + 8008
        assert report.passed


class TestSampledPath:
    """Test the sampled path member with more trials"""

    def test_path_six_end_stack(self):
        """Test 17 pebbles on an end of P6 are the largest stuck stack"""
        g = build(FamilySpec.parse("path:6"))
        assert max_unsolvable_single_vertex(g) == (0, 17)
        assert psi_exact(g).value == 18

    def test_path_seven(self):
        """Test the P7 bounds meet the formula"""
        report = verify_family(Family.PATH, 7, 7, mode=VerifyMode.SAMPLED)
        assert report.rows[0].lower == report.rows[0].upper == 37
