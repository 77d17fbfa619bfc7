"""
Unit tests for exact psi computation, sampling and the single-vertex search
"""

import random

import pytest
from pydantic import ValidationError

from domcover.graphs import FamilySpec, build, parse_edge_list
from domcover.pebbles import Configuration
from domcover.psi import (
    ExactOptions,
    PsiMethod,
    PsiResult,
    count_configs,
    enumerate_configs,
    formula_result,
    max_unsolvable_single_vertex,
    psi_exact,
    sample_config,
)
from domcover.psi.exact import scan_layer
from domcover.search import SolverOptions, solvable


def graph(text):
    return build(FamilySpec.parse(text))


class TestEnumeration:
    """Test configuration streams"""

    def test_small_stream(self):
        """Test order and content for n=2, k=2"""
        assert [c.counts for c in enumerate_configs(2, 2)] == [(2, 0), (1, 1), (0, 2)]

    def test_zero_pebbles(self):
        """Test the single empty configuration"""
        assert [c.counts for c in enumerate_configs(3, 0)] == [(0, 0, 0)]

    def test_count(self):
        """Test stream length against the binomial count"""
        assert len(list(enumerate_configs(4, 4))) == 35 == count_configs(4, 4)
        assert count_configs(7, 10) == 8008

    def test_distinct(self):
        """Test every configuration appears once"""
        stream = [c.counts for c in enumerate_configs(4, 5)]
        assert len(stream) == len(set(stream))
        assert all(sum(c) == 5 for c in stream)

    def test_invalid(self):
        """Test n < 1"""
        with pytest.raises(ValueError):
            list(enumerate_configs(0, 2))


class TestSampling:
    """Test the stars-and-bars sampler"""

    def test_total_and_length(self):
        """Test samples are configurations of the requested size"""
        rng = random.Random(7)
        for _ in range(200):
            c = sample_config(5, 9, rng)
            assert len(c) == 5
            assert c.total == 9

    def test_reproducible(self):
        """Test the same seed gives the same draws"""
        a = [sample_config(6, 12, random.Random(3)).counts for _ in range(3)]
        b = [sample_config(6, 12, random.Random(3)).counts for _ in range(3)]
        assert a == b

    def test_covers_all_compositions(self):
        """Test every composition of a tiny layer is eventually drawn"""
        rng = random.Random(0)
        seen = {sample_config(3, 2, rng).counts for _ in range(500)}
        assert seen == {c.counts for c in enumerate_configs(3, 2)}


class TestPsiExact:
    """Test exhaustive psi on small graphs"""

    def test_path_four(self):
        """Test psi(P4) = 5 with an unsolvable witness of size 4"""
        g = graph("path:4")
        result = psi_exact(g)
        assert result.method is PsiMethod.EXHAUSTIVE
        assert result.value == 5
        witness = Configuration(tuple(result.witness_bad_config))
        assert witness.total == 4
        assert not solvable(g, witness).solvable

    def test_path_four_smallest_witness(self):
        """Test the witness is the smallest unsolvable 4-configuration of P4"""
        result = psi_exact(graph("path:4"))
        assert result.witness_bad_config == [0, 0, 0, 4]
        # layer 5 (56) and all of layer 4 (35)
        assert result.configs_tested == 56 + 35

    def test_witness_from_below_the_hint(self):
        """Test an upward scan still reports the smallest witness"""
        result = psi_exact(graph("path:4"), ExactOptions(hint=2))
        assert result.value == 5
        assert result.witness_bad_config == [0, 0, 0, 4]

    def test_cycle_four(self):
        """Test psi(C4) = 3"""
        assert psi_exact(graph("cycle:4")).value == 3

    def test_complete_five(self):
        """Test psi(K5) = 1 with the empty witness"""
        result = psi_exact(graph("complete:5"))
        assert result.value == 1
        assert result.witness_bad_config == [0, 0, 0, 0, 0]

    def test_hint_independent(self):
        """Test that the answer does not depend on the starting layer"""
        g = graph("path:5")
        values = {psi_exact(g, ExactOptions(hint=h)).value for h in (1, 4, 9, 14)}
        assert values == {9}

    def test_symmetry_reduction_agrees(self):
        """Test that orbit filtering does not change the answer"""
        g = graph("cycle:5")
        full = psi_exact(g, ExactOptions(symmetry=False))
        reduced = psi_exact(g, ExactOptions(symmetry=True))
        assert full.value == reduced.value == 4
        assert reduced.configs_tested < full.configs_tested
        assert full.witness_bad_config == reduced.witness_bad_config == [0, 0, 0, 0, 3]

    def test_graph_without_family(self):
        """Test an edge-list graph starts from hint 1"""
        g = parse_edge_list("0 1\n1 2\n2 3\n")
        assert psi_exact(g).value == 5

    def test_cycle_six_known_gap(self):
        """Test that psi(C6) is 6, one below the cycle formula"""
        result = psi_exact(graph("cycle:6"))
        assert result.value == 6
        assert formula_result(FamilySpec.parse("cycle:6")).value == 7

    def test_pair_with_singleton_gap(self):
        """Test that K(2,1) is P3 with psi 2, below the multipartite formula"""
        assert psi_exact(graph("multipartite:2,1")).value == 2
        assert formula_result(FamilySpec.parse("multipartite:2,1")).value == 3

    def test_sampled_mode(self):
        """Test bounds mode when layers exceed the enumeration cap"""
        g = graph("path:5")
        result = psi_exact(g, ExactOptions(max_configs=0, sample_trials=50, seed=11))
        assert result.method is PsiMethod.SAMPLED
        assert result.value is None
        assert result.lower == 9
        assert result.upper == 9
        assert result.upper_is_statistical
        assert result.sampling.trials == 50
        assert result.sampling.seed == 11

    def test_budget_limited(self):
        """Test a tiny node budget turns into bounds, never a wrong value"""
        g = graph("path:6")
        result = psi_exact(g, ExactOptions(solver=SolverOptions.unpruned(max_nodes=1)))
        assert result.budget_limited
        assert result.value is None

    def test_parallel_matches_sequential(self):
        """Test that a process pool gives the same value and witness"""
        g = graph("wheel:5")
        sequential = psi_exact(g, ExactOptions(workers=1))
        pooled = psi_exact(g, ExactOptions(workers=2))
        assert sequential.value == pooled.value == 3
        assert sequential.witness_bad_config == pooled.witness_bad_config


class TestPsiResult:
    """Test result validation"""

    def test_bounds_checked(self):
        """Test lower <= upper"""
        with pytest.raises(ValidationError):
            PsiResult(graph="g", method=PsiMethod.SAMPLED, lower=5, upper=3)

    def test_formula_result_terms(self):
        """Test formula results carry the binary-tree terms"""
        result = formula_result(FamilySpec.parse("btree:3"))
        assert result.value == 81
        assert result.terms["gamma"] == 4
        assert formula_result(FamilySpec.parse("path:6")).terms is None


class TestSingleVertex:
    """Test the largest unsolvable stack on one vertex"""

    def test_cycle_five(self):
        """Test C5: three pebbles on a vertex are stuck, four are not"""
        assert max_unsolvable_single_vertex(graph("cycle:5"))[1] == 3

    def test_path_four(self):
        """Test P4 is worst at an end"""
        assert max_unsolvable_single_vertex(graph("path:4")) == (0, 4)

    def test_complete_three(self):
        """Test any single pebble dominates K3"""
        assert max_unsolvable_single_vertex(graph("complete:3"))[1] == 0

    @pytest.mark.parametrize("n", range(3, 8))
    def test_cycle_worst_case_attains_psi(self, n):
        """Test that stacking on one vertex is the worst case on small cycles"""
        g = graph(f"cycle:{n}")
        assert max_unsolvable_single_vertex(g)[1] + 1 == psi_exact(g).value

    @pytest.mark.parametrize("n", range(3, 6))
    def test_path_worst_case_attains_psi(self, n):
        """Test that stacking on an end is the worst case on small paths"""
        g = graph(f"path:{n}")
        vertex, k = max_unsolvable_single_vertex(g)
        psi = psi_exact(g).value
        assert vertex in (0, n - 1)
        assert k == psi - 1
        assert not solvable(g, Configuration.from_sparse(n, {0: psi - 1})).solvable
        assert solvable(g, Configuration.from_sparse(n, {0: psi})).solvable


class TestLayerFrontier:
    """Test that solvable layers form an upward-closed run"""

    @pytest.mark.parametrize("spec", ["path:4", "cycle:5", "wheel:4", "multipartite:3,1"])
    def test_monotone_frontier(self, spec):
        """Test layers 1..psi+1 switch from unsolvable to solvable once, at psi"""
        g = graph(spec)
        psi = psi_exact(g).value
        layers = [scan_layer(g, k, ExactOptions(), exhaustive=True) for k in range(1, psi + 2)]
        flags = [scan.all_solvable for scan in layers]
        assert flags == [False] * (psi - 1) + [True, True]
        assert all(scan.witness is not None for scan in layers[: psi - 1])
