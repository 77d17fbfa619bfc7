"""
Tests for the psi command line
"""

import json

import pytest

from domcover import __version__
from domcover.cli import EXIT_FAILED, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestFormula:
    """Test the formula command"""

    def test_path(self, capsys):
        """Test psi(P6) with the decomposition"""
        code, doc = run(capsys, "formula", "--family", "path:6", "--show-terms")
        assert code == EXIT_OK
        assert doc["psi"] == 18
        assert doc["decomposition"] == {"n": 6, "alpha": 1, "k": 1}
        assert doc["version"] == __version__
        assert doc["command"] == "formula"

    def test_btree(self, capsys):
        """Test psi(B5) with its terms"""
        code, doc = run(capsys, "formula", "--family", "btree:5")
        assert code == EXIT_OK
        assert doc["psi"] == 4777
        assert doc["result"]["terms"]["total"] == 4777

    def test_wheel(self, capsys):
        """Test psi(W6)"""
        _, doc = run(capsys, "formula", "--family", "wheel:6")
        assert doc["psi"] == 4

    def test_bad_family(self, capsys):
        """Test an unknown family is a usage error"""
        code, doc = run(capsys, "formula", "--family", "dodecahedron:3")
        assert code == EXIT_USAGE
        assert doc["status"] == "error"

    def test_bad_parameter(self, capsys):
        """Test an out-of-range parameter is a usage error"""
        code, _ = run(capsys, "formula", "--family", "cycle:2")
        assert code == EXIT_USAGE


class TestCheck:
    """Test the check command"""

    def test_solvable(self, capsys, tmp_path):
        """Test a solvable configuration with a written witness"""
        witness = tmp_path / "witness.json"
        code, doc = run(
            capsys,
            "check",
            "--family",
            "path:4",
            "--config",
            "[5, 0, 0, 0]",
            "--emit-witness",
            str(witness),
        )
        assert code == EXIT_OK
        assert doc["decision"]["outcome"] == "solvable"
        assert doc["witness_verified"] is True
        assert "moves" in json.loads(witness.read_text())

    def test_unsolvable(self, capsys):
        """Test an empty configuration is unsolvable but still exits cleanly"""
        code, doc = run(capsys, "check", "--family", "path:4", "--config", "[0, 0, 0, 0]")
        assert code == EXIT_OK
        assert doc["decision"]["outcome"] == "unsolvable"
        assert doc["decision"]["witness"] is None

    def test_compact_config(self, capsys):
        """Test the v:count form"""
        code, doc = run(capsys, "check", "--family", "cycle:5", "--config", "0:4")
        assert code == EXIT_OK
        assert doc["decision"]["solvable"]

    def test_edge_list_graph(self, capsys, tmp_path):
        """Test a graph read from an edge-list file"""
        path = tmp_path / "p3.txt"
        path.write_text("0 1\n1 2\n")
        code, doc = run(capsys, "check", "--graph", str(path), "--config", "[0, 1, 0]")
        assert code == EXIT_OK
        assert doc["decision"]["solvable"]

    def test_long_inline_config(self, capsys):
        """Test an inline config longer than any file name"""
        compact = ",".join(f"{v}:1" for v in range(127))
        assert len(compact) > 255
        code, doc = run(capsys, "check", "--family", "btree:6", "--config", compact)
        assert code == EXIT_OK
        assert doc["decision"]["solvable"]

    def test_long_inline_json(self, capsys):
        """Test a long inline JSON list"""
        counts = json.dumps([1] * 127)
        code, doc = run(capsys, "check", "--family", "btree:6", "--config", counts)
        assert code == EXIT_OK
        assert doc["decision"]["solvable"]

    def test_config_file(self, capsys, tmp_path):
        """Test a configuration read from a JSON file"""
        path = tmp_path / "c.json"
        path.write_text('{"counts": [0, 0, 0, 4]}')
        code, doc = run(capsys, "check", "--family", "path:4", "--config", str(path))
        assert code == EXIT_OK
        assert doc["decision"]["outcome"] == "unsolvable"

    def test_wrong_length(self, capsys):
        """Test a configuration of the wrong size"""
        code, _ = run(capsys, "check", "--family", "path:4", "--config", "[1, 0]")
        assert code == EXIT_USAGE


class TestExact:
    """Test the exact command"""

    def test_cycle(self, capsys):
        """Test psi(C5)"""
        code, doc = run(capsys, "exact", "--family", "cycle:5")
        assert code == EXIT_OK
        assert doc["psi"] == 4
        assert doc["result"]["method"] == "exhaustive"

    def test_budget(self, capsys):
        """Test a one-node budget exits with the unknown code"""
        code, doc = run(
            capsys,
            "exact",
            "--family",
            "path:6",
            "--max-nodes",
            "1",
            "--no-prune-dominance",
            "--no-prune-potential",
            "--no-prune-acyclic",
        )
        assert code == EXIT_UNKNOWN
        assert doc["psi"] is None
        assert doc["result"]["budget_limited"]


class TestWorst:
    """Test the worst command"""

    def test_certify(self, capsys, tmp_path):
        """Test the B2 construction is certified and written out"""
        target = tmp_path / "b2.json"
        code, doc = run(
            capsys, "worst", "--family", "btree:2", "--certify", "--emit", str(target)
        )
        assert code == EXIT_OK
        assert doc["worst"]["total"] == 10
        assert doc["certification"]["outcome"] == "unsolvable"
        assert json.loads(target.read_text())["counts"] == [0, 0, 0, 1, 0, 0, 9]

    def test_dot(self, capsys, tmp_path):
        """Test DOT output"""
        target = tmp_path / "c4.dot"
        code, _ = run(capsys, "worst", "--family", "cycle:4", "--dot", str(target))
        assert code == EXIT_OK
        assert "0 -- 1" in target.read_text()


class TestVerify:
    """Test the verify command"""

    def test_cycles(self, capsys):
        """Test a passing sweep"""
        code, doc = run(capsys, "verify", "--family", "cycle", "--range", "3..5")
        assert code == EXIT_OK
        assert doc["report"]["passed"]
        assert len(doc["report"]["rows"]) == 3

    def test_cycle_six_fails(self, capsys):
        """Test the known disagreement exits with the failure code"""
        code, doc = run(capsys, "verify", "--family", "cycle", "--range", "6")
        assert code == EXIT_FAILED
        assert not doc["report"]["rows"][0]["agree"]

    def test_unknown_family(self, capsys):
        """Test unknown family names"""
        code, _ = run(capsys, "verify", "--family", "hypercube", "--range", "3..4")
        assert code == EXIT_USAGE

    def test_infeasible(self, capsys):
        """Test exhaustive B3 is refused"""
        code, doc = run(capsys, "verify", "--family", "btree", "--range", "3")
        assert code == EXIT_USAGE
        assert "--lower-bound-only" in doc["message"]


class TestProptest:
    """Test the proptest command"""

    def test_formula_suite(self, capsys):
        """Test one suite by name"""
        code, doc = run(capsys, "proptest", "--suite", "formula-identities", "--seed", "3")
        assert code == EXIT_OK
        assert doc["passed"]
        assert doc["seed"] == 3
        assert [s["suite"] for s in doc["suites"]] == ["formula-identities"]


def test_version(capsys):
    """Test --version"""
    with pytest.raises(SystemExit):
        main(["--version"])
    assert __version__ in capsys.readouterr().out
