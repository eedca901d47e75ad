import pytest

from polytrav import cli
from polytrav.verify import AuditReport

TRIANGLE = "3 3\n1 2\n2 3\n1 3\n"
P3 = "3 2\n1 2\n2 3\n"
CUBE2 = "00\n01\n10\n11\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestListings:
    def test_spanning_trees_triangle(self, write, capsys):
        code, out, _ = run(capsys, "spanning-trees", write("t.graph", TRIANGLE))
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 3
        assert set(lines) == {"110", "101", "011"}

    def test_explicit_with_start(self, write, capsys):
        code, out, _ = run(
            capsys, "explicit", write("c.set", CUBE2), "--start", "00"
        )
        assert code == 0
        assert out.splitlines() == ["00", "10", "11", "01"]

    def test_max_matchings_as_cost_sugar(self, write, capsys):
        code, out, _ = run(capsys, "matchings", write("p.graph", P3), "--cost=-1,-1")
        assert code == 0
        assert out.splitlines() == ["10", "01"]
        code, out2, _ = run(capsys, "max-matchings", write("p2.graph", P3))
        assert code == 0
        assert out2 == out

    def test_sets_output(self, write, capsys):
        _, out, _ = run(capsys, "explicit", write("c.set", CUBE2), "--sets")
        assert out.splitlines() == ["00\t", "10\t1", "11\t1,2", "01\t2"]

    def test_limit_is_a_prefix(self, write, capsys):
        path = write("c.set", CUBE2)
        _, full, _ = run(capsys, "explicit", path)
        code, prefix, _ = run(capsys, "explicit", path, "--limit", "2")
        assert code == 0
        assert prefix.splitlines() == full.splitlines()[:2]

    def test_ideals_and_antichains(self, write, capsys):
        path = write("chain.poset", "2 1\n1 2\n")
        _, ideals, _ = run(capsys, "ideals", path)
        assert set(ideals.splitlines()) == {"00", "10", "11"}
        _, antichains, _ = run(capsys, "antichains", path)
        assert set(antichains.splitlines()) == {"00", "10", "01"}

    def test_vertices_of_the_square(self, write, capsys):
        code, out, _ = run(capsys, "vertices", write("sq.poly", "0 2\n"))
        assert code == 0
        assert out.splitlines() == ["00", "10", "11", "01"]

    def test_matroid_subcommands(self, write, capsys):
        path = write("u.matroid", "uniform 4 2\n")
        _, bases, _ = run(capsys, "matroid-bases", path)
        assert len(bases.splitlines()) == 6
        _, independent, _ = run(capsys, "matroid-independent", path)
        assert len(independent.splitlines()) == 11

    def test_determinism(self, write, capsys):
        path = write("t.graph", TRIANGLE)
        _, first, _ = run(capsys, "spanning-trees", path, "--stats")
        _, second, _ = run(capsys, "spanning-trees", path, "--stats")
        assert first == second


class TestDiagnostics:
    def test_missing_file(self, capsys):
        code, out, err = run(capsys, "forests", "/nonexistent/x.graph")
        assert code == 2 and not out and "cannot read" in err

    def test_malformed_graph(self, write, capsys):
        code, _, err = run(capsys, "forests", write("bad.graph", "2 9\n1 2\n"))
        assert code == 2 and "promises 9" in err

    def test_disconnected_spanning_trees(self, write, capsys):
        code, _, err = run(capsys, "spanning-trees", write("d.graph", "4 1\n1 2\n"))
        assert code == 2 and "connected" in err

    def test_infeasible_polytope(self, write, capsys):
        code, _, err = run(
            capsys, "vertices", write("i.poly", "2 2\n1 0 -1\n-1 0 0\n")
        )
        assert code == 2 and "infeasible" in err

    def test_non_01_polytope(self, write, capsys):
        code, _, err = run(capsys, "vertices", write("f.poly", "1 2\n2 0 1\n"))
        assert code == 2 and "not a 0/1-polytope" in err

    def test_bad_cost_vector(self, write, capsys):
        code, _, err = run(
            capsys, "explicit", write("c.set", CUBE2), "--cost", "1,2,3"
        )
        assert code == 2 and "3 entries" in err and "2 positions" in err

    def test_non_member_start(self, write, capsys):
        code, _, err = run(
            capsys, "explicit", write("c.set", "00\n11\n"), "--start", "01"
        )
        assert code == 2 and "not in the vertex set" in err

    def test_unknown_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["frobnicate", "x"])
        assert excinfo.value.code == 2

    def test_zero_limit(self, write, capsys):
        code, _, err = run(capsys, "explicit", write("c.set", CUBE2), "--limit", "0")
        assert code == 2 and "at least 1" in err


class TestVerifyFlag:
    def test_passing_audit(self, write, capsys):
        code, out, err = run(
            capsys, "spanning-trees", write("t.graph", TRIANGLE), "--verify"
        )
        assert code == 0
        assert len(out.splitlines()) == 3
        assert "ok   consecutive outputs are valid flips" in err
        assert "FAIL" not in err

    def test_verify_checks_explicit_completeness(self, write, capsys):
        code, _, err = run(capsys, "explicit", write("c.set", CUBE2), "--verify")
        assert code == 0
        assert "permutation of the expected 4 elements" in err

    def test_verify_cost_mode_expects_minima(self, write, capsys):
        code, _, err = run(
            capsys,
            "explicit",
            write("c.set", CUBE2),
            "--cost=1,1",
            "--verify",
        )
        assert code == 0
        assert "permutation of the expected 1 elements" in err

    def test_truncated_run_audits_the_prefix(self, write, capsys):
        code, out, err = run(
            capsys, "explicit", write("c.set", CUBE2), "--limit", "2", "--verify"
        )
        assert code == 0
        assert "permutation of the expected 2 elements" in err

    def test_failed_audit_exits_1(self, write, capsys, monkeypatch):
        def broken_audit(listing, expected, flip_checker=None):
            report = AuditReport()
            report.add("genlex order", False, "violated at index 1")
            return report

        monkeypatch.setattr(cli, "audit_traversal", broken_audit)
        code, _, err = run(
            capsys, "explicit", write("c.set", CUBE2), "--verify"
        )
        assert code == 1
        assert "FAIL genlex order" in err


class TestReportFlag:
    def test_report_files_written(self, write, capsys, tmp_path):
        out_dir = tmp_path / "figures"
        code, _, err = run(
            capsys,
            "explicit",
            write("c.set", CUBE2),
            "--report",
            str(out_dir),
        )
        assert code == 0
        names = {p.name for p in out_dir.iterdir()}
        assert names == {"transitions.png", "oracle_calls.png", "summary.txt"}
        summary = (out_dir / "summary.txt").read_text()
        assert "objects: 4" in summary
        assert err.count("report:") == 3
