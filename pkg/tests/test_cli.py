import json

import pytest

from weq.cli import main

XABBY = """\
constants a b
variables X Y
equation X a b Y = Y b a X
semigroup builtin:trivial
"""

XA_BX = """\
constants a b
variables X
equation X a = b X
semigroup builtin:trivial
"""

B2_CONSTRAINED = """\
constants a b
variables X Y
equation X a Y = Y a X
semigroup builtin:b2
map a -> a
map b -> b
map X -> 0
map Y -> 0
"""

N2_FINITE = """\
constants a
variables X
equation X a = a X
semigroup builtin:n2
map a -> x
map X -> x
"""

SYSTEM = """\
; two independent commutation requirements (still quadratic as a system)
constants a b
variables X Y
equation X a = a X
equation Y b = b Y
semigroup builtin:trivial
"""


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in [
        ("xabby.weq", XABBY), ("xa_bx.weq", XA_BX),
        ("b2.weq", B2_CONSTRAINED), ("n2.weq", N2_FINITE),
        ("system.weq", SYSTEM),
    ]:
        p = tmp_path / name
        p.write_text(text)
        out[name] = str(p)
    return out


class TestCheck:
    def test_satisfiable(self, files, capsys):
        assert main(["check", files["xabby.weq"]]) == 0
        assert "satisfiable" in capsys.readouterr().out

    def test_unsatisfiable(self, files, capsys):
        assert main(["check", files["xa_bx.weq"]]) == 3
        assert "unsatisfiable" in capsys.readouterr().out

    def test_malformed_exits_2(self, tmp_path, capsys):
        p = tmp_path / "bad.weq"
        p.write_text("constants a\nvariables X\nequation X a\nsemigroup builtin:trivial\n")
        assert main(["check", str(p)]) == 2
        assert "line 3" in capsys.readouterr().err

    def test_missing_file_exits_2(self, capsys):
        assert main(["check", "/nonexistent/x.weq"]) == 2

    def test_json_report(self, files, capsys):
        assert main(["check", files["xabby.weq"], "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert set(report) == {
            "instance", "solvable", "infinite", "exp_verdict",
            "certificate", "graph", "timings",
        }
        assert set(report["graph"]) == {
            "solvable", "infinite", "state_count", "transition_count", "scc_count",
        }
        assert report["solvable"] is True
        assert report["infinite"] is True
        assert report["exp_verdict"] == "InfiniteCertified"
        assert report["certificate"] is not None
        assert report["graph"]["state_count"] > 0

    def test_json_schema_stable(self, files, capsys):
        # identical runs agree except for the timing values
        def snap():
            assert main(["check", files["xabby.weq"], "--json"]) == 0
            report = json.loads(capsys.readouterr().out)
            report.pop("timings")
            return report

        assert snap() == snap()

    def test_crosscheck(self, files, capsys):
        assert main(["check", files["xabby.weq"], "--json", "--crosscheck", "3"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["oracle_crosscheck"]["agree"] is True

    def test_system_reduced_to_single_equation(self, files, capsys):
        # multi-equation files run through the separator encoding
        assert main(["check", files["system.weq"], "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert len(report["instance"]["equations"]) == 1
        assert "#" in report["instance"]["constants"]
        assert report["solvable"] is True and report["infinite"] is True

    def test_system_solutions_match_oracle(self, files, capsys):
        assert main(["solve", files["system.weq"], "--max-len", "2", "--json"]) == 0
        solved = json.loads(capsys.readouterr().out)["solutions"]
        assert {"X": "a", "Y": "b"} in solved
        assert {"X": "aa", "Y": "bb"} in solved
        assert all(set(s["X"]) == {"a"} and set(s["Y"]) == {"b"} for s in solved)


class TestInfinite:
    def test_yes(self, files):
        assert main(["infinite", files["xabby.weq"]]) == 0

    def test_no(self, files):
        assert main(["infinite", files["n2.weq"]]) == 3

    def test_unknown_verdict_field_outside_variety(self, files, capsys):
        assert main(["infinite", files["b2.weq"], "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["exp_verdict"] in ("InfiniteCertified", "Unknown")


class TestPump:
    def test_prints_growing_solutions(self, files, capsys):
        assert main(["pump", files["xabby.weq"], "--m", "3"]) == 0
        lines = [l for l in capsys.readouterr().out.splitlines() if l.startswith("m=")]
        assert len(lines) == 4
        assert "X=abaaba" in lines[1]

    def test_exit_4_outside_variety(self, files, capsys):
        assert main(["pump", files["b2.weq"]]) == 4
        assert "unknown" in capsys.readouterr().err

    def test_exit_3_when_finite(self, files):
        assert main(["pump", files["n2.weq"]]) == 3

    def test_certificate_roundtrip(self, files, tmp_path, capsys):
        cert = tmp_path / "cert.json"
        assert main(["pump", files["xabby.weq"], "--m", "1", "--cert-out", str(cert)]) == 0
        capsys.readouterr()
        assert main(["pump", files["xabby.weq"], "--m", "2", "--cert-in", str(cert)]) == 0
        out = capsys.readouterr().out
        assert "X=abaabaaba" in out

    def test_rejects_tampered_certificate(self, files, tmp_path, capsys):
        cert = tmp_path / "cert.json"
        assert main(["pump", files["xabby.weq"], "--m", "1", "--cert-out", str(cert)]) == 0
        capsys.readouterr()
        data = json.loads(cert.read_text())
        data["base"]["X"] = ["b"]
        cert.write_text(json.dumps(data))
        assert main(["pump", files["xabby.weq"], "--cert-in", str(cert)]) == 2


class TestSolveOracleGraph:
    def test_solve_matches_oracle(self, files, capsys):
        assert main(["solve", files["xabby.weq"], "--max-len", "3", "--json"]) == 0
        solved = json.loads(capsys.readouterr().out)["solutions"]
        assert main(["oracle", files["xabby.weq"], "--max-len", "3", "--json"]) == 0
        brute = json.loads(capsys.readouterr().out)["solutions"]
        assert solved == brute

    def test_solve_exit_codes(self, files):
        assert main(["solve", files["xabby.weq"], "--max-len", "2"]) == 0
        assert main(["solve", files["xa_bx.weq"], "--max-len", "4"]) == 3

    def test_oracle_budget(self, files, capsys):
        assert main(["oracle", files["xabby.weq"], "--max-len", "8", "--budget", "10"]) == 2
        assert "budget" in capsys.readouterr().err

    def test_graph_dot_deterministic(self, files, tmp_path, capsys):
        d1, d2 = tmp_path / "a.dot", tmp_path / "b.dot"
        assert main(["graph", files["xabby.weq"], "--dot", str(d1)]) == 0
        assert main(["graph", files["xabby.weq"], "--dot", str(d2)]) == 0
        assert d1.read_bytes() == d2.read_bytes()
        assert b"digraph" in d1.read_bytes()

    def test_non_quadratic_exits_5(self, tmp_path):
        p = tmp_path / "cubic.weq"
        p.write_text(
            "constants a\nvariables X\nequation X X X = a a a\nsemigroup builtin:trivial\n"
        )
        assert main(["check", str(p)]) == 5


class TestSemigroupCmd:
    def test_b2_report_witness_line(self, capsys):
        assert main(["semigroup", "builtin:b2", "--report"]) == 0
        out = capsys.readouterr().out
        assert "dlg: False" in out
        assert "ba ~L a but b^ω·a = 0" in out

    def test_json(self, capsys):
        assert main(["semigroup", "builtin:z3", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["variety"]["group"] is True
        assert data["variety"]["dlg"] is True

    def test_stabilizers_listing(self, capsys):
        assert main(["semigroup", "builtin:b2", "--report", "--stabilizers"]) == 0
        out = capsys.readouterr().out
        assert "stab_L(a) = {1,ab}" in out


class TestHunt:
    def test_budget_zero(self, tmp_path, capsys):
        findings = tmp_path / "f.jsonl"
        code = main([
            "hunt", "--sigma", "1", "--vars", "1", "--max-len", "2",
            "--budget", "0", "--out", str(findings),
        ])
        assert code == 2
        assert findings.read_text() == ""

    def test_trivial_sweep_no_suspects(self, capsys):
        code = main([
            "hunt", "--sigma", "2", "--vars", "2", "--max-len", "4",
            "--semigroup", "builtin:trivial", "--budget", "100000",
        ])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["suspects"] == 0
        assert report["total"] > 0
        assert report["infinite_certified"] > 0

    def test_seeded_runs_agree(self, capsys):
        args = ["hunt", "--sigma", "2", "--vars", "1", "--max-len", "3",
                "--budget", "100000", "--seed", "7"]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        assert capsys.readouterr().out == first


class TestUsage:
    def test_no_command(self):
        assert main([]) == 2

    def test_unknown_command(self):
        assert main(["frobnicate"]) == 2
