"""End-to-end command line checks, run in process through main()."""
import json

import pytest

from functorlab.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestVerify:
    def test_pinned_gamma_epsilon_cell(self, capsys):
        code, out, _ = run(capsys, ["verify", "gamma-epsilon", "--k", "1", "--n", "2"])
        assert code == 0
        report = json.loads(out)
        assert report["summary"] == {
            "section": True,
            "kernel_match": True,
            "coker_invariants": [2],
            "index": 2,
        }
        assert report["cells"]
        assert all(c["verdict"] == "pass" for c in report["cells"])

    def test_all_suites_pass(self, capsys):
        code, out, _ = run(
            capsys, ["verify", "all", "--max-k", "2", "--max-n", "2", "--seed", "7"]
        )
        assert code == 0
        report = json.loads(out)
        suites = {c["params"]["suite"] for c in report["cells"]}
        assert suites == {"deviations", "aug-algebra", "gamma-epsilon", "schur", "morita"}

    def test_identical_invocations_print_identical_bytes(self, capsys):
        argv = ["verify", "schur", "--max-n", "2", "--seed", "5"]
        code1, out1, _ = run(capsys, argv)
        code2, out2, _ = run(capsys, argv)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_plain_format_one_line_per_cell(self, capsys):
        code, out, _ = run(
            capsys,
            ["verify", "deviations", "--max-n", "1", "--format", "plain"],
        )
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert all(l.startswith(("pass", "fail")) for l in lines)

    def test_csv_format_has_header(self, capsys):
        code, out, _ = run(
            capsys,
            ["verify", "deviations", "--max-n", "1", "--format", "csv"],
        )
        assert code == 0
        assert out.splitlines()[0] == "anchor,params,verdict,witness"

    def test_empty_grid_passes_vacuously(self, capsys):
        code, out, _ = run(
            capsys, ["verify", "gamma-epsilon", "--max-k", "0", "--max-n", "0"]
        )
        assert code == 0
        assert json.loads(out)["cells"] == []

    def test_unknown_suite_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nonsense"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestTable:
    def test_dims_json(self, capsys):
        code, out, _ = run(
            capsys, ["table", "dims", "--max-k", "2", "--max-n", "2", "--format", "json"]
        )
        assert code == 0
        rows = json.loads(out)["rows"]
        assert {"k": 1, "n": 2, "truncated_dim": 3, "divided_dim": 1} in rows
        assert {"k": 2, "n": 2, "truncated_dim": 6, "divided_dim": 3} in rows

    def test_index_values(self, capsys):
        code, out, _ = run(
            capsys, ["table", "index", "--max-k", "2", "--max-n", "2", "--format", "json"]
        )
        assert code == 0
        got = {(r["k"], r["n"]): r["index"] for r in json.loads(out)["rows"]}
        assert got == {(1, 1): 1, (1, 2): 2, (2, 1): 1, (2, 2): 4}

    def test_invariants_csv(self, capsys):
        code, out, _ = run(
            capsys,
            ["table", "invariants", "--max-k", "1", "--max-n", "2", "--format", "csv"],
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "k,n,torsion,free_rank"
        assert lines[2] == "1,2,2,0"

    def test_plain_is_aligned(self, capsys):
        code, out, _ = run(capsys, ["table", "dims", "--max-k", "1", "--max-n", "1"])
        assert code == 0
        header, row = out.splitlines()[:2]
        assert header.split() == ["k", "n", "truncated_dim", "divided_dim"]
        assert row.split() == ["1", "1", "2", "1"]


class TestFunctor:
    def test_dims(self, capsys):
        code, out, _ = run(
            capsys,
            ["functor", "dims", "--spec", '{"sym": 2}', "--q", "3", "--format", "plain"],
        )
        assert code == 0
        assert out.strip() == "6"

    def test_arrow_plain(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "functor",
                "arrow",
                "--spec",
                '{"sym": 2}',
                "--hom",
                "[[1, 2], [3, 4]]",
                "--format",
                "plain",
            ],
        )
        assert code == 0
        assert out.splitlines() == ["1 2 4", "6 10 16", "9 12 16"]

    def test_extract_reports_module(self, capsys):
        code, out, _ = run(capsys, ["functor", "extract", "--spec", '{"ext": 2}'])
        assert code == 0
        data = json.loads(out)
        assert data["generators"] == 1
        assert data["free_rank"] == 1
        assert data["torsion"] == []
        assert data["multiplicative"] is True

    def test_extract_rejects_wrong_degree(self, capsys):
        code, out, _ = run(
            capsys, ["functor", "extract", "--spec", '{"sym": 2}', "--n", "1"]
        )
        assert code == 1
        assert "error" in json.loads(out)

    def test_reconstruct_matches(self, capsys):
        code, out, _ = run(
            capsys, ["functor", "reconstruct", "--spec", '{"div": 2}', "--q", "2"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["matches"] is True
        assert data["free_rank"] == data["expected_rank"] == 3

    def test_missing_q_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["functor", "dims", "--spec", '{"sym": 2}'])
        assert code == 2
        assert "needs --q" in err

    def test_bad_spec_is_usage_error(self, capsys):
        code, _, err = run(
            capsys, ["functor", "dims", "--spec", '{"frobnicate": 1}', "--q", "2"]
        )
        assert code == 2
        assert "bad functor spec" in err

    def test_bad_matrix_is_usage_error(self, capsys):
        code, _, err = run(
            capsys,
            ["functor", "arrow", "--spec", '{"sym": 2}', "--hom", "[[1, 0.5]]"],
        )
        assert code == 2
        assert "bad matrix" in err
