import json

import pytest

from mfl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_binomial_example(self, capsys):
        code, out, _ = run(capsys, "classify", "--n", "4", "--ell", "2", "--w", "3214")
        assert code == 0
        assert "verdict: binomial" in out
        assert "generator: P_1*P_23 + P_3*P_12" in out

    def test_zero_example(self, capsys):
        code, out, _ = run(capsys, "classify", "--n", "4", "--ell", "0", "--w", "1234")
        assert code == 0
        assert "verdict: zero" in out

    def test_nonbinomial_example(self, capsys):
        code, out, _ = run(capsys, "classify", "--n", "3", "--ell", "1", "--w", "231")
        assert code == 0
        assert "verdict: nonbinomial" in out
        assert "monomial: P_2*P_13" in out

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "--format", "json", "classify", "--n", "4", "--ell", "2",
            "--w", "3214",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["schema"] == "mfl/1"
        assert obj["verdict"] == "binomial"
        assert obj["combinatorial_class"] == "T"
        assert obj["in_pattern_family"] is True

    def test_malformed_w_exits_2(self, capsys):
        code, _, err = run(capsys, "classify", "--n", "4", "--ell", "2", "--w", "32x4")
        assert code == 2
        assert "error" in err

    def test_wrong_length_exits_2(self, capsys):
        code, _, err = run(capsys, "classify", "--n", "4", "--ell", "2", "--w", "321")
        assert code == 2

    def test_out_of_range_ell_exits_2(self, capsys):
        code, _, err = run(capsys, "classify", "--n", "4", "--ell", "4", "--w", "3214")
        assert code == 2

    def test_oracle_bound_exits_2(self, capsys):
        code, _, err = run(
            capsys, "classify", "--n", "8", "--ell", "0", "--w", "12345678"
        )
        assert code == 2


class TestTables:
    def test_table2(self, capsys):
        code, out, _ = run(capsys, "tables", "table2", "--n-max", "5")
        assert code == 0
        assert out.startswith("n,ell,binomial_count,zero_count,nonbinomial_count\n")
        assert "5,2,24,8,88" in out
        assert "# total n=5: 144 (reference prints 114" in out

    def test_table2_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "tables", "table2", "--n-max", "4")
        assert code == 0
        obj = json.loads(out)
        assert obj["diffs"] == []
        assert obj["totals"]["4"] == 30

    def test_table1(self, capsys):
        code, out, _ = run(capsys, "tables", "table1")
        assert code == 0
        assert "toric 4/2: 1342 1432 3214 3241 4231 4321" in out
        assert "ideal 2/321" in out

    def test_zn(self, capsys):
        code, out, _ = run(capsys, "zn", "--n-max", "15")
        assert code == 0
        assert "3,123" in out
        assert "# |Z_15| = 987" in out


class TestIdeal:
    def test_unrestricted_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "ideal", "--n", "4", "--ell", "2")
        assert code == 0
        obj = json.loads(out)
        assert obj["verdict"] == "binomial"
        assert len(obj["generators"]) == 10

    def test_restricted_text(self, capsys):
        code, out, _ = run(
            capsys, "ideal", "--n", "4", "--ell", "2", "--w", "3214"
        )
        assert code == 0
        assert out.strip() == "P_1*P_23 + P_3*P_12"

    def test_all_pairs_flag(self, capsys):
        code_a, out_a, _ = run(capsys, "--format", "json", "ideal", "--n", "4", "--ell", "0")
        code_b, out_b, _ = run(
            capsys, "--all-pairs", "--format", "json", "ideal", "--n", "4", "--ell", "0"
        )
        assert code_a == code_b == 0
        assert len(json.loads(out_b)["generators"]) >= len(json.loads(out_a)["generators"])


class TestTableaux:
    def test_json_listing(self, capsys):
        code, out, _ = run(
            capsys, "--format", "json", "tableaux", "--n", "3", "--ell", "1",
            "--w", "321",
        )
        assert code == 0
        obj = json.loads(out)
        assert len(obj["tableaux"]) == 20
        assert all("image" in t for t in obj["tableaux"])

    def test_text_listing(self, capsys):
        code, out, _ = run(capsys, "tableaux", "--n", "3", "--w", "123")
        assert code == 0
        assert "1 | 1" in out


class TestVerify:
    def test_coherence_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "coherence", "--n-max", "5")
        assert code == 0
        assert out.startswith("PASS coherence")

    def test_theorem_b_suite_json(self, capsys):
        code, out, _ = run(
            capsys, "--format", "json", "verify", "--suite", "theoremB",
            "--n-max", "4",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["ok"] is True
        assert obj["mismatches"] == []

    def test_unknown_suite_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "verify", "--suite", "bogus")
        assert exc.value.code == 2

    def test_la_cap_flag_exits_2(self, capsys):
        code, _, err = run(
            capsys, "--la-cap", "3", "verify", "--suite", "theoremA", "--n-max", "4"
        )
        assert code == 2
        assert "cap" in err


class TestSweep:
    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n", "3", "--ell", "1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,ell,w,verdict,class,tags"
        assert "3,1,231,nonbinomial,N," in lines
        assert "3,1,321,binomial,T,base" in lines
        assert len(lines) == 7

    def test_all_ells(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n", "3")
        assert code == 0
        assert len(out.strip().splitlines()) == 1 + 18

    def test_jobs_deterministic(self, capsys):
        _, single, _ = run(capsys, "sweep", "--n", "4")
        _, multi, _ = run(capsys, "--jobs", "2", "sweep", "--n", "4")
        assert single == multi
