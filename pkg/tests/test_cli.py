import json
import subprocess
import sys

from divprod.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_dineva(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "dineva", "--n", "12")
        assert code == 0 and out == "3 (exact)\n"

    def test_zeta_n(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "zeta_n", "--n", "6", "--s-int", "2")
        assert code == 0 and out == "3/2 (exact)\n"

    def test_gdineva_trivial(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "gdineva", "--n", "1", "--s-int", "7")
        assert code == 0 and out == "1 (exact)\n"

    def test_gdineva_forms_agree(self, capsys):
        outs = set()
        for form in ("divisor_sum", "product", "alternate", "zeta_local"):
            code, out, _ = run_cli(capsys, "eval", "gdineva", "--n", "6",
                                   "--s-int", "1", "--form", form)
            assert code == 0
            outs.add(out)
        assert outs == {"7/4 (exact)\n"}

    def test_real_s_is_approx(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "gdineva", "--n", "6",
                               "--s-real", "1")
        assert code == 0 and out.endswith("(approx)\n")

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "J", "--n", "6", "--s-int", "0",
                               "--output", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["value"] == "3" and doc["mode"] == "exact"
        assert doc["schema_version"] == 1

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "phi", "--n", "12",
                               "--output", "csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "quantity,n,s_mode,s_value,value,mode"
        assert lines[1] == "phi,12,none,,4,exact"

    def test_missing_s(self, capsys):
        code, _, err = run_cli(capsys, "eval", "zeta_n", "--n", "6")
        assert code == 2 and "requires" in err

    def test_bad_n(self, capsys):
        code, out, err = run_cli(capsys, "eval", "dineva", "--n", "0")
        assert code == 2 and out == ""

    def test_singular_zeta_n(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "zeta_n", "--n", "6", "--s-int", "0")
        assert code == 2 and out == ""


class TestVerify:
    def test_range_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--identity", "dineva",
                               "--n-range", "1:200", "--s-int", "0")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 201
        assert lines[-1] == ("summary: checked=200 passed=200 failed=0 "
                             "max_abs_discrepancy=0.0")

    def test_invalid_range_exits_2_with_no_output(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--identity", "dineva",
                                 "--n-range", "0:10")
        assert code == 2 and out == "" and "invalid range" in err

    def test_missing_s_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--identity", "mobius_sum",
                                 "--n-range", "1:10")
        assert code == 2 and out == ""

    def test_csv_header_and_determinism(self, capsys):
        args = ("verify", "--identity", "generalized_dineva",
                "--n-range", "1:50", "--s-int", "2", "--output", "csv")
        code1, out1, err1 = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        lines = out1.splitlines()
        assert lines[0] == ("identity,n,s_mode,s_value,lhs,rhs,mode,passed,"
                            "abs_discrepancy")
        assert lines[1] == "generalized_dineva,1,integer,2,1,1,exact,true,0.0"
        assert "summary" in err1

    def test_json_document(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--identity", "squarefree_sum",
                               "--n", "6", "--s-int", "1", "--output", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["summary"] == {"checked": 1, "passed": 1, "failed": 0,
                                  "max_abs_discrepancy": 0.0}
        assert doc["reports"][0]["lhs"] == "2"
        assert doc["reports"][0]["enumeration"] == "squarefree"

    def test_parallel_matches_serial(self, capsys):
        base = ("verify", "--identity", "generalized_dineva",
                "--n-range", "1:300", "--s-int", "1", "--output", "csv")
        code1, out1, _ = run_cli(capsys, *base)
        code2, out2, _ = run_cli(capsys, *base, "--parallelism", "3")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_real_s(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--identity",
                               "generalized_dineva", "--n-range", "1:100",
                               "--s-real", "0.5", "--tol", "1e-12")
        assert code == 0
        # n=1 is an empty product and stays exact even for real s
        assert "exact pass" in out.splitlines()[0]
        assert "approx pass" in out.splitlines()[5]

    def test_selberg_identity(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--identity",
                               "selberg_lambda_equiv", "--n-range", "1:60",
                               "--s-int", "2")
        assert code == 0

    def test_sigma_partial_with_depth(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--identity", "sigma_partial",
                               "--n-range", "1:30", "--s-int", "2", "--K", "40",
                               "--tol", "1e-9")
        assert code == 0
        assert "sigma_partial_truncated" in out

    def test_depth_only_for_sigma_partial(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--identity", "dineva",
                                 "--n", "6", "--s-int", "0", "--K", "10")
        assert code == 2 and out == "" and "sigma_partial" in err

    def test_custom_requires_weights(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--identity", "custom",
                               "--n-range", "1:10")
        assert code == 2 and "random-weights" in err

    def test_custom_deterministic(self, capsys):
        args = ("verify", "--identity", "custom", "--n-range", "1:40",
                "--random-weights", "5", "--seed", "11")
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "custom:w4" in out1

    def test_single_n(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--identity", "totient_sum",
                               "--n", "360")
        assert code == 0 and "pass" in out

    def test_failure_exit_code(self, capsys, monkeypatch):
        import divprod.cli as climod
        from divprod.identities import IdentityReport

        def fake_chunk(params):
            return [IdentityReport("dineva", 5, 0, 1, 2, "exact", False, 1.0,
                                   "squarefree")]

        monkeypatch.setattr(climod, "_verify_chunk", fake_chunk)
        code, out, _ = run_cli(capsys, "verify", "--identity", "dineva",
                               "--n", "5")
        assert code == 1 and "FAIL" in out

    def test_consistency_exit_code(self, capsys, monkeypatch):
        import divprod.cli as climod
        from divprod.errors import ConsistencyError

        def boom(params):
            raise ConsistencyError("forms disagree")

        monkeypatch.setattr(climod, "_verify_chunk", boom)
        code, _, err = run_cli(capsys, "verify", "--identity", "dineva",
                               "--n", "5")
        assert code == 3 and "consistency" in err


class TestZetaCommand:
    def test_reference_comparison(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--s", "2",
                               "--prime-bound", "10000")
        assert code == 0
        fields = dict(line.split(" = ") for line in out.splitlines()
                      if " = " in line)
        assert float(fields["abs_diff"]) < 1e-3
        assert float(fields["tail_factor"]) >= 1.0

    def test_tiny_bound(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--s", "2", "--prime-bound", "2")
        assert code == 0 and "truncated_product = 1.25" in out

    def test_domain_error(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--s", "1")
        assert code == 2 and out == ""

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "zeta", "--s", "3", "--prime-bound",
                               "1000", "--output", "json")
        doc = json.loads(out)
        assert code == 0 and doc["primes_used"] == 168


class TestSieveCommand:
    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "sieve", "--n", "6", "--s-int", "0")
        assert code == 0
        assert out.splitlines() == [
            "n=6 s=0 J_n=3",
            "d mu J_over_d lambda",
            "1 1 3 1",
            "2 -1 3/2 -1/2",
            "3 -1 2 -2/3",
            "6 1 1 1/3",
        ]

    def test_modulus_one(self, capsys):
        code, out, _ = run_cli(capsys, "sieve", "--n", "1", "--s-int", "0")
        assert code == 0 and "1 1 1 1" in out.splitlines()

    def test_q_option(self, capsys):
        code, out, _ = run_cli(capsys, "sieve", "--n", "6", "--s-int", "0",
                               "--Q", "4", "2")
        assert code == 0 and out.splitlines()[-1] == "Q X=4 R=2 = 5/2"

    def test_decay_option(self, capsys):
        code, out, _ = run_cli(capsys, "sieve", "--n", "6", "--s-int", "0",
                               "--decay-s", "0,1,2")
        assert code == 0 and "decay: d s lambda" in out

    def test_csv(self, capsys):
        code, out, err = run_cli(capsys, "sieve", "--n", "6", "--s-int", "0",
                                 "--Q", "4", "2", "--output", "csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "n,s_mode,s_value,d,mu,J_over_d,lambda"
        assert lines[1] == "6,integer,0,1,1,3,1"
        assert "Q X=4 R=2 = 5/2" in err

    def test_defaults_to_classical_s(self, capsys):
        code1, out1, _ = run_cli(capsys, "sieve", "--n", "10")
        code2, out2, _ = run_cli(capsys, "sieve", "--n", "10", "--s-int", "0")
        assert code1 == code2 == 0 and out1 == out2


class TestOutputFile:
    def test_out_flag(self, capsys, tmp_path):
        target = tmp_path / "report.csv"
        code, out, _ = run_cli(capsys, "verify", "--identity", "dineva",
                               "--n-range", "1:10", "--s-int", "0",
                               "--output", "csv", "--out", str(target))
        assert code == 0 and out == ""
        lines = target.read_text().splitlines()
        assert len(lines) == 11  # header + 10 rows


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "divprod", "eval", "dineva", "--n", "12"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "3 (exact)\n"


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "divprod", "verify", "--identity", "bogus",
         "--n", "5"],
        capture_output=True, text=True)
    assert proc.returncode == 2
