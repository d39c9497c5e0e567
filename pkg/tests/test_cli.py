"""End-to-end CLI behavior: output formats, determinism, exit codes."""

import json
import math

import pytest

from divsum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSum:
    def test_headline(self, capsys):
        code, out, _ = run(capsys, "sum", "--k", "1")
        assert code == 0 and out == "-1/12\n"

    def test_alternating(self, capsys):
        code, out, _ = run(capsys, "sum", "--k", "1", "--alternating")
        assert code == 0 and out == "1/4\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "sum", "--k", "3")
        assert code == 0
        assert json.loads(out) == {
            "k": 3, "kind": "powers_all_plus", "value": "1/120",
            "method": "closed_form",
        }

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "sum", "--k", "2")
        assert code == 0
        assert out.splitlines()[0] == "k,kind,value,method"
        assert out.splitlines()[1] == "2,powers_all_plus,0,closed_form"

    def test_k_zero_usage_error(self, capsys):
        code, _, err = run(capsys, "sum", "--k", "0")
        assert code == 2
        assert "1 <= k <= 200" in err


class TestZetaAndCheck:
    def test_zeta_values(self, capsys):
        assert run(capsys, "zeta", "--neg-k", "3")[1] == "1/120\n"
        assert run(capsys, "zeta", "--neg-k", "2")[1] == "0\n"

    def test_zeta_bad_k(self, capsys):
        assert run(capsys, "zeta", "--neg-k", "0")[0] == 2

    def test_check_passes(self, capsys):
        code, out, _ = run(capsys, "check", "--k", "5", "--terms", "100000")
        assert code == 0
        assert out.splitlines()[-1] == "pass"

    def test_check_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "check", "--k", "2",
                           "--terms", "1000")
        obj = json.loads(out)
        assert code == 0 and obj["status"] == "pass"
        assert obj["residual"] < 1e-8


class TestCoeff:
    def test_pass_and_ladder(self, capsys):
        code, out, _ = run(capsys, "coeff", "--n", "2", "--levels", "8")
        lines = out.splitlines()
        assert code == 0 and lines[-1] == "pass"
        assert lines[-3].startswith("extrapolant -2")

    def test_quiet_suppresses_ladder(self, capsys):
        _, loud, _ = run(capsys, "coeff", "--n", "1", "--levels", "6")
        _, quiet, _ = run(capsys, "--quiet", "coeff", "--n", "1", "--levels", "6")
        assert len(quiet.splitlines()) == 3
        assert len(loud.splitlines()) == 9

    def test_csv_ladder_rows(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "coeff", "--n", "1",
                           "--levels", "4")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "parameter,value_re,value_im"
        assert len(lines) == 5
        assert lines[1].startswith("0.5,")

    def test_out_of_range(self, capsys):
        assert run(capsys, "coeff", "--n", "33")[0] == 2


class TestMollify:
    def test_target_s(self, capsys):
        code, out, _ = run(capsys, "--quiet", "mollify", "--target", "S")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("extrapolant 0.25")
        assert lines[-1] == "converged"

    def test_target_t0_diverges(self, capsys):
        code, out, _ = run(capsys, "--quiet", "mollify", "--target", "T0",
                           "--p", "4", "--levels", "7")
        assert code == 0
        assert out.startswith("diverges exponent ")
        assert out.rstrip().endswith("sign -")

    def test_target_dirichlet(self, capsys):
        code, out, _ = run(capsys, "--quiet", "mollify", "--target",
                           "dirichlet", "--levels", "6")
        assert code == 0
        exponent = float(out.split()[2])
        assert abs(exponent - 1.0) < 0.05
        assert out.rstrip().endswith("sign +")

    def test_target_jump(self, capsys):
        code, out, _ = run(capsys, "--quiet", "mollify", "--target",
                           "jump:heaviside", "--levels", "6")
        assert code == 0
        assert out.splitlines()[0].startswith("extrapolant 0.5")

    def test_incompatible_p_rejected(self, capsys):
        assert run(capsys, "mollify", "--target", "T0", "--p", "0")[0] == 2
        assert run(capsys, "mollify", "--target", "dirichlet", "--p", "2")[0] == 2

    def test_json_shape(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "mollify", "--target",
                           "T0", "--p", "4", "--levels", "5")
        obj = json.loads(out)
        assert code == 0
        assert obj["extrapolated"] is None
        assert obj["sign"] == -1
        assert abs(obj["growth_exponent"] - 2.0) < 0.25


class TestCasimir:
    def test_json_natural_units(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "casimir", "--d", "1")
        obj = json.loads(out)
        assert code == 0
        assert obj["units"] == "natural"
        assert abs(obj["energy"] + math.pi / 24) < 1e-9
        assert abs(obj["force"] - math.pi / 24) < 1e-9
        assert list(obj) == ["d", "energy", "force", "units"]

    def test_text(self, capsys):
        code, out, _ = run(capsys, "casimir", "--d", "2")
        assert code == 0
        assert out.splitlines()[1] == f"force {math.pi / 96:.12g}"

    def test_invalid_d(self, capsys):
        assert run(capsys, "casimir", "--d", "0")[0] == 2
        assert run(capsys, "casimir", "--d", "-3")[0] == 2


class TestTable:
    def test_small_table(self, capsys):
        code, out, _ = run(capsys, "table", "--k-max", "3")
        assert code == 0
        rows = [line.split("\t") for line in out.splitlines()]
        assert [r[1] for r in rows] == ["-1/12", "0", "1/120"]
        assert all(r[3] == "ok" for r in rows)

    def test_k_max_30_all_match(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "table", "--k-max", "30")
        obj = json.loads(out)
        assert code == 0
        assert len(obj) == 30
        assert all(row["match"] for row in obj)

    def test_invalid_k_max(self, capsys):
        assert run(capsys, "table", "--k-max", "0")[0] == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("--format", "json", "coeff", "--n", "2", "--levels", "6"),
            ("--format", "csv", "mollify", "--target", "S", "--levels", "5"),
            ("--format", "json", "casimir", "--d", "1.5"),
            ("--format", "csv", "table", "--k-max", "10"),
        ],
    )
    def test_byte_identical_reruns(self, capsys, argv):
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second


class TestUsageErrors:
    def test_unknown_target(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["mollify", "--target", "bogus"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
        capsys.readouterr()
