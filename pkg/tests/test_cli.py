import json

from zetalike import cli
from zetalike.tables import RHO_TABLE


def run_capture(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRhoCommand:
    def test_exact_value(self, capsys):
        code, out, _ = run_capture(capsys, ["rho", "2,1,3"])
        assert code == 0
        assert out == "1/72\n"

    def test_integer_value(self, capsys):
        code, out, _ = run_capture(capsys, ["rho", "1,1,2"])
        assert code == 0
        assert out == "1\n"

    def test_json_schema(self, capsys):
        code, out, _ = run_capture(capsys, ["rho", "2,3", "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        assert obj == {
            "index": [2, 3],
            "weight": 5,
            "depth": 2,
            "value": {"constant": "1/36", "zeta": {}},
        }

    def test_inadmissible_index_is_usage_error(self, capsys):
        code, _, err = run_capture(capsys, ["rho", "2,1"])
        assert code == 2
        assert "error" in err

    def test_malformed_index(self, capsys):
        code, _, err = run_capture(capsys, ["rho", "2,x"])
        assert code == 2


class TestEtaCommand:
    def test_symbolic_pi_render(self, capsys):
        code, out, _ = run_capture(
            capsys, ["eta", "1,2", "--mode", "symbolic", "--render", "pi"]
        )
        assert code == 0
        assert out == "2 - pi^2/6\n"

    def test_symbolic_zeta_render(self, capsys):
        code, out, _ = run_capture(capsys, ["eta", "1,2"])
        assert code == 0
        assert out == "2 - zeta(2)\n"

    def test_numeric_mode(self, capsys):
        code, out, _ = run_capture(
            capsys, ["eta", "2", "--mode", "numeric", "--digits", "10"]
        )
        assert code == 0
        assert out.startswith("1.644934067")
        assert "error <=" in out

    def test_numeric_json(self, capsys):
        code, out, _ = run_capture(
            capsys, ["eta", "1,1,1", "--mode", "numeric", "--format", "json"]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["index"] == [1, 1, 1]
        assert "value" in obj["value"] and "error_bound" in obj["value"]

    def test_divergent_index(self, capsys):
        code, _, err = run_capture(capsys, ["eta", "1"])
        assert code == 2
        assert "diverges" in err


class TestTableCommand:
    def test_rho_weight_six_rows(self, capsys):
        code, out, _ = run_capture(capsys, ["table", "rho", "--weight", "6"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "| weight | depth | index | value |"
        assert len(lines) == 2 + 16  # header, separator, sixteen rows

    def test_rho_rows_match_reference(self, capsys):
        import csv as csv_mod
        import io as io_mod

        for weight in range(2, 7):
            code, out, _ = run_capture(
                capsys, ["table", "rho", "--weight", str(weight), "--format", "csv"]
            )
            assert code == 0
            for row in csv_mod.DictReader(io_mod.StringIO(out)):
                idx_tuple = tuple(int(x) for x in row["index"].split(","))
                assert str(RHO_TABLE[idx_tuple]) == row["value"]

    def test_eta_table_contains_known_row(self, capsys):
        code, out, _ = run_capture(
            capsys, ["table", "eta", "--weight", "5", "--format", "csv", "--render", "zeta"]
        )
        assert code == 0
        assert '"2,1,2",1/16' in out

    def test_json_round_trip_byte_identical(self, capsys):
        code, out, _ = run_capture(
            capsys, ["table", "eta", "--weight", "4", "--format", "json"]
        )
        assert code == 0
        assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out

    def test_determinism(self, capsys):
        runs = [
            run_capture(capsys, ["table", "eta", "--weight", "5"])[1]
            for _ in range(2)
        ]
        assert runs[0] == runs[1]

    def test_weight_out_of_range(self, capsys):
        code, _, err = run_capture(capsys, ["table", "rho", "--weight", "1"])
        assert code == 2
        code, _, err = run_capture(capsys, ["table", "rho", "--weight", "40"])
        assert code == 2


class TestVerifyCommand:
    def test_balance_suite_passes(self, capsys):
        code, out, _ = run_capture(
            capsys, ["verify", "--suite", "balance", "--max-weight", "10"]
        )
        assert code == 0
        assert "all" in out and "passed" in out

    def test_tables_suite_json(self, capsys):
        code, out, _ = run_capture(
            capsys, ["verify", "--suite", "tables", "--format", "json"]
        )
        assert code == 0
        reports = json.loads(out)
        assert len(reports) == 93
        assert all(r["passed"] for r in reports)

    def test_failure_exit_code(self, capsys, monkeypatch):
        from zetalike import tables
        from fractions import Fraction

        broken = dict(tables.RHO_TABLE)
        broken[(2,)] = Fraction(7)
        monkeypatch.setitem(tables.RHO_TABLE, (2,), Fraction(7))
        code, out, _ = run_capture(
            capsys, ["verify", "--suite", "tables", "--max-weight", "2"]
        )
        assert code == 1
        assert "FAILED" in out

    def test_csv_format(self, capsys):
        code, out, _ = run_capture(
            capsys, ["verify", "--suite", "balance", "--max-weight", "2", "--format", "csv"]
        )
        assert code == 0
        assert out.splitlines()[0] == "identity,parameters,passed,lhs,rhs,discrepancy"


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        assert cli.run(["frobnicate"]) == 2

    def test_no_arguments(self, capsys):
        assert cli.run([]) == 2

    def test_bad_digits(self, capsys):
        code, _, err = run_capture(capsys, ["eta", "2", "--mode", "numeric", "--digits", "0"])
        assert code == 2
