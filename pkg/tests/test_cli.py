import json

import pytest
from click.testing import CliRunner

from gradedorders import format_matrix, matrix_for
from gradedorders.cli import main


@pytest.fixture
def runner():
    return CliRunner()


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_grsymlex(runner):
    result = runner.invoke(main, ["enumerate", "--d", "2", "--k", "3", "--order", "grsymlex"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 10
    assert lines[:3] == ["0,0", "1,0", "0,1"]


def test_enumerate_grlex(runner):
    result = runner.invoke(main, ["enumerate", "--d", "2", "--k", "3", "--order", "grlex"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 10
    assert lines[-1] == "3,0"


def test_enumerate_degenerate(runner):
    result = runner.invoke(main, ["enumerate", "--d", "1", "--k", "0", "--order", "grlex"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["0"]


def test_enumerate_invalid_args(runner):
    assert runner.invoke(main, ["enumerate", "--d", "0", "--k", "3"]).exit_code == 2
    assert runner.invoke(main, ["enumerate", "--d", "2", "--k", "-1"]).exit_code == 2
    assert runner.invoke(main, ["enumerate", "--d", "x", "--k", "1"]).exit_code == 2


def test_enumerate_fallback_requires_flag(runner):
    result = runner.invoke(main, ["enumerate", "--d", "2", "--k", "2", "--order", "lex"])
    assert result.exit_code == 3
    result = runner.invoke(
        main,
        ["enumerate", "--d", "2", "--k", "3", "--order", "lex", "--allow-sort-fallback"],
    )
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "0,0", "0,1", "0,2", "0,3", "1,0", "1,1", "1,2", "2,0", "2,1", "3,0",
    ]


def test_enumerate_grevlex_fallback_matches_grlex_in_2d(runner):
    grlex_out = runner.invoke(main, ["enumerate", "--d", "2", "--k", "3", "--order", "grlex"])
    grevlex_out = runner.invoke(
        main,
        ["enumerate", "--d", "2", "--k", "3", "--order", "grevlex", "--allow-sort-fallback"],
    )
    assert grevlex_out.exit_code == 0
    assert grevlex_out.stdout == grlex_out.stdout


def test_enumerate_formats_carry_identical_content(runner):
    plain = runner.invoke(main, ["enumerate", "--d", "2", "--k", "2"]).stdout.splitlines()
    csv_out = runner.invoke(
        main, ["enumerate", "--d", "2", "--k", "2", "--format", "csv"]
    ).output.splitlines()
    jsonl = runner.invoke(
        main, ["enumerate", "--d", "2", "--k", "2", "--format", "jsonl"]
    ).output.splitlines()

    assert csv_out[0] == "i0,i1,sum,rank"
    for rank, line in enumerate(plain):
        index = [int(tok) for tok in line.split(",")]
        assert csv_out[rank + 1] == f"{line},{sum(index)},{rank}"
        record = json.loads(jsonl[rank])
        assert record == {"index": index, "sum": sum(index), "rank": rank}


def test_enumerate_deterministic(runner):
    args = ["enumerate", "--d", "3", "--k", "3", "--format", "jsonl"]
    assert runner.invoke(main, args).stdout == runner.invoke(main, args).stdout


# ---------------------------------------------------------------------------
# compare


def test_compare_verdicts(runner):
    assert runner.invoke(main, ["compare", "--order", "lex", "0,3", "1,0"]).stdout.strip() == "LT"
    assert runner.invoke(main, ["compare", "--order", "grlex", "0,8", "1,2"]).stdout.strip() == "GT"
    assert runner.invoke(main, ["compare", "--order", "lex", "2,2", "2,2"]).stdout.strip() == "EQ"


def test_compare_antisymmetry(runner):
    swap = {"LT": "GT", "GT": "LT", "EQ": "EQ", "INCOMPARABLE": "INCOMPARABLE"}
    for a, b in [("0,3", "1,0"), ("1,2", "1,2"), ("2,0,1", "1,1,1")]:
        fwd = runner.invoke(main, ["compare", "--order", "grevlex", a, b]).stdout.strip()
        rev = runner.invoke(main, ["compare", "--order", "grevlex", b, a]).stdout.strip()
        assert rev == swap[fwd]


def test_compare_errors(runner):
    assert runner.invoke(main, ["compare", "0,1", "0,1,2"]).exit_code == 2
    assert runner.invoke(main, ["compare", "0,a", "0,1"]).exit_code == 2
    assert runner.invoke(main, ["compare", "--order", "nope", "0", "1"]).exit_code == 2


def test_compare_weighted_order(runner, tmp_path):
    path = tmp_path / "grlex.txt"
    path.write_text(format_matrix(matrix_for("grlex", 2)))
    result = runner.invoke(main, ["compare", "--order", f"weighted:{path}", "0,8", "1,2"])
    assert result.stdout.strip() == "GT"
    # single ones column: sums equal, no tiebreaker
    path2 = tmp_path / "ones.txt"
    path2.write_text("2 1\n1\n1\n")
    result = runner.invoke(main, ["compare", "--order", f"weighted:{path2}", "1,0", "0,1"])
    assert result.stdout.strip() == "INCOMPARABLE"


def test_compare_missing_matrix_file(runner):
    assert runner.invoke(main, ["compare", "--order", "weighted:/no/such", "0", "1"]).exit_code == 2


# ---------------------------------------------------------------------------
# sort-terms

TABLE_INPUT = "Z^3 + Y^3 + X*Y*Z + X*Y^2 + X^3"


def test_sort_terms_table_rows(runner):
    rows = {
        "grlex": "Z^3 + Y^3 + X*Y*Z + X*Y^2 + X^3",
        "grcolex": "X^3 + X*Y^2 + Y^3 + X*Y*Z + Z^3",
        "grsymlex": "X^3 + X*Y^2 + X*Y*Z + Y^3 + Z^3",
        "grevlex": "Z^3 + X*Y*Z + Y^3 + X*Y^2 + X^3",
    }
    for order, expected in rows.items():
        result = runner.invoke(
            main, ["sort-terms", "--d", "3", "--order", order], input=TABLE_INPUT
        )
        assert result.exit_code == 0, result.output
        assert result.stdout.strip() == expected


def test_sort_terms_single_monomial(runner):
    result = runner.invoke(main, ["sort-terms", "--d", "3", "--order", "grlex"], input="X*Y^2")
    assert result.stdout.strip() == "X*Y^2"


def test_sort_terms_parse_error_reports_position(runner):
    result = runner.invoke(main, ["sort-terms", "--d", "2"], input="X0 + $")
    assert result.exit_code == 2
    assert "position" in result.output


def test_sort_terms_from_file(runner, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("X1^2 + X0^3")
    result = runner.invoke(
        main, ["sort-terms", "--d", "2", "--order", "grlex", str(path)]
    )
    assert result.stdout.strip() == "Y^2 + X^3"


# ---------------------------------------------------------------------------
# check


def test_check_pass(runner):
    result = runner.invoke(
        main,
        ["check", "--property", "strict_total_order", "--relation", "lt", "--carrier", "0..4"],
    )
    assert result.exit_code == 0
    assert result.output.startswith("PASS")


def test_check_fail_with_witness(runner):
    result = runner.invoke(
        main,
        ["check", "--property", "connected", "--relation", "divides", "--carrier", "1..6"],
    )
    assert result.exit_code == 1
    assert result.output.startswith("FAIL")
    assert "connected" in result.output


def test_check_trivial_pass(runner):
    result = runner.invoke(
        main, ["check", "--property", "reflexive", "--relation", "le", "--carrier", "0..0"]
    )
    assert result.exit_code == 0


def test_check_unknown_names(runner):
    assert (
        runner.invoke(
            main, ["check", "--property", "nope", "--relation", "lt", "--carrier", "0..2"]
        ).exit_code
        == 2
    )
    assert (
        runner.invoke(
            main, ["check", "--property", "reflexive", "--relation", "nope", "--carrier", "0..2"]
        ).exit_code
        == 2
    )
    assert (
        runner.invoke(
            main, ["check", "--property", "reflexive", "--relation", "lt", "--carrier", "bad"]
        ).exit_code
        == 2
    )
