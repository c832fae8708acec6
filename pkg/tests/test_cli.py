"""Command-line interface: output formats, exit codes, replay."""

import json

import pytest

from grassmat.cli import main
from grassmat.gmatrix import matrices_to_json
from grassmat.report import EXIT_IO, EXIT_OK, EXIT_USAGE
from grassmat.ring import QQ
from grassmat.witnesses import standard_witness


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------ table output

def test_ch_verify_table_headline(capsys):
    code, out, err = run(
        capsys,
        ["ch-verify", "-n", "2", "-m", "4", "--ring", "int", "--trials", "50", "--seed", "1"],
    )
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "Theorem1 n=2 m=4 ring=int exponent=3 trials=50 PASS"
    assert any(l.startswith("  elapsed_ms:") for l in lines)
    assert err == ""


def test_standard_sharp_table_value(capsys):
    code, out, _ = run(capsys, ["standard-sharp", "-n", "1", "-m", "2"])
    assert code == EXIT_OK
    assert "2*v1v2*e11" in out
    assert out.splitlines()[0].endswith("PASS")


def test_ring_defaults_per_subcommand(capsys):
    # Verification defaults to int; sharpness needs a field and
    # defaults to rat.  The defaults must not bleed across subcommands.
    _, out, _ = run(capsys, ["ch-verify", "-n", "1", "-m", "2", "--trials", "1", "--format", "json"])
    assert json.loads(out)["campaign"]["ring"] == "int"
    _, out, _ = run(capsys, ["ch-sharp", "-n", "2", "-m", "2", "--format", "json"])
    assert json.loads(out)["campaign"]["ring"] == "rat"
    _, out, _ = run(capsys, ["capelli-verify", "-n", "1", "-m", "0", "--trials", "1", "--structured", "1", "--format", "json"])
    assert json.loads(out)["campaign"]["ring"] == "int"


def test_bool_details_render_lowercase(capsys):
    _, out, _ = run(capsys, ["ch-verify", "-n", "1", "-m", "2", "--trials", "2"])
    assert "  control_lower_exponent_nonzero: true" in out


# ------------------------------------------------------------ json output

def test_json_format_schema(capsys):
    code, out, _ = run(
        capsys,
        ["ch-verify", "-n", "1", "-m", "2", "--trials", "3", "--format", "json"],
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert set(data) == {
        "campaign",
        "verdict",
        "trials",
        "details",
        "reproducer",
        "elapsed_ms",
    }
    assert data["verdict"] == "PASS"
    assert data["campaign"]["target"] == "Theorem1"
    assert data["reproducer"] is None
    assert all(set(d) == {"name", "value"} for d in data["details"])


def test_output_file_matches_json_stdout(tmp_path, capsys):
    path = tmp_path / "report.json"
    args = ["ch-verify", "-n", "1", "-m", "2", "--trials", "3", "--seed", "5"]
    code, out, _ = run(capsys, args + ["--format", "json", "--output", str(path)])
    assert code == EXIT_OK
    on_disk = path.read_text()
    assert on_disk == out
    # Table mode still writes the JSON file.
    path2 = tmp_path / "report2.json"
    code2, out2, _ = run(capsys, args + ["--output", str(path2)])
    assert code2 == EXIT_OK
    assert "Theorem1" in out2 and not out2.startswith("{")
    data = json.loads(path2.read_text())
    assert data["verdict"] == "PASS"


def test_reports_deterministic_modulo_timing(tmp_path, capsys):
    args = [
        "capelli-verify", "-n", "1", "-m", "2",
        "--trials", "3", "--structured", "3", "--seed", "7", "--format", "json",
    ]
    _, out1, _ = run(capsys, args)
    _, out2, _ = run(capsys, args)
    d1, d2 = json.loads(out1), json.loads(out2)
    d1.pop("elapsed_ms")
    d2.pop("elapsed_ms")
    assert d1 == d2


# ------------------------------------------------------------ subcommands

def test_all_verify_subcommands_run(capsys):
    quick = ["-n", "1", "-m", "2", "--trials", "2", "--structured", "2"]
    for argv in (
        ["ch-verify"] + quick,
        ["ch-sharp", "-n", "2", "-m", "2"],
        ["lemma2", "-n", "2", "-m", "2", "--trials", "2"],
        ["young", "-n", "1", "-m", "2", "--trials", "2"],
        ["capelli-verify"] + quick,
        ["capelli-sharp", "-n", "1", "-m", "2"],
        ["standard-verify"] + quick,
        ["standard-verify", "--check", "product"] + quick,
        ["standard-verify", "--check", "filtration"] + quick,
        ["standard-sharp", "-n", "1", "-m", "2"],
        ["al-check", "-n", "2", "-m", "0", "--trials", "2"],
    ):
        code, out, err = run(capsys, argv)
        assert code == EXIT_OK, (argv, err)
        assert "PASS" in out


def test_open_search_exit_zero(capsys):
    code, out, _ = run(capsys, ["open-search", "-n", "1", "-m", "2"])
    assert code == EXIT_OK
    assert "NO_COUNTEREXAMPLE_IN_BUDGET" in out


def test_open_search_options(capsys):
    code, out, _ = run(
        capsys,
        [
            "open-search", "-n", "1", "-m", "2",
            "--budget", "10", "--no-prune", "--random-samples", "2",
            "--format", "json",
        ],
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["campaign"]["prune"] is False
    assert data["campaign"]["budget"] == 10


def test_ch_sharp_lambdas_option(capsys):
    code, out, _ = run(
        capsys,
        ["ch-sharp", "-n", "2", "-m", "2", "--lambdas", "1/2,3", "--format", "json"],
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["campaign"]["lambdas"] == ["1/2", "3"]


def test_capelli_sharp_parts_option(capsys):
    code, out, _ = run(
        capsys,
        ["capelli-sharp", "-n", "1", "-m", "4", "--parts", "4", "--format", "json"],
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["campaign"]["parts"] == [4]


# ------------------------------------------------------------ grid

def test_grid_table(capsys):
    code, out, _ = run(
        capsys,
        ["grid", "--target", "Theorem1", "--n-max", "2", "--m-max", "2",
         "--trials", "2", "--structured", "2"],
    )
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("grid target=Theorem1 ring=int")
    assert "verdict" in lines[1]
    # 2 values of n times 3 values of m.
    assert sum(1 for l in lines[2:] if l.strip().endswith("PASS")) == 6


def test_grid_json_and_witness_fallback(tmp_path, capsys):
    # CHSharpness needs a field; over int each point reruns over rat.
    path = tmp_path / "grid.json"
    code, out, _ = run(
        capsys,
        ["grid", "--target", "CHSharpness", "--n-max", "1", "--m-max", "1",
         "--format", "json", "--output", str(path)],
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["target"] == "CHSharpness"
    assert [r["verdict"] for r in data["rows"]] == ["PASS", "PASS"]
    assert path.read_text() == out


def test_grid_includes_degree_columns(capsys):
    code, out, _ = run(
        capsys,
        ["grid", "--target", "OpenQuestion", "--n-max", "1", "--m-max", "1",
         "--budget", "10"],
    )
    assert code == EXIT_OK
    assert "open_k" in out.splitlines()[1]


# ------------------------------------------------------------ exit codes

def test_unknown_subcommand_usage_error(capsys):
    code, _, err = run(capsys, ["frobnicate"])
    assert code == EXIT_USAGE
    assert err != ""


def test_no_arguments_usage_error(capsys):
    code, _, _ = run(capsys, [])
    assert code == EXIT_USAGE


def test_bad_ring_usage_error(capsys):
    for ring in ("foo", "zmod:4"):
        code, _, err = run(capsys, ["ch-verify", "--ring", ring, "--trials", "1"])
        assert code == EXIT_USAGE
        assert "error" in err


def test_witness_over_non_field_usage_error(capsys):
    code, _, err = run(capsys, ["ch-sharp", "-n", "2", "-m", "2", "--ring", "int"])
    assert code == EXIT_USAGE
    assert "field" in err


def test_bad_characteristic_usage_error(capsys):
    code, _, _ = run(capsys, ["ch-sharp", "-n", "1", "-m", "4", "--ring", "zmod:2"])
    assert code == EXIT_USAGE


def test_missing_replay_file_io_error(capsys):
    code, _, err = run(capsys, ["ch-verify", "--replay", "/nonexistent/file.json"])
    assert code == EXIT_IO
    assert "i/o error" in err


def test_replay_file_not_json_usage_error(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("not json at all")
    code, _, _ = run(capsys, ["ch-verify", "--replay", str(p)])
    assert code == EXIT_USAGE


def test_replay_file_without_reproducer(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"verdict": "PASS", "reproducer": None}))
    code, _, err = run(capsys, ["ch-verify", "--replay", str(p)])
    assert code == EXIT_USAGE
    assert "no reproducer" in err


def test_unwritable_output_io_error(tmp_path, capsys):
    code, _, err = run(
        capsys,
        ["ch-verify", "-n", "1", "-m", "0", "--trials", "1",
         "--output", str(tmp_path / "no" / "dir" / "x.json")],
    )
    assert code == EXIT_IO
    assert "i/o error" in err


# ------------------------------------------------------------ replay

def test_replay_round_trip_pass(tmp_path, capsys):
    mats = standard_witness(1, 2, QQ)
    p = tmp_path / "rep.json"
    p.write_text(
        json.dumps(
            {
                "target": "StandardCorollary",
                "check": "standard_nonzero",
                "mats": matrices_to_json(mats),
            }
        )
    )
    code, out, _ = run(capsys, ["standard-verify", "--replay", str(p)])
    assert code == EXIT_OK
    assert "PASS" in out


def test_replay_reproducer_failure_exit_code(tmp_path, capsys):
    # The witness evaluates nonzero, so replaying it as a vanishing
    # claim must exit with the failure code.
    mats = standard_witness(1, 2, QQ)
    p = tmp_path / "rep.json"
    p.write_text(
        json.dumps(
            {
                "target": "StandardCorollary",
                "check": "standard_zero",
                "mats": matrices_to_json(mats),
            }
        )
    )
    code, out, _ = run(capsys, ["standard-verify", "--replay", str(p)])
    assert code == 2
    assert "FAIL" in out


def test_replay_unwraps_full_report(tmp_path, capsys):
    mats = standard_witness(1, 2, QQ)
    p = tmp_path / "full.json"
    p.write_text(
        json.dumps(
            {
                "verdict": "FAIL",
                "reproducer": {
                    "target": "StandardCorollary",
                    "check": "standard_nonzero",
                    "mats": matrices_to_json(mats),
                },
            }
        )
    )
    code, out, _ = run(capsys, ["standard-verify", "--replay", str(p)])
    assert code == EXIT_OK
    assert "PASS" in out
