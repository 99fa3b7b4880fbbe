"""Command line behavior, exercised in-process through main()."""

import json
import subprocess
import sys

import pytest

import pcmkit as pk
from pcmkit import cli

TRIAD_TEXT = "1 1/2 1/4\n2 1 1/3\n4 3 1\n"
FAST = ["--trials", "30", "--orders", "3,4"]


def run_cli(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:  # argparse usage failures
        code = exc.code if isinstance(exc.code, int) else 0
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def matrix_file(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text(TRIAD_TEXT)
    return str(path)


def test_compute_all_indices(capsys, matrix_file):
    code, out, _ = run_cli(capsys, "compute", "--matrix", matrix_file)
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 9
    assert lines[0].startswith("K ")
    by_token = dict(line.split(None, 1) for line in lines)
    assert by_token["I_STAR"].startswith("0.166666667")
    assert "nu=1" in by_token["CI_H"]
    assert "higher-more-consistent" in by_token["CCI"]


def test_compute_single_index_and_alias(capsys, matrix_file):
    code, out, _ = run_cli(capsys, "compute", "--matrix", matrix_file,
                           "--index", "ai*")
    assert code == 0
    assert out.startswith("AI_STAR ")
    code, out2, _ = run_cli(capsys, "compute", "--matrix", matrix_file,
                            "--index", "AI_STAR")
    assert out2 == out


def test_compute_digits_flag(capsys, matrix_file):
    code, out, _ = run_cli(capsys, "compute", "--matrix", matrix_file,
                           "--index", "I_STAR", "--digits", "3")
    assert code == 0
    assert out.split()[1] == "0.167"


def test_compute_undefined_value(capsys, tmp_path):
    path = tmp_path / "ones.txt"
    path.write_text("1 1 1\n1 1 1\n1 1 1\n")
    code, out, _ = run_cli(capsys, "compute", "--matrix", str(path),
                           "--index", "RE")
    assert code == 0
    assert out.split()[1] == "undefined"


def test_compute_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "compute", "--matrix",
                           str(tmp_path / "nope.txt"))
    assert code == 2
    assert err


def test_compute_invalid_matrix(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 2 3\n0.4 1 2\n1/3 1/2 1\n")
    code, _, err = run_cli(capsys, "compute", "--matrix", str(path))
    assert code == 2
    assert "reciproc" in err.lower()


def test_unknown_index_is_usage_error(capsys, matrix_file):
    code, _, err = run_cli(capsys, "compute", "--matrix", matrix_file,
                           "--index", "BOGUS")
    assert code == 1


def test_bad_choice_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "axioms", "--format", "nonsense")
    assert code == 1


def test_missing_required_flag_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "compute")
    assert code == 1
    assert "usage" in err.lower()


def test_axioms_doc_output_is_byte_identical(capsys):
    argv = ["axioms", "--index", "K,RE", *FAST, "--format", "doc"]
    code, out1, _ = run_cli(capsys, *argv)
    assert code == 0
    code, out2, _ = run_cli(capsys, *argv)
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["format"] == "pcm-axiom-report"


def test_axioms_table_and_out_file(capsys, tmp_path):
    out_path = tmp_path / "rep.json"
    code, out, _ = run_cli(capsys, "axioms", "--index", "CCI", *FAST,
                           "--out", str(out_path))
    assert code == 0
    assert "CCI" in out and "P6" in out
    saved = pk.load_doc(out_path)
    assert saved["results"]["CCI"]["properties"]["P6"]["status"] == "violated"


def test_axioms_plot(capsys, tmp_path):
    out_path = tmp_path / "rep.json"
    code, _, _ = run_cli(capsys, "axioms", "--index", "K", *FAST,
                         "--out", str(out_path), "--plot")
    assert code == 0
    png = out_path.with_suffix(".png")
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_curve_b_mode(capsys, matrix_file):
    code, out, _ = run_cli(capsys, "curve", "--matrix", matrix_file,
                           "--index", "K", "--mode", "b",
                           "--b-min", "1", "--b-max", "3", "--b-steps", "5")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "param,value"
    assert len(lines) == 6
    assert float(lines[1].split(",")[0]) == 1.0


def test_curve_delta_mode(capsys, tmp_path):
    path = tmp_path / "c.txt"
    pk.save_matrix(pk.consistent_from_weights((4, 2, 1)), path)
    code, out, _ = run_cli(capsys, "curve", "--matrix", str(path),
                           "--index", "RE_STAR", "--mode", "delta",
                           "--p", "1", "--q", "3")
    assert code == 0
    rows = [line.split(",") for line in out.strip().split("\n")[1:]]
    values = {float(a): float(b) for a, b in rows}
    assert values[1.0] == 0.0


def test_curve_delta_requires_consistent_base(capsys, matrix_file):
    code, _, err = run_cli(capsys, "curve", "--matrix", matrix_file,
                           "--index", "K", "--mode", "delta",
                           "--p", "1", "--q", "3")
    assert code == 2


def test_curve_delta_rejects_diagonal(capsys, tmp_path):
    path = tmp_path / "c.txt"
    pk.save_matrix(pk.consistent_from_weights((4, 2, 1)), path)
    code, _, _ = run_cli(capsys, "curve", "--matrix", str(path),
                         "--index", "K", "--mode", "delta",
                         "--p", "2", "--q", "2")
    assert code == 2


def test_curve_out_and_plot(capsys, tmp_path, matrix_file):
    out_path = tmp_path / "curve.csv"
    code, _, _ = run_cli(capsys, "curve", "--matrix", matrix_file,
                         "--index", "AI", "--mode", "b",
                         "--out", str(out_path), "--plot")
    assert code == 0
    assert out_path.read_text().startswith("param,value\n")
    png = out_path.with_suffix(".png")
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_search_finds_seeded_witness(capsys):
    code, out, _ = run_cli(capsys, "search", "--index", "CCI",
                           "--property", "P6", "--trials", "50")
    assert code == 0
    body = "\n".join(line for line in out.split("\n")
                     if not line.startswith("#"))
    m = pk.parse_matrix(body)
    gap = abs(pk.index_cci(m) - pk.index_cci(pk.transpose(m)))
    assert gap > 1e-9


def test_search_reports_nothing_found(capsys):
    code, out, _ = run_cli(capsys, "search", "--index", "K",
                           "--property", "P1", "--trials", "40")
    assert code == 0
    assert "no violation found" in out


def test_unexpected_error_exits_3(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "run_suite", boom)
    code, _, err = run_cli(capsys, "axioms", "--index", "K", *FAST)
    assert code == 3
    assert "boom" in err


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    assert pk.__version__ in capsys.readouterr().out


def test_module_entry_point(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text(TRIAD_TEXT)
    proc = subprocess.run(
        [sys.executable, "-m", "pcmkit", "compute", "--matrix", str(path),
         "--index", "K"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("K 0.333333333")
