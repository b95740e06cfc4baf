from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from cedist.cli import main
from cedist.formats import read_code_spec

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_import_gf4(capsys, tmp_path):
    out_path = tmp_path / "g.txt"
    code, out, _ = run(capsys, "import", DATA / "gf4_pair.txt", "-o", out_path)
    assert code == 0
    assert out.split() == ["ZXZI|ZZIZ", "XYXI|XXIX"]
    g = read_code_spec(out_path).generator_set()
    assert g.windows() == ["ZXZI|ZZIZ", "XYXI|XXIX"]


def test_import_binary_css(capsys):
    code, out, _ = run(capsys, "import", DATA / "css_parity.txt", "--css")
    assert code == 0
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert lines[1:] == ["1+D, D, 1 | 0, 0, 0", "0, 0, 0 | 1+D, D, 1"]


def test_import_round_trip(capsys, tmp_path):
    first = tmp_path / "a.txt"
    second = tmp_path / "b.txt"
    run(capsys, "import", DATA / "gf4_pair.txt", "-o", first)
    run(capsys, "import", first, "-o", second)
    assert read_code_spec(first).generator_set() == read_code_spec(second).generator_set()
    assert first.read_text() == second.read_text()


@pytest.mark.parametrize(
    "content, fragment",
    [("", "no generators"), ("n=2 fmt=gf4\n1 q\n", "line 2, column 3")],
)
def test_import_errors(capsys, tmp_path, content, fragment):
    p = tmp_path / "bad.txt"
    p.write_text(content)
    code, _, err = run(capsys, "import", p)
    assert code == 2
    assert fragment in err


def test_augment_single(capsys, tmp_path):
    out_path = tmp_path / "aug.txt"
    code, out, _ = run(capsys, "augment", DATA / "single_u.txt", "--single", "-o", out_path)
    assert code == 0
    assert out.strip() == "ZZX|IXZ|XZZ|ZII"
    assert read_code_spec(out_path).generator_set().construction == "single"


def test_augment_multi_and_css(capsys):
    code, out, _ = run(capsys, "augment", DATA / "gf4_pair.txt", "--multi")
    assert code == 0
    assert "# ZXZIXI|ZZIZZI" in out and "# XYXIIX|XXIXZZ" in out
    code, out, _ = run(capsys, "augment", DATA / "css_parity.txt", "--css")
    assert code == 0
    assert "1+D, D, 1, D^-1+D | 0, 0, 0, 0" in out
    assert "0, 0, 0, 0 | 1+D, D, 1, 1" in out


def test_augment_single_needs_one_generator(capsys):
    code, _, err = run(capsys, "augment", DATA / "gf4_pair.txt", "--single")
    assert code == 1 and "exactly one" in err


def test_check(capsys):
    code, out, _ = run(capsys, "check", DATA / "rate_third.txt")
    assert code == 0 and "commuting=yes" in out
    code, out, _ = run(capsys, "check", DATA / "gf4_pair.txt")
    assert code == 1 and "commuting=no" in out


def test_syndromes_table(capsys):
    code, out, _ = run(capsys, "syndromes", DATA / "single_u.txt")
    assert code == 0
    rows = [ln.split() for ln in out.splitlines()]
    assert rows[0] == ["frame", "X1", "Z1", "Y1", "X2", "Z2", "Y2"]
    cols = list(zip(*[r[1:] for r in rows[1:5]]))
    assert cols == [
        ("1", "0", "0", "1"),
        ("0", "0", "1", "0"),
        ("1", "0", "1", "1"),
        ("1", "0", "1", "0"),
        ("0", "1", "0", "0"),
        ("1", "1", "1", "0"),
    ]
    assert rows[-1] == ["distinct=yes"]


def test_encode_block(capsys):
    code, out, _ = run(capsys, "encode-block", DATA / "block_example.txt", "--stabilizer")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# c=1 s=2 k=1"
    assert lines[1] == "SWAP 0 1"
    assert lines[-4:] == ["# ZXZI|X", "# ZZIZ|Z", "# YXXZ|I", "# ZYYX|I"]


def test_encode_block_dependent(capsys, tmp_path):
    p = tmp_path / "dep.txt"
    p.write_text("XZ\nZX\nYY\n")
    code, _, err = run(capsys, "encode-block", p)
    assert code == 1 and "generator 2" in err


def test_simulate(capsys, tmp_path):
    js = tmp_path / "r.json"
    argv = ["simulate", DATA / "rate_third.txt", "--channel", "periodic", "--spacing", "2",
            "--trials", "200", "--seed", "4", "--json", js]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    fields = dict(ln.split("=", 1) for ln in out.splitlines())
    assert fields["successes"] == "200" and fields["measured_yield"] == "1/3"
    assert json.loads(js.read_text())["seed"] == 4
    code, out2, _ = run(capsys, *argv)
    assert out2 == out


def test_simulate_rejects_noncommuting(capsys):
    code, _, err = run(capsys, "simulate", DATA / "single_u.txt")
    assert code == 1 and "commute" in err


def test_yield(capsys):
    code, out, _ = run(capsys, "yield", DATA / "rate_third.txt")
    assert code == 0 and "yield=1/3" in out


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "cedist.cli", "frobnicate"], capture_output=True)
    assert proc.returncode == 2
