import io
import json
import subprocess
import sys

import pytest

from golden_cases import CASES, INPUTS, expected_output, run_case
from reesalg import algfile
from reesalg.cli import main
from reesalg.rees import pieces_equal


@pytest.mark.parametrize("case", CASES, ids=[c.name for c in CASES])
def test_golden(case):
    out, code = run_case(case)
    text, expected_code = expected_output(case)
    assert out == text
    assert code == expected_code


def _run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return out.getvalue(), code


def test_json_and_text_share_field_names():
    path = str(INPUTS / "t32.alg")
    text, _ = _run("member", path, "--elem", "t^2", "--weight", "1")
    doc, _ = _run("member", path, "--elem", "t^2", "--weight", "1", "--json")
    data = json.loads(doc)
    assert [line.split(":")[0] for line in text.splitlines()] == list(data)
    assert data["lambda"] == "3/2" and data["integral"] is True


def test_close_output_reparses(tmp_path):
    out, code = _run("close", str(INPUTS / "cusp.alg"), "--prune")
    assert code == 0
    f = tmp_path / "closed.alg"
    f.write_text(out)
    again, code = _run("close", str(f))
    assert code == 0
    # closing a closed algebra changes only presentation, so its pieces agree
    assert pieces_equal(algfile.loads(out).algebra, algfile.loads(again).algebra, 4)


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["close"])
    assert info.value.code == 2
    assert _run("sing", str(INPUTS / "cusp.alg"), "--grid")[1] == 2
    assert _run("lambda", str(INPUTS / "cusp.alg"))[1] == 2
    assert _run("coeff", str(INPUTS / "cube.alg"))[1] == 2
    assert _run("member", str(INPUTS / "t32.alg"), "--elem", "t+1", "--weight", "1")[1] == 2
    assert _run("main-check", str(INPUTS / "sat_a.alg"), str(INPUTS / "sat_b.alg"), "--cert", "nope")[1] == 2
    assert _run("equal-closure", str(INPUTS / "t32.alg"), str(INPUTS / "sat_a.alg"))[1] == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "reesalg", "lambda", str(INPUTS / "t32.alg")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "command: lambda\nlambda: 3/2\n"
