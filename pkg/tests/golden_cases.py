"""The golden CLI corpus: one case per expected-output file."""

import io
import os
from contextlib import redirect_stderr
from dataclasses import dataclass
from pathlib import Path

from reesalg.cli import main

GOLDEN = Path(__file__).parent / "golden"
INPUTS = GOLDEN / "inputs"
EXPECTED = GOLDEN / "expected"


@dataclass(frozen=True)
class Case:
    name: str
    argv: tuple
    code: int


CASES = [
    Case("close_square", ("close", "square.alg", "--bound", "3"), 0),
    Case("close_linear", ("close", "linear.alg"), 0),
    Case("close_log_cube", ("close", "cube.alg", "--variant", "log", "--log-vars", "x", "--no-simplify"), 0),
    Case("close_mixed_f2_json", ("close", "mixed_f2.alg", "--json"), 0),
    Case("close_rational_relative", ("close", "rational.alg", "--variant", "relative", "--bound", "2"), 0),
    Case("sing_point_origin", ("sing", "cusp.alg", "--point", "0,0"), 0),
    Case("parse_error", ("lambda", "bad.alg"), 2),
    Case("sing_point_off", ("sing", "cusp.alg", "--point", "1,1"), 1),
    Case("sing_grid_f5", ("sing", "cusp_f5.alg", "--grid"), 0),
    Case("coeff_cusp", ("coeff", "cusp.alg", "--recipe", "f1p"), 0),
    Case("coeff_rational_f1_json", ("coeff", "rational.alg", "--recipe", "f1", "--json"), 0),
    Case("lambda_t32", ("lambda", "t32.alg"), 0),
    Case("member_true", ("member", "t32.alg", "--elem", "t^2", "--weight", "1"), 0),
    Case("member_false", ("member", "t32.alg", "--elem", "t^3", "--weight", "3"), 1),
    Case("equal_closure_refuted", ("equal-closure", "xsq_w1.alg", "x_w1.alg", "--trials", "5"), 1),
    Case("equal_closure_sat", ("equal-closure", "sat_a.alg", "sat_b.alg", "--trials", "6", "--seed", "3"), 0),
    Case("main_check_sat", ("main-check", "sat_a.alg", "sat_b.alg", "--cert", "sat", "--trials", "4", "--bound", "3"), 0),
    Case("main_check_sat_json", ("main-check", "sat_a.alg", "sat_b.alg", "--cert", "sat", "--trials", "2", "--json"), 0),
    Case("main_check_cusp_split", ("main-check", "cusp.alg", "cusp_sat.alg", "--cert", "sat", "--trials", "3"), 0),
    Case("main_check_bad_cert", ("main-check", "sat_a.alg", "sat_b.alg", "--cert", "veronese:3"), 2),
]


def run_case(case: Case):
    """Run the CLI from the inputs directory; return (stdout then stderr, exit code)."""
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(INPUTS)
    try:
        with redirect_stderr(err):
            code = main(list(case.argv), out=out)
    finally:
        os.chdir(cwd)
    return out.getvalue() + err.getvalue(), code


def expected_output(case: Case):
    return (EXPECTED / f"{case.name}.out").read_text(encoding="utf-8"), case.code


def regenerate():
    EXPECTED.mkdir(parents=True, exist_ok=True)
    for case in CASES:
        text, _ = run_case(case)
        (EXPECTED / f"{case.name}.out").write_text(text, encoding="utf-8")


if __name__ == "__main__":
    regenerate()
