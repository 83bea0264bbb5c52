import io
import subprocess
import sys

import pytest

from quarticrings.cli import main


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_invariants_example():
    assert run(["invariants", "bqf 1 0 0 0 1"])[:2] == (0, "I=12 J=0 disc=256\n")


def test_ring_from_bqf_prints_six_products():
    code, out, _ = run(["ring-from-bqf", "bqf 1 0 0 0 1"])
    assert code == 0
    assert out.splitlines()[1:] == [
        "z1*z1=z2",
        "z1*z2=z3'",
        "z1*z3'=-1",
        "z2*z2=-1",
        "z2*z3'=-z1",
        "z3'*z3'=-z2",
    ]


def test_ring_round_trip_through_cli():
    _, out, _ = run(["ring-from-bcf", "bcf 1 2 3 4"])
    ring = out.splitlines()[0].split("=", 1)[1]
    assert run(["bcf-from-ring", ring])[1] == "bcf=bcf 1 2 3 4\n"
    assert run(["disc", ring])[1] == run(["disc", "bcf 1 2 3 4"])[1]


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["psi", "bqf 1 0 0 0 1"], "pair=pair tqf 0 0 1 -1 0 0|tqf 1 1 0 0 0 0\n"),
        (["psi-prime", "bqf 0 0 1 0 0"], "pair=pair tqf 0 0 1 -1 0 0|tqf 0 0 2/3 1/3 0 0\n"),
        (["pullback", "tqf 0 0 1 0 0 0"], "bqf=bqf 0 0 1 0 0\n"),
        (["detcubic", "pair tqf 0 0 1 -1 0 0|tqf 1 1 0 0 0 0"], "bcf=bcf -1 0 4 0\n"),
        (["act-quartic", "--word", "s", "bqf 1 2 0 0 0"], "bqf=bqf 0 0 0 2 1\n"),
        (["act-quartic", "--g", "gl2 -1 0 0 -1", "bqf 1 2 3 4 5"], "bqf=bqf 1 2 3 4 5\n"),
        (["act-cubic", "--g", "gl2 1 0 1 1", "bcf -1 4 0 0"], "bcf=bcf -1 1 5 3\n"),
        (["rho", "gl2 1 1 0 1"], "rho=gl3 1 0 0 1 1 1 2 0 1\n"),
        (["act-pair", "--word", "s", "pair tqf 1 2 3 4 5 6|tqf 0 1 0 0 0 0"], "pair=pair tqf 0 1 0 0 0 0|tqf 1 2 3 4 5 6\n"),
        (["act-pair", "--h", "gl3 1 0 0 0 0 1 0 1 0", "pair tqf 0 0 1 -1 0 0|tqf 0 0 1 -1 0 0"],
         "pair=pair tqf 0 1 0 0 -1 0|tqf 0 1 0 0 -1 0\n"),
        (["disc", "bqf 0 1 0 1 0"], "disc=-4\n"),
        (["disc", "bcf -1 0 1 0"], "disc=4\n"),
        (["canonicalize", "bcf -1 4 0 0"], "bcf=bcf -1 1 5 3\nn=1\n"),
        (["reduce-to-a0", "tqf 0 0 1 -1 0 0"], "h=gl3 1 0 0 0 1 0 0 0 1\n"),
        (["enumerate", "bcf", "--bound", "0"], "bcf 0 0 0 0\n"),
    ],
)
def test_commands(argv, expected):
    code, out, _ = run(argv)
    assert (code, out) == (0, expected)


def test_stdin_records_and_tsv():
    code, out, _ = run(["invariants", "--format", "tsv", "-"], "bqf 1 0 0 0 1\n\n# comment\nbqf 0 1 0 1 0\n")
    assert code == 0
    assert out == "I\tJ\tdisc\n12\t0\t256\n-3\t0\t-4\n"


def test_malformed_stdin_reports_line_number():
    code, out, err = run(["psi"], "bqf 1 0 0 0 1\nbqf 1 0 0 0\n")
    assert code == 1
    assert "line 2" in err and "needs 5 fields" in err


def test_domain_error_exit_code():
    code, _, err = run(["canonicalize", "bcf 1 0 0 0"])
    assert code == 1 and "x^3 coefficient must be -1" in err
    code, _, err = run(["reduce-to-a0", "tqf 1 1 1 0 0 0"])
    assert code == 1 and "Det" in err
    code, _, err = run(["act-quartic", "bqf 1 0 0 0 1"])
    assert code == 1 and "group element is required" in err
    code, _, err = run(["psi", "bcf 1 0 0 0"])
    assert code == 1 and "expected BinaryQuarticForm" in err


def test_verify_pass_report():
    code, out, err = run(["verify", "equivariance", "--box", "1", "--words", "2"])
    assert code == 0
    assert out == "suite=equivariance cases=243 failures=0 status=pass\n"
    assert "equivariance:" in err  # timing lives on stderr


def test_verify_overrides_and_unknown_suite():
    code, out, _ = run(["verify", "stab-scan", "--bound", "2"])
    assert code == 0 and "cases=20" in out
    code, out, _ = run(["verify", "cubic-round-trip", "--box", "1"])
    assert "cases=81" in out
    code, out, _ = run(["verify", "reduce-a0", "--set", "reduce_samples=7"])
    assert "cases=7" in out
    assert run(["verify", "nope"])[0] == 1
    assert run(["verify", "reduce-a0", "--set", "bogus=1"])[0] == 1


def test_verify_failure_exit_code(monkeypatch):
    from quarticrings import sweeps

    def broken(f, b, ctx):
        return [sweeps._fail(f, "synthetic")]

    monkeypatch.setitem(sweeps.SUITES, "synthetic", sweeps.Suite(sweeps._quartics, broken))
    code, out, err = run(["verify", "synthetic", "--box", "0"])
    assert code == 2
    assert "status=fail" in out and "failure=bqf 0 0 0 0 0 :: synthetic" in out


def test_stab_scan_command():
    code, out, _ = run(["stab-scan", "--bound", "1"])
    assert code == 0
    assert out.splitlines()[-1] == "elements=4 unmatched=0"


def test_orbit_witness_command():
    code, out, _ = run(["orbit-witness", "--word", "s", "bqf 1 2 0 0 0"])
    assert code == 0
    lines = out.splitlines()
    assert "f_image=bqf 0 0 0 2 1" in lines and lines[-1] == "check=pass"


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "quarticrings.cli", "verify", "monogenicity", "--box", "1"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout.startswith(b"suite=monogenicity")
