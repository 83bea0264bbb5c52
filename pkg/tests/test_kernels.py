import os
import subprocess
import sys

import pytest

from quarticrings import kernels
from quarticrings.forms import BinaryQuarticForm
from quarticrings.resolvent import resolvent_data


def test_compiled_kernels_are_built():
    # the editable install builds the extension; the fallback is exercised below
    assert kernels.IMPLEMENTATION == "compiled"


def test_pure_python_fallback_selected_by_environment():
    env = dict(os.environ, QUARTICRINGS_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from quarticrings import kernels; print(kernels.IMPLEMENTATION)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_overflow_guard_routes_to_python():
    f = BinaryQuarticForm(10**9, 0, 0, 0, 10**9)
    rd = resolvent_data(f)
    w, t = rd.phi_forms_zeta()
    assert not kernels.resolvent_bound_ok(rd.Q.mult, w.coeffs, t.coeffs, 2)
    count, _ = kernels.resolvent_violations(rd.Q.mult, w.coeffs, t.coeffs, 1, 1)
    assert count == 0


@pytest.mark.parametrize("impl", ["python", "compiled"])
def test_kernel_reports_examples_and_count(impl):
    rd = resolvent_data(BinaryQuarticForm(1, 0, 0, 0, 1))
    w, t = rd.phi_forms_zeta()
    count, examples = kernels.resolvent_violations(rd.Q.mult, w.coeffs, t.coeffs, -1, 1, limit=3, impl=impl)
    assert count > 3 and len(examples) == 3


def test_benchmark_script_runs():
    from pathlib import Path

    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    out = subprocess.run(
        [sys.executable, str(script), "--forms", "3", "--coord-box", "1", "--stab-bound", "1"],
        capture_output=True, text=True, check=True,
    )
    assert "violations=0" in out.stdout and "elements=4" in out.stdout
