"""The twelve acceptance criteria, each run at the pinned desk-scale bounds.

Every check is exact (tolerance zero). Each test prints one PASS/FAIL line, and the
lines are repeated in the terminal summary.
"""

import pytest

from quarticrings import kernels
from quarticrings.sweeps import PINNED, run_suite

# (number, suite, expected case count, time limit in seconds or None)
CRITERIA = [
    (1, "discriminant-chain", 3125, 10),
    (2, "ring-validity", 3125, 10),
    (3, "equivariance", 3125, 60),
    (4, "rho-homomorphism", None, None),
    (5, "stab-scan", None, None),
    (6, "inverse-law", 3125, None),
    (7, "psi-prime-det", 3125, None),
    (8, "cubic-round-trip", 2401, None),
    (9, "resolvent-axioms", 3125, 300),
    (10, "monogenicity", 3125 + 343, None),
    (11, "disc-oracle", 2500, None),
    (12, "reduce-a0", 200, None),
]


def test_pinned_bounds_match_the_criteria():
    assert PINNED["box"] == 2  # criteria 1-3, 6, 7, 9-11: |f_i| <= 2
    assert PINNED["words"] == 4  # criterion 3: words of length <= 4
    assert PINNED["rho_entries"] == 2  # criterion 4: entries in [-2, 2]
    assert PINNED["stab_bound"] == 1  # criterion 5: entries in [-1, 1], g in [-2, 2]
    assert PINNED["cubic_box"] == 3  # criterion 8: |coeffs| <= 3
    assert PINNED["coord_box"] == 2  # criterion 9: x, y in [-2, 2]^3
    assert PINNED["family_box"] == 3  # criterion 10: |b|, |c|, |d| <= 3
    assert PINNED["reduce_samples"] == 200 and PINNED["reduce_entries"] == 3  # criterion 12


@pytest.mark.parametrize("number, suite, cases, limit", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, suite, cases, limit, acceptance_log):
    rep = run_suite(suite, jobs=1)
    timely = limit is None or rep.seconds < limit
    ok = rep.ok and rep.cases > 0 and (cases is None or rep.cases == cases) and timely
    budget = f", limit {limit}s" if limit else ""
    line = (
        f"criterion {number:2d} {suite:20s} {'PASS' if ok else 'FAIL'} "
        f"cases={rep.cases} failures={len(rep.failures)} time={rep.seconds:.2f}s{budget} "
        f"kernels={kernels.IMPLEMENTATION}"
    )
    print(line)
    acceptance_log.append(line)
    assert rep.ok, rep.failures[:5]
    assert rep.cases > 0
    if cases is not None:
        assert rep.cases == cases
    assert timely, f"{suite} took {rep.seconds:.1f}s (limit {limit}s)"


def test_stab_scan_counts():
    rep = run_suite("stab-scan")
    assert rep.cases == 4 and rep.ok


def test_rho_sweep_covers_all_bounded_elements():
    # GL2(Z) elements with entries in [-2, 2], counted directly
    from itertools import product

    n = sum(1 for a, b, c, d in product(range(-2, 3), repeat=4) if a * d - b * c in (1, -1))
    assert run_suite("rho-homomorphism").cases == n
