"""The eight acceptance criteria, each at its exact equality and runtime bound.

Every criterion prints one ``PASS``/``FAIL`` line.  Run directly with
``python3 tests/test_acceptance.py`` for the lines alone.
"""

from __future__ import annotations

import sys

import pytest

from triorbit.suites import (
    braid_suite,
    cofibration_suite,
    cone_suite,
    counting_suite,
    finiteness_suite,
    homotopy_suite,
    serre_suite,
    two_cy_suite,
)

CRITERIA = [
    (1, "Serre duality, A_1..A_5, shifts [-3,3]", lambda: serre_suite(5, (-3, 3)), 30),
    (2, "2-Calabi-Yau, cluster A_1..A_4", lambda: two_cy_suite(4), 60),
    (3, "orbit hom finiteness (n<=5) and dg compatibility (n<=3)", lambda: finiteness_suite(5, 3), 120),
    (4, "cone representability, 30 random + 3 corruptions", lambda: cone_suite(seed=0, count=30), 10),
    (5, "homotopy category vs brute force, 50 pairs", lambda: homotopy_suite(seed=0, count=50), 20),
    (6, "counting identities and geometric bijection, n<=4", lambda: counting_suite(4), 120),
    (7, "braid relations m<=6, quotient action m<=4", lambda: braid_suite(6, 4), 5),
    (8, "cofibrations: quotient vs cone, triangle exactness", lambda: cofibration_suite(seed=0, count=20), 15),
]


def _line(number, title, report, bound):
    ok = report.ok and report.seconds < bound
    status = "PASS" if ok else "FAIL"
    detail = f"{report.cases} cases, {len(report.failures)} failures, {report.seconds:.2f}s (< {bound}s)"
    return ok, f"criterion {number} {status}: {title} [{detail}]"


@pytest.mark.parametrize("number,title,suite,bound", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, suite, bound, capsys):
    report = suite()
    ok, line = _line(number, title, report, bound)
    with capsys.disabled():
        print("\n" + line)
        for failure in report.failures[:5]:
            print(f"    failure: {failure}")
    assert not report.failures, report.failures[:5]
    assert report.seconds < bound


def main() -> int:
    all_ok = True
    for number, title, suite, bound in CRITERIA:
        report = suite()
        ok, line = _line(number, title, report, bound)
        all_ok &= ok
        print(line)
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
