"""Acceptance gate: one test per criterion, each printing its pass/fail line.

The checks themselves live in minkpi.verify so the command line `minkpi
verify` and this module run the identical code with the identical pinned
tolerances.
"""

import pytest

import minkpi.verify as vf

SEED = 0


def _report(number: int, result: vf.CheckResult) -> None:
    status = "PASS" if result.passed else "FAIL"
    print(f"{status}  criterion {number}: {result.name}: {result.detail}")
    assert result.passed, f"criterion {number} failed: {result.detail}"


def test_criterion_01_table_reproduction():
    _report(1, vf.criterion_table1())


def test_criterion_02_form_equivalence():
    _report(2, vf.criterion_form_equivalence())


def test_criterion_03_geometry_matches_algebra():
    _report(3, vf.criterion_geometry_algebra())


def test_criterion_04_family_ranges_and_limits():
    _report(4, vf.criterion_family_ranges())


def test_criterion_05_viete_formula():
    _report(5, vf.criterion_viete())


def test_criterion_06_offset_minima():
    _report(6, vf.criterion_offset_minima())


def test_criterion_07_worked_offset_example():
    _report(7, vf.criterion_offset_worked_example())


def test_criterion_08_radon_classification():
    _report(8, vf.criterion_radon_classification())


def test_criterion_09_general_lower_bound():
    _report(9, vf.criterion_lower_bound(SEED))


def test_criterion_10_unboundedness():
    _report(10, vf.criterion_unboundedness())


def test_criterion_11_perimeter_chain():
    _report(11, vf.criterion_perimeter_chain(SEED))


def test_criterion_12_golab_sanity():
    _report(12, vf.criterion_golab_range())


@pytest.mark.parametrize("suite", vf.SUITES, ids=lambda s: s.__name__)
def test_module_invariant_suites(suite):
    result = suite() if suite is vf.suite_regular_pi else suite(SEED)
    print(f"{'PASS' if result.passed else 'FAIL'}  {result.name}: {result.detail}")
    assert result.passed, result.detail
