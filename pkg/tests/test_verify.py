import json
from pathlib import Path

import jsonschema
import pytest

from cpsigma.verify import (
    STATUS_DISCREPANCY,
    STATUS_FAIL,
    STATUS_PASS,
    SUITES,
    run_verification,
)

SCHEMA = json.loads(
    (Path(__file__).resolve().parents[1] / "docs" / "verification-report.schema.json")
    .read_text()
)


def test_full_run_spin_half():
    report = run_verification(1)
    assert report.ok
    assert report.failed == []
    names = {c.name for c in report.checks}
    # every suite contributes at least one check
    assert "el_residual_projector_zero" in names
    assert "projector_completeness" in names
    assert "analytic_vector_matches_closed_form" in names
    assert "spin_z_eigenvalue" in names
    assert "metric_density_closed_form" in names
    assert "radius_squared_constant" in names
    assert "radius_printed_polynomial" in names
    assert "total_action_quadrature" in names
    assert "krawtchouk_self_duality" in names


def test_statuses_are_known():
    report = run_verification(2)
    allowed = {STATUS_PASS, STATUS_FAIL, STATUS_DISCREPANCY, "skipped"}
    assert {c.status for c in report.checks} <= allowed
    assert STATUS_FAIL not in {c.status for c in report.checks}


def test_radius_discrepancy_is_documented_not_failing():
    report = run_verification(2, suites=["radius"])
    statuses = {c.subject: c.status for c in report.checks}
    # the printed polynomial disagrees with the trace value at every level
    # of this instance, but the suite still passes overall
    assert statuses[1] == STATUS_DISCREPANCY
    assert report.ok


def test_suite_selection():
    report = run_verification(1, suites=["el", "krawtchouk"])
    names = {c.name for c in report.checks}
    assert any(n.startswith("el_") for n in names)
    assert any(n.startswith("krawtchouk_") for n in names)
    assert not any(n.startswith("projector_") for n in names)


def test_k_filter_restricts_levels():
    report = run_verification(2, suites=["el"], k_filter={1})
    subjects = {c.subject for c in report.checks}
    assert subjects == {1}


def test_invalid_arguments():
    with pytest.raises(ValueError):
        run_verification(0)
    with pytest.raises(ValueError):
        run_verification(99)
    with pytest.raises(ValueError):
        run_verification(1, suites=["no-such-suite"])


def test_report_serializes_against_schema():
    report = run_verification(1, suites=["el", "radius", "sphere"])
    payload = report.to_dict()
    jsonschema.validate(payload, SCHEMA)
    # round-trips through json text
    assert json.loads(json.dumps(payload)) == payload


def test_suites_constant_is_exhaustive():
    report = run_verification(1)
    assert len(SUITES) == 9
    assert report.wall_time_ms >= 0
