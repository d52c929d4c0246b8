from __future__ import annotations

import jsonschema
import pytest

from polarswitch import verify
from polarswitch.errors import UsageError


@pytest.mark.parametrize("scope", verify.SCOPES)
def test_default_scopes_pass(scope):
    report = verify.run(scope)
    assert report.checks
    failed = [c.name for c in report.checks if not c.passed]
    assert failed == []
    assert report.status == "pass"
    jsonschema.validate(report.to_dict(), verify.REPORT_SCHEMA)


def test_families_general_q():
    report = verify.run("families", [1, 2], [8, 16])
    assert report.passed
    assert any("q=16" in c.name for c in report.checks)


def test_report_status_is_conjunction():
    r = verify.Report("verify", {})
    r.add("a", 1, 1)
    assert r.status == "pass"
    r.add("b", 1, 2)
    assert r.status == "fail" and not r.passed
    r.error = "cap"
    assert r.status == "resource"


def test_unknown_scope():
    with pytest.raises(UsageError):
        verify.run("everything")


def test_gl_equals_sp_on_binary_plane():
    assert verify.gl_vs_sp_binary_plane()
