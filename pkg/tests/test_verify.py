import json

import pytest

from commvar import verify
from commvar.formulas import A2, CATALOG
from commvar.errors import InputError, ResourceError
from commvar.verify import SUITES, Row, SuiteReport, run_suite


@pytest.mark.parametrize("name,max_rank,max_r", [
    ("constructions", 4, 1), ("orbits", 4, 1), ("bounds", 6, 3), ("rank2", 2, 1),
])
def test_suite_passes(name, max_rank, max_r):
    report = run_suite(name, max_rank, max_r)
    assert report.rows and report.passed, [r.id for r in report.failures]
    ids = [r.id for r in report.rows]
    assert ids == sorted(ids)


def test_rank2_row_example():
    rows = {r.id: r for r in run_suite("rank2", 2, 1).rows}
    row = rows["rank2/A2/u/r1/p32003"]
    assert row.expected == row.computed == 3 and row.statement == "A2_u1"
    assert "as-printed" in rows["rank2/C2/O2_cap_u/r1/p3"].note
    # the r = 2 row: engine 5 against 2r + 1
    assert verify.computed_dimension("A2", "u", 2, verify.GOOD_CHAR) == CATALOG["A2_u1"](A2, 2) == 5


def test_threshold_suite_fails_on_known_rows_only():
    report = run_suite("thresholds")
    failing = {r.id: r.computed for r in report.failures}
    assert failing == {
        "thresholds/N/sl_2l+1/m01": list(range(4, 21)),
        "thresholds/N/sl_2l+1/m02": [4, 5],
        "thresholds/N/sl_2l+1/m03": [4],
        "thresholds/N/sp_2l/m02": [4, 5, 6, 7],
        "thresholds/N/sp_2l/m03": [4, 5],
        "thresholds/N/sp_2l/m04": [4],
        "thresholds/N/sp_2l/m05": [4],
    }


def test_crosschecks_surface_characteristic_two():
    report = run_suite("crosschecks")
    assert [r.id for r in report.failures] == ["crosschecks/char/C2/u/r2"]
    row = report.failures[0]
    assert row.computed == [7, 6, 6]
    assert "not a good prime" in row.note


def test_engine_errors_fail_one_row(monkeypatch):
    def boom(*args, **kwargs):
        raise ResourceError("groebner: too many pairs", limit="max_pairs")
    monkeypatch.setattr(verify, "groebner_dimension", boom)
    verify.computed_dimension.cache_clear()
    try:
        report = run_suite("rank2", 2, 1)
    finally:
        verify.computed_dimension.cache_clear()
    assert report.rows and not report.passed
    assert all(r.verdict == "error" and "max_pairs" not in r.verdict for r in report.failures)
    assert all("too many pairs" in r.error for r in report.failures)
    assert "error:" in report.to_table()


def test_report_serialisation():
    rep = SuiteReport("demo", [Row("b", "s", 1, 1), Row("a", "s", 1, 2)])
    assert not rep.passed and [r.id for r in rep.failures] == ["a"]
    data = json.loads(rep.to_json())
    assert data["suite"] == "demo" and data["passed"] is False
    assert len(rep.to_table().splitlines()) >= 3


def test_unknown_suite():
    assert "crosschecks" in SUITES
    with pytest.raises(InputError):
        run_suite("everything")
    with pytest.raises(InputError):
        run_suite("bounds", 0, 1)
