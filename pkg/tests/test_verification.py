import pytest

from qtfc.arith import QTPoly, qt_bracket
from qtfc.errors import DomainError
from qtfc.verification import (FAIL, PASS, PASS_AFTER_SWAP, CheckReport, bracket_form, catalog,
                               check_dimension_conjecture, check_golden, check_t1, golden_series,
                               golden_tables, lookup, run_tier, select)

QT = QTPoly.monomial


def test_bracket_form():
    assert bracket_form("[5]+qt[1]") == qt_bracket(5) + QT(1, 1)
    assert bracket_form("[7] + qt[4] + qt[3]") == qt_bracket(7) + QT(1, 1) * (qt_bracket(4) + qt_bracket(3))
    assert bracket_form("2q^2t^2[5]") == QT(2, 2, 2) * qt_bracket(5)
    with pytest.raises(DomainError):
        bracket_form("[5]+q*x[1]")


def test_lookups():
    assert lookup("B2", 2, "tabulated-B-series").expected == qt_bracket(9) + QT(1, 1) * qt_bracket(5) + QT(2, 2)
    d3 = [e for e in golden_tables() if e.group == "D3" and e.m == 1 and e.source.endswith("series")]
    assert d3[0].expected == qt_bracket(7) + QT(1, 1) * (qt_bracket(4) + qt_bracket(3))
    dims = {(e.group, e.m): e.expected for e in golden_tables() if e.source == "tabulated-dimensions"}
    assert dims[("B3", 2)] == 84 == lookup("B3", 2).expected
    assert dims[("D3", 4)] == 285
    assert dims[("B4", 2)] == 495


def test_golden_series_values_match_dimensions():
    dims = {(e.group, e.m): e.expected for e in golden_tables() if e.source == "tabulated-dimensions"}
    for e in golden_tables():
        if e.source.endswith("-series") and (e.group, e.m) in dims:
            assert e.expected.value_at_one() == dims[(e.group, e.m)], (e.group, e.m)


def test_b4_m2_reading():
    assert golden_series("B", 4, 2).value_at_one() == 495
    assert golden_series("B", 4, 2).is_symmetric()


def test_report_statuses():
    with pytest.raises(ValueError):
        CheckReport("golden:B2:m=1", PASS_AFTER_SWAP, "")
    with pytest.raises(ValueError):
        CheckReport("x", "maybe", "")
    assert CheckReport("complex-rank2:G(3,1,2)", PASS_AFTER_SWAP, "").ok


def test_check_examples():
    assert check_golden("B2", 1).status == PASS
    assert check_golden("D3", 2).status == PASS
    for m in (1, 2, 3):
        assert check_dimension_conjecture("A1", m).status == PASS
    assert check_t1("A2", 2).status == PASS
    assert check_t1("B2", 1).status == PASS
    with pytest.raises(DomainError):
        check_dimension_conjecture("G(4,2,2)", 1)


def test_catalog_shape():
    items = catalog()
    ids = [i.check_id for i in items]
    assert len(ids) == len(set(ids))
    assert {i.tier for i in items} == {0, 1, 2}
    assert all(i.tier <= 1 for i in select(1))
    assert all("B2" in i.groups for i in select(0, group="B2"))
    with pytest.raises(DomainError):
        run_tier(3)


@pytest.fixture(scope="module")
def tier0():
    return run_tier(0)


def test_tier0_all_pass(tier0):
    failures = [r.line() for r in tier0 if r.status == FAIL]
    assert not failures
    assert len(tier0) == len(select(0))


def test_tier0_complex_orientation(tier0):
    by_id = {r.check_id: r for r in tier0}
    for name in ("G(3,1,2)", "G(4,1,2)", "G(6,1,2)", "G(6,2,2)"):
        assert by_id[f"complex-rank2:{name}"].status == PASS_AFTER_SWAP
    assert by_id["complex-rank2:G(4,2,2)"].status == PASS


def test_parallel_run_matches_serial(tier0):
    serial = [(r.check_id, r.status, r.details) for r in run_tier(0, group="B2")]
    parallel = [(r.check_id, r.status, r.details) for r in run_tier(0, jobs=2, group="B2")]
    assert serial == parallel
