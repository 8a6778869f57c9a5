import math

import pytest

from smg.factorization.base import GridTooCoarseError
from smg.factorization.systems import ESystemName, SystemSpec
from smg.factorization.verification import CheckRecord, ResidualReport


@pytest.fixture
def hydrogen():
    return SystemSpec(ESystemName.HYDROGEN, l=1, Z=1.0, a0_tilde=1.0)


def test_report_passes_within_tolerance():
    assert ResidualReport("riccati", 1e-9, 0.3, 1e-6).passed()
    assert ResidualReport("riccati", 1e-6, 0.3, 1e-6).passed()
    assert not ResidualReport("riccati", 2e-6, 0.3, 1e-6).passed()
    assert not ResidualReport("riccati", math.nan, math.nan, 1e-6).passed()


def test_record_that_expects_failure(hydrogen):
    failing = ResidualReport("rejection[rejected_diverges_at_origin]", 1.0, 1e-4, 1e-3)
    assert CheckRecord(hydrogen, 1.0, 2, failing, expect_failure=True).is_ok()
    assert not CheckRecord(hydrogen, 1.0, 2, failing).is_ok()

    passing = ResidualReport("schrodinger", 1e-9, 2.0, 1e-6)
    record = CheckRecord(hydrogen, 1.0, 1, passing, expect_failure=True)
    assert not record.is_ok()
    assert "UNEXPECTED PASS" in record.format_row()


def test_record_from_error(hydrogen):
    record = CheckRecord.from_error(hydrogen, 0.7, 1, "schrodinger", 1e-6, GridTooCoarseError("too coarse"))
    assert not record.is_ok()
    assert math.isnan(record.get_report().get_max_rel_residual())
    assert record.get_report().get_detail() == "GridTooCoarseError: too coarse"
    assert "FAILED" in record.format_row()


def test_record_as_dict(hydrogen):
    record = CheckRecord(hydrogen, 0.7, None, ResidualReport("conjugation[1 vs 3]", 3e-12, math.nan, 1e-9))
    d = record.to_dict()
    assert d["system"] == "hydrogen"
    assert d["parameters"] == {"l": 1, "Z": 1.0, "a0_tilde": 1.0, "mass": 1.0, "hbar": 1.0}
    assert d["case_id"] is None
    assert d["location"] is None
    assert d["max_residual"] == 3e-12
    assert d["pass"] is True
    assert d["expect_failure"] is False
