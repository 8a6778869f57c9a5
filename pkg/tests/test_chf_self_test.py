import pytest

from smg.factorization.chf import ChfSelfTest, ECHFKind


def test_battery_covers_every_identity():
    names = [r.get_name() for r in ChfSelfTest(samples=5, seed=0).run()]
    assert "kummer_transformation" in names
    assert "u_reflection" in names
    for kind in ECHFKind:
        assert "second_recurrence[{}]".format(kind.value) in names
        assert "derivative_identity[{}]".format(kind.value) in names
        assert "shifted_derivative[{}]".format(kind.value) in names


def test_battery_is_reproducible():
    first = [r.get_max_residual() for r in ChfSelfTest(samples=10, seed=42).run()]
    second = [r.get_max_residual() for r in ChfSelfTest(samples=10, seed=42).run()]
    assert first == second


@pytest.mark.slow
def test_every_identity_holds():
    results = ChfSelfTest(samples=1000, seed=0).run()
    failures = [r.summary_line() for r in results if not r.passed()]
    assert failures == []
