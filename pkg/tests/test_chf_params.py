import pytest

from smg.factorization.base import BetaUndefinedError, InvalidBError
from smg.factorization.chf import CHFParams, ECHFKind, EvalPolicy, GreekCoefficients


def test_parameters_must_be_finite():
    with pytest.raises(ValueError):
        CHFParams(float("inf"), 1)
    with pytest.raises(ValueError):
        CHFParams(1, complex(0, float("nan")))


def test_validity_per_kind():
    assert CHFParams(1, 2).is_valid_for(ECHFKind.M)
    assert not CHFParams(1, -2).is_valid_for(ECHFKind.M)
    assert CHFParams(1, -2).is_valid_for(ECHFKind.U)
    assert not CHFParams(1, 3).is_valid_for(ECHFKind.MTILDE)
    assert CHFParams(1, 0).is_valid_for(ECHFKind.MTILDE)
    with pytest.raises(InvalidBError):
        CHFParams(1, 0).check_valid_for(ECHFKind.M)


def test_reduced_and_shifted_parameters():
    p = CHFParams(0.5 + 1j, -2)
    assert p.reduced() == CHFParams(3.5 + 1j, 4)
    assert p.with_b_shifted() == CHFParams(0.5 + 1j, -1)
    assert p.with_b_shifted(-2) == CHFParams(0.5 + 1j, -4)


def test_kind_parsing():
    assert ECHFKind.parse("Mtilde") is ECHFKind.MTILDE
    assert ECHFKind.parse("U") is ECHFKind.U


@pytest.mark.parametrize("kind", list(ECHFKind))
@pytest.mark.parametrize("a, b", [(0.3 + 0.2j, 1.7), (-1.0, -4.0), (2.0 + 1j, 5.0 - 2j), (0.0, 0.0)])
def test_greek_coefficients_are_consistent(kind, a, b):
    params = CHFParams(a, b)
    if (kind is ECHFKind.M and b == 0) or (kind is ECHFKind.MTILDE and b == 2) or not params.is_valid_for(kind):
        pytest.skip("β is undefined or the function does not exist")
    greek = GreekCoefficients(kind, params)
    first, second = greek.consistency_residuals()
    assert abs(first) < 1e-12
    assert abs(second) < 1e-12


def test_greek_coefficients_by_kind():
    u = GreekCoefficients(ECHFKind.U, CHFParams(1, 2))
    assert (u.get_beta(), u.get_gamma(), u.get_delta()) == (1, 2, 1)

    m = GreekCoefficients(ECHFKind.M, CHFParams(1, 2))
    assert (m.get_beta(), m.get_gamma(), m.get_delta()) == (0.5, 2, 2)

    mtilde = GreekCoefficients(ECHFKind.MTILDE, CHFParams(0, 0))
    assert (mtilde.get_beta(), mtilde.get_gamma(), mtilde.get_delta()) == (0.5, 2, 2)


def test_undefined_beta():
    with pytest.raises(BetaUndefinedError):
        GreekCoefficients(ECHFKind.M, CHFParams(1, 0))
    with pytest.raises(BetaUndefinedError):
        GreekCoefficients(ECHFKind.MTILDE, CHFParams(1, 2))


def test_eval_policy_defaults_and_validation():
    policy = EvalPolicy.default()
    assert policy.get_series_tol() == 1e-15
    assert policy.get_cancellation_limit() == 1e3
    with pytest.raises(ValueError):
        EvalPolicy(series_tol=0.0)
    with pytest.raises(ValueError):
        EvalPolicy(cancellation_limit=0.5)
