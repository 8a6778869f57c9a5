import cmath
import math

import mpmath
import numpy as np
import pytest

from smg.factorization.base import BranchCutAmbiguityError, InvalidBError
from smg.factorization.chf import CHFParams, ChfUtil, ECHFKind, GreekCoefficients


def _assert_close(actual: complex, expected: complex, rtol: float) -> None:
    assert abs(actual - expected) <= rtol * max(abs(expected), 1e-300)


# Kummer's function

@pytest.mark.parametrize("a, b, zeta", [(1.0, 2.0, 0.0), (0.3 + 2j, -1.5, 0.0), (-4.0, 7.5j, 0.0)])
def test_kummer_at_origin_is_one(a, b, zeta):
    assert ChfUtil.eval_M(CHFParams(a, b), zeta) == 1


def test_kummer_closed_forms():
    _assert_close(ChfUtil.eval_M(CHFParams(1, 2), 2j), (cmath.exp(2j) - 1) / 2j, 1e-12)
    _assert_close(ChfUtil.eval_M(CHFParams(1, 2), 2j), cmath.exp(1j) * math.sin(1.0), 1e-12)
    _assert_close(ChfUtil.eval_M(CHFParams(1.5, 1.5), 0.7), math.exp(0.7), 1e-12)


def test_kummer_matches_extended_precision():
    rng = np.random.default_rng(7)
    for _ in range(200):
        a = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        b = complex(rng.uniform(0.5, 5), rng.uniform(-3, 3))
        zeta = complex(rng.uniform(-7, 7), rng.uniform(-7, 7))
        with mpmath.workdps(30):
            expected = complex(mpmath.hyp1f1(a, b, zeta))
        _assert_close(ChfUtil.eval_M(CHFParams(a, b), zeta), expected, 1e-9)


def test_kummer_transformation():
    rng = np.random.default_rng(11)
    for _ in range(200):
        a = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        b = complex(rng.uniform(0.5, 5), rng.uniform(-3, 3))
        zeta = complex(rng.uniform(-7, 7), rng.uniform(-7, 7))
        lhs = ChfUtil.eval_M(CHFParams(a, b), zeta)
        rhs = cmath.exp(zeta) * ChfUtil.eval_M(CHFParams(b - a, b), -zeta)
        _assert_close(lhs, rhs, 1e-9)


def test_kummer_rejects_nonpositive_integer_b():
    with pytest.raises(InvalidBError):
        ChfUtil.eval_M(CHFParams(1, -2), 1.0)


# Tricomi's function

def test_tricomi_closed_forms():
    _assert_close(ChfUtil.eval_U(CHFParams(1, 2), 4.0), 0.25, 1e-12)
    _assert_close(ChfUtil.eval_U(CHFParams(-1, 0.5), 2.0), 1.5, 1e-12)
    for zeta in (0.3, 2.0 + 1j, -3.0 + 0.5j, 17.0j):
        _assert_close(ChfUtil.eval_U(CHFParams(0, 0), zeta), 1.0, 1e-12)


def test_tricomi_matches_extended_precision():
    rng = np.random.default_rng(3)
    for _ in range(100):
        a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        b = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        zeta = complex(rng.uniform(0.5, 8), rng.uniform(-6, 6))
        with mpmath.workdps(30):
            expected = complex(mpmath.hyperu(a, b, zeta))
        _assert_close(ChfUtil.eval_U(CHFParams(a, b), zeta), expected, 1e-8)


def test_tricomi_refuses_points_on_the_cut():
    with pytest.raises(BranchCutAmbiguityError):
        ChfUtil.eval_U(CHFParams(0.5, 1.5), -2.0)


def test_tricomi_continuation_joins_the_upper_side_of_the_cut():
    # ζ just below the cut, carried once round the origin, lands just above it.
    for params in (CHFParams(0.5 + 0.2j, 1.5), CHFParams(1 + 1j, 2), CHFParams(0.3, -0.7j)):
        below = ChfUtil.eval_U_on_sheet(params, -2.0 - 1e-9j, 1)
        above = ChfUtil.eval_U(params, -2.0 + 1e-9j)
        _assert_close(below, above, 1e-6)


def test_tricomi_on_principal_sheet_is_principal_value():
    params = CHFParams(0.4 - 0.3j, 1.7)
    assert ChfUtil.eval_U_on_sheet(params, 1.5 + 2j, 0) == pytest.approx(ChfUtil.eval_U(params, 1.5 + 2j), rel=1e-14)


# The second Frobenius solution

def test_mtilde_closed_forms():
    _assert_close(ChfUtil.eval_Mtilde(CHFParams(0, 0), 1.0), math.e - 1, 1e-12)
    _assert_close(ChfUtil.eval_Mtilde(CHFParams(0.3 + 1j, 1), 2.5 - 1j),
                  ChfUtil.eval_M(CHFParams(0.3 + 1j, 1), 2.5 - 1j), 1e-13)
    _assert_close(ChfUtil.eval_Mtilde(CHFParams(-1, -2), 2j), (2j) ** 3 * ChfUtil.eval_M(CHFParams(2, 4), 2j), 1e-12)


def test_mtilde_rejects_b_making_it_undefined():
    with pytest.raises(InvalidBError):
        ChfUtil.eval_Mtilde(CHFParams(1, 3), 1.0)


# Derivatives and recurrences

def test_kummer_derivative_at_origin():
    params = CHFParams(0.7 - 0.2j, 2.5)
    _assert_close(ChfUtil.eval_dF(ECHFKind.M, params, 0.0), params.get_a() / params.get_b(), 1e-14)


def test_tricomi_derivative():
    _assert_close(ChfUtil.eval_dF(ECHFKind.U, CHFParams(1, 2), 2.0), -0.25, 1e-12)


@pytest.mark.parametrize("kind, params", [
    (ECHFKind.M, CHFParams(0.4 + 1j, 1.3 - 0.5j)),
    (ECHFKind.U, CHFParams(0.4 + 1j, 1.3 - 0.5j)),
    (ECHFKind.MTILDE, CHFParams(0.4 + 1j, 0.3 - 0.5j))
])
def test_second_recurrence(kind, params):
    greek = GreekCoefficients(kind, params)
    for zeta in (0.8 + 0.3j, 2.5 - 1j, 4.0j):
        f = ChfUtil.eval_F(kind, params, zeta)
        f_plus = ChfUtil.eval_F_plus(kind, params, zeta)
        df_plus = ChfUtil.eval_dF_plus(kind, params, zeta)
        residual = zeta * df_plus + greek.get_gamma() * f_plus - greek.get_delta() * f
        scale = max(abs(zeta * df_plus), abs(greek.get_gamma() * f_plus), abs(greek.get_delta() * f))
        assert abs(residual) <= 1e-10 * scale


def test_derivative_matches_finite_difference():
    params = CHFParams(0.6 - 0.4j, 1.8 + 0.3j)
    h = 1e-5
    for kind in ECHFKind:
        zeta = 1.7 + 0.6j
        numeric = (ChfUtil.eval_F(kind, params, zeta + h) - ChfUtil.eval_F(kind, params, zeta - h)) / (2 * h)
        _assert_close(ChfUtil.eval_dF(kind, params, zeta), numeric, 1e-7)


def _shifted_derivative(kind: ECHFKind, a: complex, b: complex, zeta: complex) -> complex:
    # M' = (a/b) M(a+1,b+1,ζ), U' = -a U(a+1,b+1,ζ), and M̃ through M(1+a-b, 2-b, ζ).
    with mpmath.workdps(30):
        if kind is ECHFKind.U:
            return complex(-a * mpmath.hyperu(a + 1, b + 1, zeta))
        if kind is ECHFKind.MTILDE:
            a, b = 1 + a - b, 2 - b
        return complex(a / b * mpmath.hyp1f1(a + 1, b + 1, zeta))


def _disk_samples(seed: int, n: int) -> list:
    rng = np.random.default_rng(seed)
    samples = []
    while len(samples) < n:
        a, b, zeta = (cmath.rect(10 * math.sqrt(rng.uniform()), rng.uniform(-math.pi, math.pi)) for _ in range(3))
        if abs(b - round(b.real)) >= 0.25 and (zeta.real > 0.1 or abs(zeta.imag) > 0.5):
            samples.append((a, b, zeta))
    return samples


@pytest.mark.parametrize("kind", list(ECHFKind))
def test_derivative_matches_shifted_closed_form(kind):
    for a, b, zeta in _disk_samples(5, 100):
        _assert_close(ChfUtil.eval_dF(kind, CHFParams(a, b), zeta), _shifted_derivative(kind, a, b, zeta), 1e-11)


@pytest.mark.slow
@pytest.mark.parametrize("kind", list(ECHFKind))
def test_derivative_matches_shifted_closed_form_over_1000_samples(kind):
    for a, b, zeta in _disk_samples(17, 1000):
        _assert_close(ChfUtil.eval_dF(kind, CHFParams(a, b), zeta), _shifted_derivative(kind, a, b, zeta), 1e-11)


def test_tricomi_derivative_where_the_connection_formula_cancels():
    a, b, zeta = -1.06 + 2.41j, -3.59 - 3.40j, 5.25 - 4.15j
    params = CHFParams(a, b)
    with mpmath.workdps(40):
        expected = complex(mpmath.hyperu(a, b, zeta))
    _assert_close(ChfUtil.eval_U(params, zeta), expected, 1e-12)
    _assert_close(ChfUtil.eval_dF(ECHFKind.U, params, zeta), _shifted_derivative(ECHFKind.U, a, b, zeta), 1e-11)


def test_derivative_falls_back_when_the_identity_cancels():
    # For large ζ, U(a,b,ζ) and U(a,b+1,ζ) agree to leading order and U' is much smaller than either.
    params, zeta = CHFParams(0.3 + 0.2j, 1.7), 25.0 + 3.0j
    f, f_plus = ChfUtil.eval_F(ECHFKind.U, params, zeta), ChfUtil.eval_F_plus(ECHFKind.U, params, zeta)
    assert abs(f) + abs(f_plus) > ChfUtil.DERIVATIVE_CANCELLATION_LIMIT * abs(f - f_plus)
    _assert_close(ChfUtil.eval_dF(ECHFKind.U, params, zeta), _shifted_derivative(ECHFKind.U, 0.3 + 0.2j, 1.7, zeta),
                  1e-12)


# The logarithmic second solution

@pytest.mark.parametrize("m", [0, 1, 2, 4])
def test_log_second_solution_satisfies_the_equation(m):
    # ζF'' + (1 - ζ)F' + mF = 0
    h = 1e-3
    for zeta in (0.9, 1.7 + 0.8j, 3.2):
        f = ChfUtil.eval_log_second_solution(m, zeta)
        fp = ChfUtil.eval_log_second_solution(m, zeta + h)
        fm = ChfUtil.eval_log_second_solution(m, zeta - h)
        d1 = (fp - fm) / (2 * h)
        d2 = (fp - 2 * f + fm) / (h * h)
        scale = max(abs(zeta * d2), abs((1 - zeta) * d1), abs(m * f), 1.0)
        assert abs(zeta * d2 + (1 - zeta) * d1 + m * f) <= 1e-5 * scale


def test_log_second_solution_refuses_negative_m():
    with pytest.raises(ValueError):
        ChfUtil.eval_log_second_solution(-1, 1.0)


# Leading behaviour

def test_small_zeta_leading_terms():
    params = CHFParams(0.3 + 0.5j, -1.5)
    m_terms = ChfUtil.small_zeta_leading_terms(ECHFKind.M, params)
    assert len(m_terms) == 1 and m_terms[0].get_power() == 0

    mtilde_terms = ChfUtil.small_zeta_leading_terms(ECHFKind.MTILDE, params)
    assert mtilde_terms[0].get_power() == pytest.approx(2.5)

    u_terms = ChfUtil.small_zeta_leading_terms(ECHFKind.U, CHFParams(0.5 + 1j, 1))
    assert u_terms[0].has_log()


def test_large_zeta_leading_terms():
    u_terms = ChfUtil.large_zeta_leading_terms(ECHFKind.U, CHFParams(0.5 + 1j, 1.5))
    assert len(u_terms) == 1
    assert u_terms[0].get_power() == pytest.approx(-(0.5 + 1j))
    assert u_terms[0].get_exp_rate() == 0

    m_terms = ChfUtil.large_zeta_leading_terms(ECHFKind.M, CHFParams(0.5 + 1j, 1.5))
    assert sorted(t.get_exp_rate() for t in m_terms) == [0, 1]

    # M(-2, b, ζ) is a polynomial, so it has no exponential term.
    polynomial_terms = ChfUtil.large_zeta_leading_terms(ECHFKind.M, CHFParams(-2, 1.5))
    assert [t.get_exp_rate() for t in polynomial_terms] == [0]
