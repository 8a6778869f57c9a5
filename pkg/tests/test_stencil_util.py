import numpy as np
import pytest

from smg.factorization.verification import StencilUtil


def test_derivatives_of_a_sine():
    zs = np.linspace(0.0, 2 * np.pi, 1001)
    h = zs[1] - zs[0]
    inner = StencilUtil.interior(zs)
    assert len(inner) == len(zs) - 4
    np.testing.assert_allclose(StencilUtil.first_derivative(np.sin(zs), h), np.cos(inner), atol=1e-8)
    np.testing.assert_allclose(StencilUtil.second_derivative(np.sin(zs), h), -np.sin(inner), atol=1e-8)


def test_stencils_are_exact_for_quartics():
    zs = np.linspace(-1.0, 1.0, 21)
    h = zs[1] - zs[0]
    f = zs ** 4 - 2 * zs ** 3 + zs
    inner = StencilUtil.interior(zs)
    np.testing.assert_allclose(StencilUtil.first_derivative(f, h), 4 * inner ** 3 - 6 * inner ** 2 + 1, atol=1e-10)
    np.testing.assert_allclose(StencilUtil.second_derivative(f, h), 12 * inner ** 2 - 12 * inner, atol=1e-9)


def test_complex_values():
    zs = np.linspace(0.0, 3.0, 301)
    h = zs[1] - zs[0]
    f = np.exp(2j * zs)
    np.testing.assert_allclose(StencilUtil.second_derivative(f, h), -4 * StencilUtil.interior(f), atol=1e-7)


def test_error_bound_of_a_sine():
    zs = np.linspace(0.0, 2 * np.pi, 101)
    h = zs[1] - zs[0]
    assert StencilUtil.second_derivative_error_bound(np.sin(zs), h) == pytest.approx(h ** 4 / 90, rel=0.05)


def test_short_arrays_are_refused():
    with pytest.raises(ValueError):
        StencilUtil.first_derivative(np.zeros(4), 0.1)
    with pytest.raises(ValueError):
        StencilUtil.second_derivative_error_bound(np.zeros(6), 0.1)
    with pytest.raises(ValueError):
        StencilUtil.interior(np.zeros((5, 5)))
