import numpy as np
import pytest

from smg.factorization.base import OracleUnavailableError
from smg.factorization.chf import CHFParams, ChfUtil
from smg.factorization.systems import ESystemName, SystemSpec
from smg.factorization.verification import IndependentOracles


def test_airy_function_two_ways():
    assert IndependentOracles.airy_ai(0.0) == pytest.approx(0.3550280538878172, rel=1e-14)
    zs = np.linspace(0.5, 4.0, 30)
    np.testing.assert_allclose(IndependentOracles.airy_via_modified_bessel(zs), IndependentOracles.airy_ai(zs),
                               rtol=1e-10)
    with pytest.raises(ValueError):
        IndependentOracles.airy_via_modified_bessel(np.array([-1.0, 1.0]))


def test_reduced_wavefunctions():
    zs = np.linspace(0.3, 10.0, 25)
    np.testing.assert_allclose(
        IndependentOracles.reduced_wavefunction(SystemSpec(ESystemName.FREE3D, l=0), zs), np.sin(zs), atol=1e-14
    )
    np.testing.assert_allclose(
        IndependentOracles.reduced_wavefunction(SystemSpec(ESystemName.FREE2D, m=-2), zs),
        np.sqrt(zs) * IndependentOracles.bessel_j(2, zs)
    )
    np.testing.assert_allclose(
        IndependentOracles.reduced_wavefunction(SystemSpec(ESystemName.FREE1D), zs), np.sin(zs)
    )


def test_hydrogen_has_no_oracle():
    with pytest.raises(OracleUnavailableError):
        IndependentOracles.reduced_wavefunction(SystemSpec(ESystemName.HYDROGEN, l=0, Z=1.0, a0_tilde=1.0),
                                                np.array([1.0]))


def test_tricomi_function_agrees_with_the_kernel():
    assert IndependentOracles.tricomi_u(1, 2, 4.0) == pytest.approx(0.25, rel=1e-14)
    for a, b, zeta in [(0.5 - 2.3j, 1 + 1.8j, 4.6), (0.3 + 1j, -0.7, 2.0 - 1.5j), (-1.2, 2.5, 0.8)]:
        expected = IndependentOracles.tricomi_u(a, b, zeta)
        assert abs(ChfUtil.eval_U(CHFParams(a, b), zeta) - expected) <= 1e-8 * abs(expected)
