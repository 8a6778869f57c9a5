import cmath
import math

import pytest

from smg.factorization.base import PoleAtNonPositiveIntegerError
from smg.factorization.chf import GammaUtil


def test_log_gamma_at_one():
    assert abs(GammaUtil.log_gamma(1)) < 1e-15


def test_gamma_of_a_half():
    assert cmath.exp(GammaUtil.log_gamma(0.5)) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert GammaUtil.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_digamma_at_one():
    assert GammaUtil.digamma(1) == pytest.approx(-GammaUtil.EULER_GAMMA, rel=1e-14)


def test_reflection_formula():
    for z in (0.3 + 0.7j, -1.4 + 0.2j, 2.5 - 3j):
        assert GammaUtil.gamma(z) * GammaUtil.gamma(1 - z) == pytest.approx(cmath.pi / cmath.sin(cmath.pi * z),
                                                                           rel=1e-12)


def test_reciprocal_gamma_vanishes_at_poles():
    for n in (0, -1, -5):
        assert GammaUtil.rgamma(n) == 0


@pytest.mark.parametrize("z", [0, -3])
def test_poles_are_reported(z):
    with pytest.raises(PoleAtNonPositiveIntegerError):
        GammaUtil.gamma(z)
    with pytest.raises(PoleAtNonPositiveIntegerError):
        GammaUtil.digamma(z)
    with pytest.raises(PoleAtNonPositiveIntegerError):
        GammaUtil.log_gamma(z)


def test_integer_predicates():
    assert GammaUtil.is_integer(3 + 0j)
    assert not GammaUtil.is_integer(3 + 1e-12j)
    assert GammaUtil.is_nonpositive_integer(-2.0)
    assert not GammaUtil.is_nonpositive_integer(1.0)
    assert not GammaUtil.is_nonpositive_integer(-0.5)


def test_pochhammer():
    assert GammaUtil.pochhammer(3, 0) == 1
    assert GammaUtil.pochhammer(3, 4) == 3 * 4 * 5 * 6
    assert GammaUtil.pochhammer(-2, 4) == 0
