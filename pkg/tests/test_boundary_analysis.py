import math

import pytest

from smg.factorization.ansatz import ParameterSolver
from smg.factorization.classification import BoundaryAnalysis, EInfinityGrowth
from smg.factorization.systems import ESystemName, SystemCatalog, SystemSpec


def _candidate(system, k, case_id):
    return ParameterSolver.solve_parameters(system, k)[case_id - 1]


@pytest.mark.parametrize("l", [0, 1, 3])
def test_origin_exponents_of_the_free_particle_in_3d(l):
    system = SystemSpec(ESystemName.FREE3D, l=l)
    assert BoundaryAnalysis.origin_exponent(_candidate(system, 1.0, 3)) == pytest.approx(l + 1)
    assert BoundaryAnalysis.origin_exponent(_candidate(system, 1.0, 1)) == pytest.approx(l + 1)
    assert BoundaryAnalysis.origin_exponent(_candidate(system, 1.0, 4)) == pytest.approx(-l)


def test_exponential_ansatz_has_no_origin():
    morse = SystemSpec(ESystemName.MORSE, D=1.0, k0=1.0)
    assert BoundaryAnalysis.origin_exponent(_candidate(morse, 0.9, 2)) is None


def test_origin_end_of_a_rejected_case():
    system = SystemSpec(ESystemName.FREE3D, l=1)
    origin, _ = SystemCatalog.domain_ends(system)
    assert BoundaryAnalysis.analyse_end(_candidate(system, 1.0, 2), origin).diverges()
    assert not BoundaryAnalysis.analyse_end(_candidate(system, 1.0, 3), origin).diverges()


def test_linear_potential_growth():
    system = SystemSpec(ESystemName.LINEAR, C=1.0)
    _, right = SystemCatalog.domain_ends(system)
    accepted = BoundaryAnalysis.analyse_end(_candidate(system, 1.0, 7), right)
    assert not accepted.diverges()
    assert accepted.get_growth() is EInfinityGrowth.DECAYING

    rejected = BoundaryAnalysis.analyse_end(_candidate(system, 1.0, 5), right)
    assert rejected.diverges()
    assert rejected.get_growth() is EInfinityGrowth.EXPONENTIAL_GROWTH


def test_oscillating_end():
    system = SystemSpec(ESystemName.FREE1D)
    _, right = SystemCatalog.domain_ends(system)
    behaviour = BoundaryAnalysis.analyse_end(_candidate(system, 1.0, 3), right)
    assert not behaviour.diverges()
    assert behaviour.get_growth() is EInfinityGrowth.OSCILLATORY


def test_morse_left_end():
    system = SystemSpec(ESystemName.MORSE, D=2.3 ** 2 / 2, k0=1.0)
    left, _ = SystemCatalog.domain_ends(system)
    assert not BoundaryAnalysis.analyse_end(_candidate(system, 0.9, 2), left).diverges()
    assert BoundaryAnalysis.analyse_end(_candidate(system, 0.9, 4), left).diverges()


def test_continuation_adds_kummer():
    linear = SystemSpec(ESystemName.LINEAR, C=1.0)
    assert BoundaryAnalysis.continuation_adds_kummer(_candidate(linear, 1.0, 3))
    free1d = SystemSpec(ESystemName.FREE1D)
    # U(0, 0, ζ) = 1 is single-valued.
    assert not BoundaryAnalysis.continuation_adds_kummer(_candidate(free1d, 1.0, 2))


@pytest.mark.parametrize("m", [0, 1, 2])
def test_second_solution_grows_like_an_exponential(m):
    lo, hi = BoundaryAnalysis.SECOND_SOLUTION_SPAN
    predicted = 0.5 - (m + 1) * math.log(hi / lo) / (hi - lo)
    assert BoundaryAnalysis.second_solution_growth_rate(m) == pytest.approx(predicted, abs=1e-2)
