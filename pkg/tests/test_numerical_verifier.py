import math

import numpy as np
import pytest

from smg.factorization.ansatz import ParameterSolver
from smg.factorization.base import GridTooCoarseError, OracleUnavailableError, PoleTooCloseError
from smg.factorization.base import UnsupportedSystemError
from smg.factorization.classification import CandidateClassifier
from smg.factorization.systems import ESystemName, EVerdictStatus, SystemSpec
from smg.factorization.verification import NumericalVerifier, VerifierSettings, WavefunctionGrid


FREE1D = SystemSpec(ESystemName.FREE1D)


@pytest.fixture
def verifier():
    return NumericalVerifier()


def _candidate(system, k, case_id):
    return ParameterSolver.solve_parameters(system, k)[case_id - 1]


# The Schrödinger residual

def test_cosine_solves_the_free_equation(verifier):
    q = np.linspace(-10.0, 10.0, 4096)
    report = verifier.schrodinger_residual(WavefunctionGrid(FREE1D, 1.0, q, np.cos(q)))
    assert report.passed()
    assert report.get_max_rel_residual() < 1e-8


def test_wrong_wavenumber_is_caught(verifier):
    q = np.linspace(-10.0, 10.0, 4096)
    report = verifier.schrodinger_residual(WavefunctionGrid(FREE1D, 1.0, q, np.cos(1.1 * q)))
    assert not report.passed()
    assert report.get_max_rel_residual() > 0.1


def test_coarse_grid_is_refused():
    strict = NumericalVerifier(VerifierSettings(tolerance=1e-12))
    q = np.linspace(-10.0, 10.0, 64)
    with pytest.raises(GridTooCoarseError):
        strict.schrodinger_residual(WavefunctionGrid(FREE1D, 1.0, q, np.cos(q)))


@pytest.mark.parametrize("system, k, case_id", [
    (FREE1D, 1.0, 3),
    (SystemSpec(ESystemName.FREE3D, l=1), 1.3, 3),
    (SystemSpec(ESystemName.HYDROGEN, l=0, Z=1.0, a0_tilde=1.0), 1.0, 1),
    (SystemSpec(ESystemName.LINEAR, C=1.0), 1.0, 7)
])
def test_accepted_wavefunctions_pass(verifier, system, k, case_id):
    candidate = _candidate(system, k, case_id)
    grid = verifier.grid_for(candidate)
    assert grid.get_n() == verifier.get_settings().get_grid_n()
    for report in (verifier.schrodinger_residual(grid), verifier.subsidiary_residual(grid, candidate),
                   verifier.riccati_check(candidate)):
        assert report.passed(), report


def test_riccati_check_refuses_a_pole(verifier):
    with pytest.raises(PoleTooCloseError):
        verifier.riccati_check(_candidate(FREE1D, 1.0, 3), [1.0, math.pi])


# The ladder chain

@pytest.mark.parametrize("j", [0, 1, 3, 6])
def test_ladder_chain(verifier, j):
    report = verifier.ladder_chain_1d(j, 1.0)
    assert report.passed(), report
    assert report.get_name() == "ladder_chain[j={}]".format(j)


def test_ladder_chain_limits(verifier):
    with pytest.raises(ValueError):
        verifier.ladder_chain_1d(NumericalVerifier.MAX_CHAIN_INDEX + 1, 1.0)
    with pytest.raises(GridTooCoarseError):
        verifier.ladder_chain_1d(3, 1.0, np.linspace(0.1, 3.0, 70))


# The system-level checks

def test_airy_asymptotics(verifier):
    reports = verifier.airy_asymptotics(SystemSpec(ESystemName.LINEAR, C=1.0), 1.0)
    assert [r.get_name() for r in reports] == ["airy_decaying_form", "airy_oscillating_envelope"]
    assert all(r.passed() for r in reports), reports
    with pytest.raises(UnsupportedSystemError):
        verifier.airy_asymptotics(FREE1D, 1.0)


def test_closed_forms_of_the_free_particle(verifier):
    reports = verifier.closed_form_crosschecks(FREE1D, 1.0)
    assert [r.get_name() for r in reports] == ["sin_identity", "oracle_ratio[case 1]", "oracle_ratio[case 3]"]
    assert all(r.passed() for r in reports), reports


def test_closed_forms_in_the_plane_compare_both_signs_of_m(verifier):
    reports = verifier.closed_form_crosschecks(SystemSpec(ESystemName.FREE2D, m=-2), 1.3)
    assert [r.get_name() for r in reports] == [
        "mirrored_m[case 1]", "mirrored_m[case 3]", "oracle_ratio[case 1]", "oracle_ratio[case 3]"
    ]
    assert all(r.passed() for r in reports), reports

    names = [r.get_name() for r in verifier.closed_form_crosschecks(SystemSpec(ESystemName.FREE2D, m=0), 1.0)]
    assert names == ["oracle_ratio[case 1]", "oracle_ratio[case 3]"]


def test_hydrogen_has_no_closed_form(verifier):
    with pytest.raises(OracleUnavailableError):
        verifier.closed_form_crosschecks(SystemSpec(ESystemName.HYDROGEN, l=0, Z=1.0, a0_tilde=1.0), 1.0)


def test_hydrogen_items_are_conjugates(verifier):
    report = verifier.hydrogen_conjugation(SystemSpec(ESystemName.HYDROGEN, l=1, Z=1.0, a0_tilde=1.0), 0.7)
    assert report.passed(), report


def test_morse_wavefunctions_are_real(verifier):
    reports = verifier.morse_reality(SystemSpec(ESystemName.MORSE, D=2.3 ** 2 / 2, k0=1.0), 0.9)
    assert [r.get_name() for r in reports] == ["reality[item 2]", "reality[item 6]"]
    assert all(r.passed() for r in reports), reports


def test_free_particle_cases_share_a_superpotential(verifier):
    assert verifier.duplicate_superpotentials(SystemSpec(ESystemName.FREE3D, l=2), 1.0).passed()


def test_plane_polar_chain_does_not_continue(verifier):
    report = verifier.plane_polar_chain(SystemSpec(ESystemName.FREE2D, m=1), 1.0)
    assert not report.passed()


def test_zero_energy_growth(verifier):
    report = verifier.zero_energy_growth(SystemSpec(ESystemName.MORSE, D=1.5 ** 2 / 2, k0=1.0))
    assert report is not None and report.passed(), report
    assert report.get_name() == "zero_energy_growth[m=1]"
    assert verifier.zero_energy_growth(SystemSpec(ESystemName.MORSE, D=2.3 ** 2 / 2, k0=1.0)) is None


# Rejections

def test_rejection_at_the_origin_is_confirmed(verifier):
    candidate = _candidate(SystemSpec(ESystemName.FREE3D, l=1), 1.0, 2)
    verdict = CandidateClassifier().classify(candidate)
    report = verifier.confirm_rejection(candidate, EVerdictStatus.REJECTED_DIVERGES_AT_ORIGIN, verdict)
    assert not report.passed()
    assert report.get_max_rel_residual() == pytest.approx(2.0, rel=1e-2)


def test_imaginary_superpotential_is_confirmed(verifier):
    candidate = _candidate(FREE1D, 1.0, 2)
    verdict = CandidateClassifier().classify(candidate)
    report = verifier.confirm_rejection(candidate, EVerdictStatus.REJECTED_IMAGINARY_W, verdict)
    assert report.get_max_rel_residual() == pytest.approx(1.0)


def test_growth_at_infinity_is_confirmed(verifier):
    candidate = _candidate(SystemSpec(ESystemName.LINEAR, C=1.0), 1.0, 5)
    verdict = CandidateClassifier().classify(candidate)
    report = verifier.confirm_rejection(candidate, EVerdictStatus.REJECTED_DIVERGES_AT_INFINITY, verdict)
    assert report.get_max_rel_residual() > 0.1


def test_accepted_is_not_a_rejection(verifier):
    candidate = _candidate(FREE1D, 1.0, 3)
    verdict = CandidateClassifier().classify(candidate)
    with pytest.raises(ValueError):
        verifier.confirm_rejection(candidate, EVerdictStatus.ACCEPTED, verdict)
