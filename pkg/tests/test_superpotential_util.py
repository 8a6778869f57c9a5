import math

import numpy as np
import pytest

from smg.factorization.ansatz import AnsatzUtil, ParameterSolver
from smg.factorization.base import PoleAtNodeError
from smg.factorization.chf import ChfUtil
from smg.factorization.classification import SuperpotentialUtil
from smg.factorization.systems import ESystemName, SystemCatalog, SystemSpec


def _candidate(system, k, case_id, alpha=None):
    return ParameterSolver.solve_parameters(system, k, alpha)[case_id - 1]


def test_free_particle_superpotential_is_minus_cotangent():
    candidate = _candidate(SystemSpec(ESystemName.FREE1D), 1.0, 3)
    assert SuperpotentialUtil.superpotential(candidate, math.pi / 4) == pytest.approx(-1.0, abs=1e-12)
    for z in (0.3, 1.2, -2.0, 5.5):
        assert SuperpotentialUtil.superpotential(candidate, z) == pytest.approx(-1.0 / math.tan(z), rel=1e-10)


def test_free_particle_wavefunction_is_a_sine():
    candidate = _candidate(SystemSpec(ESystemName.FREE1D), 1.0, 3)
    zs = np.linspace(-6.0, 6.0, 40)
    u = np.array([SuperpotentialUtil.wavefunction_reduced(candidate, z) for z in zs])
    ratio = u / np.sin(zs)
    np.testing.assert_allclose(ratio, ratio[1], rtol=1e-10)


def test_superpotential_has_poles_at_nodes():
    candidate = _candidate(SystemSpec(ESystemName.FREE1D), 1.0, 3)
    with pytest.raises(PoleAtNodeError):
        SuperpotentialUtil.superpotential(candidate, math.pi)


def test_sample_marks_nodes():
    candidate = _candidate(SystemSpec(ESystemName.FREE1D), 1.0, 3)
    zs = np.array([0.5, math.pi, 2.5])
    u, w, is_node = SuperpotentialUtil.sample(candidate, zs)
    assert list(is_node) == [False, True, False]
    assert np.isnan(w[1])
    assert w[0] == pytest.approx(-1.0 / math.tan(0.5), rel=1e-10)
    assert abs(u[1]) < 1e-12 * max(abs(u[0]), abs(u[2]))


@pytest.mark.parametrize("system, k, case_id, zs", [
    (SystemSpec(ESystemName.FREE3D, l=2), 1.0, 3, (0.8, 2.7, 6.1)),
    (SystemSpec(ESystemName.HYDROGEN, l=1, Z=1.0, a0_tilde=1.0), 0.7, 1, (0.5, 3.3, 9.0)),
    (SystemSpec(ESystemName.LINEAR, C=1.0), 1.3, 7, (-1.4, 0.7, 2.2)),
    (SystemSpec(ESystemName.MORSE, D=2.3 ** 2 / 2, k0=1.0), 0.9, 2, (-0.7, 0.9, 2.5))
])
def test_riccati_relation(system, k, case_id, zs):
    # W² - W' = rhs/4
    candidate = _candidate(system, k, case_id)
    for z in zs:
        w = SuperpotentialUtil.superpotential(candidate, z)
        dw = SuperpotentialUtil.superpotential_derivative(candidate, z)
        rhs = SystemCatalog.ansatz_rhs(system, k, z) / 4
        assert abs(w * w - dw - rhs) <= 1e-8 * max(abs(w * w), abs(dw), abs(rhs), 1.0)


def test_superpotential_derivative_matches_finite_difference():
    candidate = _candidate(SystemSpec(ESystemName.FREE2D, m=1), 1.2, 3)
    h = 1e-5
    for z in (0.9, 2.4):
        numeric = (SuperpotentialUtil.superpotential(candidate, z + h) -
                   SuperpotentialUtil.superpotential(candidate, z - h)) / (2 * h)
        assert SuperpotentialUtil.superpotential_derivative(candidate, z) == pytest.approx(numeric, rel=1e-6)


def test_superpotential_is_the_log_derivative_of_the_wavefunction():
    candidate = _candidate(SystemSpec(ESystemName.MORSE, D=0.245, k0=1.0), 0.4, 6)
    h = 1e-5
    for z in (-1.0, 0.3, 1.8):
        u_plus = SuperpotentialUtil.wavefunction_reduced(candidate, z + h)
        u_minus = SuperpotentialUtil.wavefunction_reduced(candidate, z - h)
        u = SuperpotentialUtil.wavefunction_reduced(candidate, z)
        numeric = -(u_plus - u_minus) / (2 * h) / u
        assert SuperpotentialUtil.superpotential(candidate, z) == pytest.approx(numeric, rel=1e-6, abs=1e-8)


@pytest.mark.parametrize("case_id", [1, 2, 3])
def test_wavefunction_is_built_from_the_ansatz_prefactor(case_id):
    candidate = _candidate(SystemSpec(ESystemName.FREE3D, l=1), 1.0, case_id)
    zm, gamma = candidate.get_zeta_map(), candidate.get_greek().get_gamma()
    zs = np.array([0.7, 2.5, 6.0])
    u_sampled, _, _ = SuperpotentialUtil.sample(candidate, zs)
    for z, u in zip(zs, u_sampled):
        point = zm.evaluate(z)
        f = ChfUtil.eval_F_on_sheet(
            candidate.get_kind(), candidate.get_params(), point.get_zeta(), point.get_winding()
        )
        expected = AnsatzUtil.compute_f(zm, gamma, z) * f
        assert SuperpotentialUtil.wavefunction_reduced(candidate, z) == pytest.approx(expected, rel=1e-12)
        assert u == pytest.approx(expected, rel=1e-12)


def test_hydrogen_regular_solution_vanishes_like_a_power():
    l = 2
    system = SystemSpec(ESystemName.HYDROGEN, l=l, Z=1.0, a0_tilde=1.0)
    candidate = _candidate(system, 1.0, 1)
    ratios = [
        abs(SuperpotentialUtil.wavefunction_reduced(candidate, r)) / r ** (l + 1) for r in (1e-4, 1e-3, 1e-2)
    ]
    assert ratios[1] == pytest.approx(ratios[0], rel=1e-2)
    assert ratios[2] == pytest.approx(ratios[0], rel=2e-2)


def test_physical_wavefunction_divides_out_the_measure():
    system = SystemSpec(ESystemName.FREE3D, l=0)
    candidate = _candidate(system, 2.0, 3)
    z = 1.7
    q = candidate.get_frame().q_from_z(z)
    u = SuperpotentialUtil.wavefunction_reduced(candidate, z)
    assert SuperpotentialUtil.wavefunction(candidate, z) == pytest.approx(u / q)
