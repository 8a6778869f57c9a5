import pytest

from smg.factorization.systems import ESystemName, SystemSpec
from smg.factorization.verification import VerificationSuite


def test_free_particle_with_the_chain():
    sink = VerificationSuite().run(VerificationSuite.cells_for(SystemSpec(ESystemName.FREE1D), [1.0]), chain_j_max=2)
    assert sink.all_ok(), sink.format_table()

    names = {r.get_report().get_name() for r in sink.get_records()}
    assert {"verdict_table", "schrodinger", "subsidiary", "riccati", "ladder_chain[j=2]"} <= names
    assert any(r.expects_failure() for r in sink.get_records())


def test_hydrogen_cell():
    system = SystemSpec(ESystemName.HYDROGEN, l=1, Z=1.0, a0_tilde=1.0)
    sink = VerificationSuite(max_workers=2).run(VerificationSuite.cells_for(system, [0.7]))
    assert sink.all_ok(), sink.format_table()
    assert any(r.get_report().get_name() == "conjugation[1 vs 3]" for r in sink.get_records())


def test_impossible_tolerance_fails():
    sink = VerificationSuite(VerificationSuite().get_verifier().get_settings().with_tolerance(1e-20)).run(
        VerificationSuite.cells_for(SystemSpec(ESystemName.FREE1D), [1.0])
    )
    assert not sink.all_ok()
    assert sink.get_failures()


def test_nothing_to_run():
    assert not VerificationSuite().run([]).all_ok()


def test_default_cells():
    cells = VerificationSuite.default_cells()
    assert len(cells) == 13 * 3 + 3 * 3 + 1
    assert max(abs(system.get_m()) for system, _ in cells if system.get_name() is ESystemName.FREE2D) == 5
    assert max(system.get_l() for system, _ in cells if system.get_name() is ESystemName.FREE3D) == 5
    assert cells[-1][1] == 0.0
    assert {system.get_name() for system, _ in cells} == set(ESystemName)


@pytest.mark.slow
def test_full_suite():
    sink = VerificationSuite().run(VerificationSuite.default_cells(), chain_j_max=6)
    assert sink.all_ok(), sink.format_table()


@pytest.mark.parametrize("system", [SystemSpec(ESystemName.FREE2D, m=-5), SystemSpec(ESystemName.FREE3D, l=5)])
def test_high_angular_momentum_cells(system):
    sink = VerificationSuite().run(VerificationSuite.cells_for(system, [1.0]))
    assert sink.all_ok(), sink.format_table()
    assert any(r.get_report().get_name() == "schrodinger" for r in sink.get_records())
