import numpy as np
import pytest

from smg.factorization.ansatz import ParameterSolver
from smg.factorization.base import DomainError, GridTooCoarseError
from smg.factorization.systems import ESystemName, SystemSpec
from smg.factorization.verification import EGridFormat, GridIO, WavefunctionGrid


@pytest.fixture
def free3d_grid():
    system = SystemSpec(ESystemName.FREE3D, l=1)
    candidate = ParameterSolver.solve_parameters(system, 1.0)[2]
    return WavefunctionGrid.from_candidate(candidate, 0.1, 20.0, 256)


def test_sampled_grid_is_real(free3d_grid):
    u = free3d_grid.get_u()
    assert np.max(np.abs(u.imag)) < 1e-9 * np.max(np.abs(u))
    assert u[int(np.argmax(np.abs(u)))].real > 0.0
    assert free3d_grid.get_case_id() == 3
    assert free3d_grid.get_spacing() == pytest.approx(19.9 / 255)


@pytest.mark.parametrize("suffix", [".csv", ".jsonl"])
def test_grid_survives_being_written_and_read(free3d_grid, tmp_path, suffix):
    path = str(tmp_path / ("grid" + suffix))
    GridIO.write(free3d_grid, path)
    grid = WavefunctionGrid.load(path)

    assert grid.get_system().describe() == free3d_grid.get_system().describe()
    assert grid.get_k() == free3d_grid.get_k()
    assert grid.get_alpha() == free3d_grid.get_alpha()
    assert grid.get_case_id() == 3
    np.testing.assert_array_equal(grid.get_q(), free3d_grid.get_q())
    np.testing.assert_array_equal(grid.get_u(), free3d_grid.get_u())
    np.testing.assert_array_equal(grid.get_w(), free3d_grid.get_w())


def test_csv_layout(free3d_grid, tmp_path):
    path = tmp_path / "grid.csv"
    GridIO.write(free3d_grid, str(path))
    lines = path.read_text(encoding="utf-8").splitlines()
    assert any(line.startswith("# meta:") for line in lines)
    assert ",".join(GridIO.COLUMNS) in lines
    data = [line for line in lines if not line.startswith("#") and not line.startswith("q,")]
    assert len(data) == 256
    assert all(len(line.split(",")) == 6 for line in data)


def test_format_can_be_forced(free3d_grid, tmp_path):
    path = str(tmp_path / "grid.txt")
    GridIO.write(free3d_grid, path, EGridFormat.JSONL)
    with open(path, encoding="utf-8") as f:
        assert f.readline().startswith('{"meta"')


def test_file_without_metadata_is_refused(tmp_path):
    path = tmp_path / "grid.csv"
    path.write_text("q,re_u,im_u,re_w,im_w,v_eff\n0.1,1.0,0.0,0.0,0.0,0.0\n", encoding="utf-8")
    with pytest.raises(ValueError):
        GridIO.read(str(path))


def test_format_from_path():
    assert EGridFormat.from_path("out.JSONL") is EGridFormat.JSONL
    assert EGridFormat.from_path("out.csv") is EGridFormat.CSV
    assert EGridFormat.from_path("out") is EGridFormat.CSV


def test_grid_validation():
    free1d = SystemSpec(ESystemName.FREE1D)
    q = np.linspace(-1.0, 1.0, 100)
    with pytest.raises(GridTooCoarseError):
        WavefunctionGrid(free1d, 1.0, q[:10], np.cos(q[:10]))
    with pytest.raises(ValueError):
        WavefunctionGrid(free1d, 1.0, q ** 3, np.cos(q))
    with pytest.raises(ValueError):
        WavefunctionGrid(free1d, 1.0, q, np.cos(q[:-1]))
    with pytest.raises(DomainError):
        WavefunctionGrid(SystemSpec(ESystemName.FREE3D, l=0), 1.0, np.linspace(0.0, 1.0, 100), np.ones(100))


def test_grid_coordinates():
    linear = SystemSpec(ESystemName.LINEAR, C=1.0)
    q = np.linspace(0.0, 2.0, 64)
    grid = WavefunctionGrid(linear, 1.0, q, np.ones(64), alpha=-0.5)
    np.testing.assert_allclose(grid.get_z(), 2.0 ** (1.0 / 3.0) * q - 0.5)
    assert grid.get_airy_normalization() is not None
    assert grid.with_u(np.zeros(64)).get_w() is None
