import argparse

import pytest

from smg.factorization.base import ConfigError
from smg.factorization.cli import RunConfig, make_parser
from smg.factorization.systems import ESystemName, SystemSpec
from smg.factorization.verification import EGridFormat


FREE1D = SystemSpec(ESystemName.FREE1D)


def test_defaults_fill_in_missing_parameters():
    system = RunConfig.make_system("hydrogen", {"l": 2, "Z": None})
    assert system.describe() == "hydrogen l=2 Z=1 a0_tilde=1"


def test_unknown_system():
    with pytest.raises(ConfigError):
        RunConfig.make_system("nosuch", {})


def test_bad_parameter():
    with pytest.raises(ConfigError):
        RunConfig.make_system("free3d", {"l": -1})


def test_parse_grid():
    assert RunConfig.parse_grid("0.1:20:2048") == (0.1, 20.0, 2048)
    for text in ("0.1:20", "a:b:c", "0.1:20:2048.5"):
        with pytest.raises(ConfigError):
            RunConfig.parse_grid(text)


@pytest.mark.parametrize("kwargs", [
    dict(command="nosuch", system=FREE1D),
    dict(command="classify"),
    dict(command="enumerate", system=FREE1D, k=0.0),
    dict(command="enumerate", system=FREE1D, k=-1.0),
    dict(command="enumerate", system=SystemSpec(ESystemName.FREE3D, l=0), alpha=0.5),
    dict(command="sample", system=FREE1D, output="u.csv"),
    dict(command="sample", system=FREE1D, case_id=3),
    dict(command="sample", system=FREE1D, case_id=3, output="u.csv", grid=(0.0, 1.0, 10)),
    dict(command="sample", system=FREE1D, case_id=3, output="u.csv", grid=(1.0, 0.0, 128)),
    dict(command="sample", system=SystemSpec(ESystemName.FREE3D, l=0), case_id=3, output="u.csv",
         grid=(0.0, 20.0, 128)),
    dict(command="verify", tolerance=0.0),
    dict(command="verify", j_max=7),
    dict(command="verify", workers=0),
    dict(command="selftest", samples=0)
])
def test_inconsistent_configurations_are_refused(kwargs):
    kwargs = dict(kwargs)
    command = kwargs.pop("command")
    with pytest.raises(ConfigError):
        RunConfig(command, **kwargs)


def test_zero_wavenumber_is_allowed_for_morse():
    cfg = RunConfig("classify", system=SystemSpec(ESystemName.MORSE, D=1.125, k0=1.0), k=0.0)
    assert cfg.get_k() == 0.0


def test_verify_needs_no_system():
    cfg = RunConfig("verify", tolerance=1e-4)
    assert cfg.get_system() is None
    assert cfg.make_verifier_settings().get_oracle_tolerance() == 1e-4
    assert RunConfig("verify").make_verifier_settings().get_tolerance() == 1e-6


def test_from_args():
    args = make_parser().parse_args(
        ["sample", "free2d", "--m", "-1", "--k", "1.5", "--case", "3", "--grid", "0.1:10:256", "-o", "u.dat",
         "--format", "jsonl"]
    )
    cfg = RunConfig.from_args(args)
    assert cfg.get_command() == "sample"
    assert cfg.get_system().describe() == "free2d m=-1"
    assert cfg.get_k() == 1.5
    assert cfg.get_case_id() == 3
    assert cfg.get_grid() == (0.1, 10.0, 256)
    assert cfg.get_output_format() is EGridFormat.JSONL


def test_from_args_without_optional_attributes():
    cfg = RunConfig.from_args(argparse.Namespace(command="verify"))
    assert cfg.get_system() is None
    assert not cfg.wants_all() and not cfg.wants_chain()
