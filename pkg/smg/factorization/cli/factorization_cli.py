import argparse
import logging
import sys

from typing import List, Optional

from ..ansatz import Candidate, ParameterSolver
from ..base import ConfigError, FactorizationError
from ..chf import ChfSelfTest
from ..classification import CandidateClassifier
from ..systems import ESystemName, SystemCatalog
from ..verification import EGridFormat, GridIO, NumericalVerifier, VerificationSuite, WavefunctionGrid
from .run_config import RunConfig


logger = logging.getLogger(__name__)

# Exit codes.
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_CONFIG = 2
EXIT_REJECTED_CASE = 3


def cmd_classify(cfg: RunConfig) -> int:
    """
    Classify every candidate of the configured system and compare the verdicts with the golden table.

    .. note::
        Disputed rows are printed with their note, but do not affect the exit code.

    :param cfg: The run configuration.
    :return:    EXIT_OK if the verdicts match the golden table, or EXIT_MISMATCH otherwise.
    """
    system = cfg.get_system()
    classification = CandidateClassifier().classify_system(system, cfg.get_k(), alpha=cfg.get_alpha())

    print("{} at k = {:g}".format(system.describe(), cfg.get_k()))
    print(classification.format_table())
    for row in classification.get_disputed_rows():
        print("note: case {} is disputed: {}".format(row.get_case_id(), row.get_golden().get_note()))

    mismatches = classification.get_mismatches()
    if mismatches:
        print("Verdicts do not match the golden table:", file=sys.stderr)
        for mismatch in mismatches:
            print("  " + mismatch, file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    """
    Print the candidate solutions of the configured system.

    :param cfg: The run configuration.
    :return:    EXIT_OK.
    """
    system, k = cfg.get_system(), cfg.get_k()
    candidates = ParameterSolver.solve_parameters(system, k, cfg.get_alpha())

    print("{} at k = {:g}".format(system.describe(), k))
    if system.get_name() is ESystemName.MORSE:
        print("ξ = {:.6g}, η = {:.6g}".format(SystemCatalog.xi(system), SystemCatalog.eta(system, k)))
    print("{:<5} {:<24} {:<24} {:<24} {:<8} {}".format("case", "a", "b", "c", "d", "kind"))
    for candidate in candidates:
        d = candidate.get_zeta_map().get_d()
        print("{:<5} {:<24} {:<24} {:<24} {:<8} {}".format(
            candidate.get_case_id(), _format_complex(candidate.get_a()), _format_complex(candidate.get_b()),
            _format_complex(candidate.get_zeta_map().get_c()), "-" if d is None else "{:g}".format(d),
            candidate.get_kind().value
        ))
    return EXIT_OK


def cmd_sample(cfg: RunConfig) -> int:
    """
    Sample the reduced wavefunction and superpotential of an accepted case, and write them to a file.

    :param cfg:             The run configuration.
    :return:                EXIT_OK if the file was written, or EXIT_REJECTED_CASE if the case is rejected.
    :raises ConfigError:    If the system has no case with the configured id.
    """
    candidate = _find_candidate(cfg)
    verdict = CandidateClassifier().classify(candidate)
    if not verdict.is_accepted():
        print("Case {} of {} is rejected: {}".format(
            candidate.get_case_id(), cfg.get_system().describe(), verdict.describe()
        ), file=sys.stderr)
        return EXIT_REJECTED_CASE

    settings = cfg.make_verifier_settings()
    grid_spec = cfg.get_grid()
    if grid_spec is None:
        grid = NumericalVerifier(settings).grid_for(candidate)
    else:
        q_min, q_max, n = grid_spec
        grid = WavefunctionGrid.from_candidate(candidate, q_min, q_max, n, policy=settings.get_policy())

    output = cfg.get_output()
    fmt = cfg.get_output_format() or EGridFormat.from_path(output)
    GridIO.write(grid, output, fmt)
    print("Wrote {} rows for case {} of {} to {}".format(
        grid.get_n(), candidate.get_case_id(), cfg.get_system().describe(), output
    ))
    return EXIT_OK


def cmd_selftest(cfg: RunConfig) -> int:
    """
    Run the identity battery of the confluent hypergeometric kernel.

    :param cfg: The run configuration.
    :return:    EXIT_OK if every identity holds, or EXIT_MISMATCH otherwise.
    """
    results = ChfSelfTest(samples=cfg.get_samples(), seed=cfg.get_seed()).run()
    for result in results:
        print(result.summary_line())
    return EXIT_OK if all(r.passed() for r in results) else EXIT_MISMATCH


def cmd_verify(cfg: RunConfig) -> int:
    """
    Run the numerical verification suite and print its results.

    .. note::
        Without a system (or with --all) every system of the default suite is checked; a system on its own is
        checked at the configured wavenumber. The ladder chain is checked if --chain or --all is given.

    :param cfg: The run configuration.
    :return:    EXIT_OK if every check came out as it should, or EXIT_MISMATCH otherwise.
    """
    system = cfg.get_system()
    if cfg.wants_all() or (system is None and not cfg.wants_chain()):
        cells = VerificationSuite.default_cells()
    elif system is not None:
        cells = VerificationSuite.cells_for(system, [cfg.get_k()])
    else:
        cells = []

    chain_j_max = cfg.get_j_max() if cfg.wants_chain() or cfg.wants_all() else None
    suite = VerificationSuite(cfg.make_verifier_settings(), max_workers=cfg.get_workers())
    sink = suite.run(cells, chain_j_max=chain_j_max)

    print(sink.format_table())
    if cfg.get_output() is not None:
        sink.write_jsonl(cfg.get_output())
        print("Wrote {} records to {}".format(len(sink), cfg.get_output()))
    return EXIT_OK if sink.all_ok() else EXIT_MISMATCH


def make_parser() -> argparse.ArgumentParser:
    """
    Make the command-line parser.

    :return:    The parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="log at INFO level (repeat for DEBUG)")

    system_args = argparse.ArgumentParser(add_help=False)
    system_args.add_argument(
        "system", nargs="?", help="the system: {}".format(", ".join(s.value for s in ESystemName))
    )
    system_args.add_argument("--k", type=float, default=RunConfig.DEFAULT_K, help="the wavenumber (default: 1)")
    system_args.add_argument("--l", type=int, help="the angular momentum quantum number (free3d, hydrogen)")
    system_args.add_argument("--m", type=int, help="the magnetic quantum number (free2d)")
    system_args.add_argument("--C", type=float, help="the slope of the linear potential")
    system_args.add_argument("--Z", type=float, help="the nuclear charge (hydrogen)")
    system_args.add_argument("--a0", type=float, dest="a0_tilde", help="the Bohr radius ã₀ (hydrogen)")
    system_args.add_argument("--D", type=float, help="the depth of the Morse well")
    system_args.add_argument("--k0", type=float, help="the inverse width of the Morse well")
    system_args.add_argument("--mass", type=float, help="the particle mass (default: 1)")
    system_args.add_argument("--hbar", type=float, help="the reduced Planck constant (default: 1)")
    system_args.add_argument("--alpha", type=float, help="the shift α of the frame (free1d only)")

    parser = argparse.ArgumentParser(
        prog="smg-factorization",
        description="Single-shot factorization of Schrödinger equations by confluent hypergeometric functions."
    )
    subparsers = parser.add_subparsers(dest="command", metavar="{enumerate,classify,sample,verify}")
    subparsers.required = True

    subparsers.add_parser(
        "enumerate", parents=[common, system_args], help="print the candidate solutions of a system"
    )
    subparsers.add_parser(
        "classify", parents=[common, system_args], help="classify the candidates and compare with the golden table"
    )

    sample = subparsers.add_parser(
        "sample", parents=[common, system_args], help="write the wavefunction of an accepted case to a file"
    )
    sample.add_argument("--case", type=int, help="the case to sample")
    sample.add_argument("--grid", help="the grid as q_min:q_max:n (default: the verification window)")
    sample.add_argument("-o", "--output", help="the output file (.csv or .jsonl)")
    sample.add_argument("--format", choices=[f.value for f in EGridFormat], help="the output format")

    verify = subparsers.add_parser(
        "verify", parents=[common, system_args], help="run the numerical verification suite"
    )
    verify.add_argument("--all", action="store_true", help="verify every system and the ladder chain")
    verify.add_argument("--chain", action="store_true", help="verify the one-dimensional ladder chain")
    verify.add_argument("--jmax", type=int, default=NumericalVerifier.MAX_CHAIN_INDEX,
                        help="the largest index of the ladder chain (default: %(default)s)")
    verify.add_argument("--tolerance", type=float, help="override every verifier tolerance")
    verify.add_argument("--workers", type=int, help="the number of worker threads")
    verify.add_argument("-o", "--output", help="write the records to this file as JSON lines")

    selftest = subparsers.add_parser("selftest", parents=[common])
    selftest.add_argument("--samples", type=int, default=1000)
    selftest.add_argument("--seed", type=int, default=0)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    commands = {
        "classify": cmd_classify,
        "enumerate": cmd_enumerate,
        "sample": cmd_sample,
        "selftest": cmd_selftest,
        "verify": cmd_verify
    }

    try:
        cfg = RunConfig.from_args(args)
        logger.info("Running %s", cfg)
        return commands[cfg.get_command()](cfg)
    except ConfigError as e:
        print("error: {}".format(e), file=sys.stderr)
        return EXIT_BAD_CONFIG
    except FactorizationError as e:
        print("error: {}".format(e), file=sys.stderr)
        return EXIT_MISMATCH


def _find_candidate(cfg: RunConfig) -> Candidate:
    candidates = ParameterSolver.solve_parameters(cfg.get_system(), cfg.get_k(), cfg.get_alpha())
    for candidate in candidates:
        if candidate.get_case_id() == cfg.get_case_id():
            return candidate
    raise ConfigError("{} has no case {}; valid cases are 1 to {}".format(
        cfg.get_system().describe(), cfg.get_case_id(), len(candidates)
    ))


def _format_complex(value: complex) -> str:
    value = complex(value)
    if value.imag == 0.0:
        return "{:.10g}".format(value.real)
    return "{:.10g}{:+.10g}i".format(value.real, value.imag)


if __name__ == "__main__":
    sys.exit(main())
