import argparse
import math

from typing import Any, Dict, Optional, Tuple

from ..base import ConfigError, DomainError, UnsupportedSystemError
from ..systems import ESystemName, SystemCatalog, SystemSpec
from ..verification import EGridFormat, NumericalVerifier, VerifierSettings, WavefunctionGrid


class RunConfig:
    """
    The validated configuration of one command-line run.

    .. note::
        Potential parameters that are not given on the command line take the values of the catalog's default system,
        so that e.g. "classify hydrogen --l 2" means Z = ã₀ = 1.
    """

    # CONSTANTS

    COMMANDS = ("enumerate", "classify", "sample", "verify", "selftest")  # type: Tuple[str, ...]

    DEFAULT_K = 1.0  # type: float

    # The command-line flags that set system parameters, keyed by the names SystemSpec.from_parameters uses.
    PARAMETER_FLAGS = ("l", "m", "C", "Z", "a0_tilde", "D", "k0", "mass", "hbar")  # type: Tuple[str, ...]

    # CONSTRUCTOR

    def __init__(self, command: str, *, system: Optional[SystemSpec] = None, k: float = DEFAULT_K,
                 alpha: Optional[float] = None, case_id: Optional[int] = None,
                 grid: Optional[Tuple[float, float, int]] = None, tolerance: Optional[float] = None,
                 output: Optional[str] = None, output_format: Optional[EGridFormat] = None, run_all: bool = False,
                 chain: bool = False, j_max: int = NumericalVerifier.MAX_CHAIN_INDEX, samples: int = 1000,
                 seed: int = 0, workers: Optional[int] = None):
        """
        Construct a run configuration.

        :param command:         The command to run.
        :param system:          The system (required by enumerate, classify and sample; verify without a system and
                                without --chain runs every system).
        :param k:               The wavenumber.
        :param alpha:           The shift α of the frame (optional; only the free particle in 1D accepts it).
        :param case_id:         The case to sample.
        :param grid:            The sampling grid (q_min, q_max, n), if given.
        :param tolerance:       A tolerance that overrides every verifier tolerance, if given.
        :param output:          The path of the output file, if any.
        :param output_format:   The format of the output file (optional; inferred from its extension).
        :param run_all:         Whether to verify every system.
        :param chain:           Whether to verify the one-dimensional ladder chain.
        :param j_max:           The largest index of the ladder chain to verify.
        :param samples:         The number of samples per identity for the self-test.
        :param seed:            The seed for the self-test.
        :param workers:         The number of worker threads for the verification suite (optional).
        :raises ConfigError:    If the configuration is inconsistent.
        """
        if command not in self.COMMANDS:
            raise ConfigError("Unknown command '{}'; valid commands are: {}".format(command, ", ".join(self.COMMANDS)))
        if system is None and command in ("enumerate", "classify", "sample"):
            raise ConfigError("The {} command needs a system; valid names are: {}".format(
                command, ", ".join(s.value for s in ESystemName)
            ))
        if system is not None:
            try:
                SystemCatalog.check_k(system, k)
            except DomainError as e:
                raise ConfigError(str(e)) from e
        if alpha is not None and (system is None or system.get_name() is not ESystemName.FREE1D):
            raise ConfigError("Only the free particle in one dimension accepts a shift α")
        if command == "sample":
            if case_id is None:
                raise ConfigError("The sample command needs --case")
            if output is None:
                raise ConfigError("The sample command needs an output file (-o)")
        if grid is not None:
            RunConfig.__check_grid(grid, system)
        if tolerance is not None and not (math.isfinite(tolerance) and tolerance > 0.0):
            raise ConfigError("The tolerance must be positive, got {}".format(tolerance))
        if not 0 <= j_max <= NumericalVerifier.MAX_CHAIN_INDEX:
            raise ConfigError("--jmax must be in [0, {}], got {}".format(NumericalVerifier.MAX_CHAIN_INDEX, j_max))
        if samples < 1:
            raise ConfigError("--samples must be at least 1, got {}".format(samples))
        if workers is not None and workers < 1:
            raise ConfigError("--workers must be at least 1, got {}".format(workers))

        self.__alpha = alpha                    # type: Optional[float]
        self.__case_id = case_id                # type: Optional[int]
        self.__chain = chain                    # type: bool
        self.__command = command                # type: str
        self.__grid = grid                      # type: Optional[Tuple[float, float, int]]
        self.__j_max = j_max                    # type: int
        self.__k = k                            # type: float
        self.__output = output                  # type: Optional[str]
        self.__output_format = output_format    # type: Optional[EGridFormat]
        self.__run_all = run_all                # type: bool
        self.__samples = samples                # type: int
        self.__seed = seed                      # type: int
        self.__system = system                  # type: Optional[SystemSpec]
        self.__tolerance = tolerance            # type: Optional[float]
        self.__workers = workers                # type: Optional[int]

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "RunConfig({}, system={}, k={})".format(
            self.__command, self.__system.describe() if self.__system is not None else None, self.__k
        )

    # PUBLIC METHODS

    def get_alpha(self) -> Optional[float]:
        return self.__alpha

    def get_case_id(self) -> Optional[int]:
        return self.__case_id

    def get_command(self) -> str:
        return self.__command

    def get_grid(self) -> Optional[Tuple[float, float, int]]:
        return self.__grid

    def get_j_max(self) -> int:
        return self.__j_max

    def get_k(self) -> float:
        return self.__k

    def get_output(self) -> Optional[str]:
        return self.__output

    def get_output_format(self) -> Optional[EGridFormat]:
        return self.__output_format

    def get_samples(self) -> int:
        return self.__samples

    def get_seed(self) -> int:
        return self.__seed

    def get_system(self) -> Optional[SystemSpec]:
        return self.__system

    def get_tolerance(self) -> Optional[float]:
        return self.__tolerance

    def get_workers(self) -> Optional[int]:
        return self.__workers

    def make_verifier_settings(self) -> VerifierSettings:
        """
        Make the verifier settings for the run, applying the tolerance override if there is one.

        :return:    The settings.
        """
        settings = VerifierSettings()
        return settings.with_tolerance(self.__tolerance) if self.__tolerance is not None else settings

    def wants_chain(self) -> bool:
        return self.__chain

    def wants_all(self) -> bool:
        return self.__run_all

    # PUBLIC STATIC METHODS

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        """
        Make a run configuration from parsed command-line arguments.

        :param args:            The arguments.
        :return:                The configuration.
        :raises ConfigError:    If the arguments are inconsistent or name an unknown system.
        """
        system_name = getattr(args, "system", None)
        system = RunConfig.make_system(system_name, {
            name: getattr(args, name, None) for name in RunConfig.PARAMETER_FLAGS
        }) if system_name is not None else None

        output = getattr(args, "output", None)
        output_format = getattr(args, "format", None)
        return RunConfig(
            args.command, system=system, k=getattr(args, "k", RunConfig.DEFAULT_K),
            alpha=getattr(args, "alpha", None),
            case_id=getattr(args, "case", None),
            grid=RunConfig.parse_grid(args.grid) if getattr(args, "grid", None) is not None else None,
            tolerance=getattr(args, "tolerance", None), output=output,
            output_format=EGridFormat(output_format) if output_format is not None else None,
            run_all=getattr(args, "all", False), chain=getattr(args, "chain", False),
            j_max=getattr(args, "jmax", NumericalVerifier.MAX_CHAIN_INDEX), samples=getattr(args, "samples", 1000),
            seed=getattr(args, "seed", 0), workers=getattr(args, "workers", None)
        )

    @staticmethod
    def make_system(name: str, overrides: Dict[str, Any]) -> SystemSpec:
        """
        Make a system from its name and any parameters given on the command line.

        :param name:            The system name.
        :param overrides:       The parameters given (None entries are treated as not given).
        :return:                The system.
        :raises ConfigError:    If the name is unknown, or the parameters do not fit the system.
        """
        try:
            parameters = SystemCatalog.default_system(ESystemName.parse(name)).get_parameters()
            parameters.update({key: value for key, value in overrides.items() if value is not None})
            return SystemSpec.from_parameters(parameters)
        except (UnsupportedSystemError, ValueError) as e:
            raise ConfigError(str(e)) from e

    @staticmethod
    def parse_grid(text: str) -> Tuple[float, float, int]:
        """
        Parse a grid of the form "q_min:q_max:n".

        :param text:            The text.
        :return:                The grid (q_min, q_max, n).
        :raises ConfigError:    If the text is not of the right form.
        """
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError("A grid must be given as q_min:q_max:n, got '{}'".format(text))
        try:
            return float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as e:
            raise ConfigError("A grid must be given as q_min:q_max:n, got '{}'".format(text)) from e

    # PRIVATE STATIC METHODS

    @staticmethod
    def __check_grid(grid: Tuple[float, float, int], system: Optional[SystemSpec]) -> None:
        q_min, q_max, n = grid
        if n < WavefunctionGrid.MIN_POINTS:
            raise ConfigError("A grid needs at least {} points, got {}".format(WavefunctionGrid.MIN_POINTS, n))
        if not (math.isfinite(q_min) and math.isfinite(q_max) and q_min < q_max):
            raise ConfigError("A grid needs finite bounds q_min < q_max, got {}:{}".format(q_min, q_max))
        if system is not None and system.get_coordinate_type().is_radial() and q_min <= 0.0:
            raise ConfigError("A radial grid must start above the origin, got q_min = {}".format(q_min))
