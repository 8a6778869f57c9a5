import logging

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, Union

from ..base import FactorizationError
from ..classification import CandidateClassifier, ClassifierSettings
from ..systems import ESystemName, SystemSpec
from .check_record import CheckRecord
from .numerical_verifier import NumericalVerifier
from .report_sink import ReportSink
from .residual_report import ResidualReport
from .verifier_settings import VerifierSettings


logger = logging.getLogger(__name__)

# A (system, k) pair on which the suite runs every applicable check.
VerificationCell = Tuple[SystemSpec, float]


class VerificationSuite:
    """
    Runs the numerical verifier over a set of (system, k) cells in parallel, collecting one record per check.

    .. note::
        Each cell classifies the system's candidates; accepted candidates are then sampled and checked, rejected ones
        have their rejection confirmed numerically, and the system-level identities are checked once per cell. The
        cells share nothing but the report sink.
    """

    # CONSTANTS

    DEFAULT_K_VALUES = (0.7, 1.0, 1.3)  # type: Tuple[float, ...]

    # The Morse depth groups ξ and energy groups η covered by the default cells (with k₀ = ħ = M = 1).
    MORSE_ETAS = (0.4, 0.9, 2.0)  # type: Tuple[float, ...]
    MORSE_XIS = (0.7, 2.3, 5.5)   # type: Tuple[float, ...]

    # A depth group for which 1/2 - ξ is a non-positive integer, used for the zero-energy Morse cell.
    ZERO_ENERGY_XI = 1.5  # type: float

    # CONSTRUCTOR

    def __init__(self, settings: Optional[VerifierSettings] = None, *,
                 classifier_settings: Optional[ClassifierSettings] = None, max_workers: Optional[int] = None):
        """
        Construct a verification suite.

        :param settings:            The verifier settings (optional).
        :param classifier_settings: The classifier settings (optional).
        :param max_workers:         The number of worker threads (optional; see ThreadPoolExecutor).
        """
        self.__classifier = CandidateClassifier(classifier_settings)  # type: CandidateClassifier
        self.__max_workers = max_workers                               # type: Optional[int]
        self.__verifier = NumericalVerifier(settings)                  # type: NumericalVerifier

    # PUBLIC METHODS

    def get_verifier(self) -> NumericalVerifier:
        return self.__verifier

    def run(self, cells: Sequence[VerificationCell], *, chain_j_max: Optional[int] = None) -> ReportSink:
        """
        Run the suite.

        :param cells:       The (system, k) cells to check.
        :param chain_j_max: The largest index for which to check the one-dimensional ladder chain (optional; the
                            chain is skipped if None).
        :return:            The sink holding the records of every check.
        """
        sink = ReportSink()
        with ThreadPoolExecutor(max_workers=self.__max_workers) as executor:
            futures = [executor.submit(self.run_cell, system, k, sink) for system, k in cells]
            if chain_j_max is not None:
                futures.append(executor.submit(self.run_chain, chain_j_max, sink))
            for future in futures:
                future.result()

        failures = sink.get_failures()
        logger.info("Verification suite: %d checks over %d cells, %d not ok", len(sink), len(cells), len(failures))
        return sink

    def run_cell(self, system: SystemSpec, k: float, sink: ReportSink) -> None:
        """
        Run every applicable check on one (system, k) cell.

        :param system:  The system.
        :param k:       The wavenumber.
        :param sink:    The sink to which to append the records.
        """
        verifier = self.__verifier
        settings = verifier.get_settings()
        tolerance = settings.get_tolerance()

        try:
            classification = self.__classifier.classify_system(system, k)
        except FactorizationError as e:
            sink.append(CheckRecord.from_error(system, k, None, "verdict_table", 0.0, e))
            return

        mismatches = classification.get_mismatches()
        sink.append(CheckRecord(system, k, None, ResidualReport(
            "verdict_table", len(mismatches), float("nan"), 0.0,
            detail="; ".join(mismatches)
        )))

        for row in classification.get_rows():
            candidate, verdict, case_id = row.get_candidate(), row.get_verdict(), row.get_case_id()
            if verdict.is_accepted():
                try:
                    grid = verifier.grid_for(candidate)
                except (FactorizationError, ValueError) as e:
                    sink.append(CheckRecord.from_error(system, k, case_id, "sampling", tolerance, e))
                    continue
                self.__attempt(sink, system, k, case_id, "schrodinger", tolerance,
                               lambda: verifier.schrodinger_residual(grid))
                self.__attempt(sink, system, k, case_id, "subsidiary", tolerance,
                               lambda: verifier.subsidiary_residual(grid, candidate))
                self.__attempt(sink, system, k, case_id, "riccati", tolerance,
                               lambda: verifier.riccati_check(candidate))
            elif not row.is_disputed() and row.get_golden().get_status().is_rejection():
                status = row.get_golden().get_status()
                self.__attempt(sink, system, k, case_id, "rejection", settings.get_growth_tolerance(),
                               lambda: verifier.confirm_rejection(candidate, status, verdict), expect_failure=True)

        self.__run_system_checks(system, k, sink)

    def run_chain(self, j_max: int, sink: ReportSink, *, k: float = 1.0) -> None:
        """
        Check the one-dimensional ladder chain for j = 0, ..., j_max.

        :param j_max:   The largest index.
        :param sink:    The sink to which to append the records.
        :param k:       The wavenumber of the chain's first Hamiltonian.
        """
        system = SystemSpec(ESystemName.FREE1D)
        tolerance = self.__verifier.get_settings().get_tolerance()
        for j in range(j_max + 1):
            self.__attempt(sink, system, k, None, "ladder_chain[j={}]".format(j), tolerance,
                           lambda: self.__verifier.ladder_chain_1d(j, k))

    # PRIVATE METHODS

    def __attempt(self, sink: ReportSink, system: SystemSpec, k: float, case_id: Optional[int], name: str,
                  tolerance: float, check: Callable[[], Union[None, ResidualReport, List[ResidualReport]]], *,
                  expect_failure: bool = False) -> None:
        """
        Run a check and record its reports, or record a failure if it raises.

        :param sink:            The sink to which to append the records.
        :param system:          The system.
        :param k:               The wavenumber.
        :param case_id:         The case the check concerns, if any.
        :param name:            The name under which to record a failure to run the check.
        :param tolerance:       The tolerance to record with such a failure.
        :param check:           The check, returning a report, a list of reports or None (if it does not apply).
        :param expect_failure:  Whether the check's reports are meant to fail their tolerances.
        """
        try:
            result = check()
        except (FactorizationError, ValueError) as e:
            logger.warning("%s, k = %g, case %s: %s could not be run: %s", system.describe(), k, case_id, name, e)
            sink.append(CheckRecord.from_error(system, k, case_id, name, tolerance, e))
            return

        reports = [] if result is None else result if isinstance(result, list) else [result]
        for report in reports:
            record = CheckRecord(system, k, case_id, report, expect_failure=expect_failure)
            sink.append(record)
            if record.is_ok():
                logger.info("%s, k = %g, case %s: %s", system.describe(), k, case_id, report)
            else:
                logger.warning("%s, k = %g, case %s: %s", system.describe(), k, case_id, report)

    def __run_system_checks(self, system: SystemSpec, k: float, sink: ReportSink) -> None:
        verifier = self.__verifier
        settings = verifier.get_settings()
        name = system.get_name()

        if name is ESystemName.HYDROGEN:
            self.__attempt(sink, system, k, None, "conjugation", settings.get_reality_tolerance(),
                           lambda: verifier.hydrogen_conjugation(system, k))
        else:
            self.__attempt(sink, system, k, None, "closed_form", settings.get_oracle_tolerance(),
                           lambda: verifier.closed_form_crosschecks(system, k))

        if name in (ESystemName.FREE1D, ESystemName.FREE2D, ESystemName.FREE3D):
            self.__attempt(sink, system, k, None, "duplicate_superpotential", settings.get_reality_tolerance(),
                           lambda: verifier.duplicate_superpotentials(system, k))
        if name is ESystemName.FREE2D:
            self.__attempt(sink, system, k, None, "plane_polar_chain", settings.get_tolerance(),
                           lambda: verifier.plane_polar_chain(system, k), expect_failure=True)
        if name is ESystemName.MORSE:
            self.__attempt(sink, system, k, None, "reality", settings.get_reality_tolerance(),
                           lambda: verifier.morse_reality(system, k))
            if k == 0.0:
                self.__attempt(
                    sink, system, k, None, "zero_energy_growth", NumericalVerifier.ZERO_ENERGY_RATE_TOLERANCE,
                    lambda: verifier.zero_energy_growth(system)
                )

    # PUBLIC STATIC METHODS

    @staticmethod
    def cells_for(system: SystemSpec, k_values: Optional[Sequence[float]] = None) -> List[VerificationCell]:
        """
        Make the cells for a single system.

        :param system:      The system.
        :param k_values:    The wavenumbers (optional; defaults to DEFAULT_K_VALUES).
        :return:            The cells.
        """
        return [(system, k) for k in (k_values if k_values is not None else VerificationSuite.DEFAULT_K_VALUES)]

    @staticmethod
    def default_cells() -> List[VerificationCell]:
        """
        Make the cells of the full suite: three wavenumbers for every system, over a spread of quantum numbers and
        Morse depths, plus a zero-energy Morse cell.

        :return:    The cells.
        """
        ks = VerificationSuite.DEFAULT_K_VALUES
        systems = [SystemSpec(ESystemName.FREE1D), SystemSpec(ESystemName.LINEAR, C=1.0)]  # type: List[SystemSpec]
        systems += [SystemSpec(ESystemName.FREE2D, m=m) for m in (-5, -2, 0, 3)]
        systems += [SystemSpec(ESystemName.FREE3D, l=l) for l in (0, 1, 3, 5)]
        systems += [SystemSpec(ESystemName.HYDROGEN, l=l, Z=1.0, a0_tilde=1.0) for l in (0, 1, 2)]

        cells = [cell for system in systems for cell in VerificationSuite.cells_for(system, ks)]
        for xi in VerificationSuite.MORSE_XIS:
            morse = SystemSpec(ESystemName.MORSE, D=xi * xi / 2, k0=1.0)
            cells += VerificationSuite.cells_for(morse, VerificationSuite.MORSE_ETAS)

        xi = VerificationSuite.ZERO_ENERGY_XI
        cells.append((SystemSpec(ESystemName.MORSE, D=xi * xi / 2, k0=1.0), 0.0))
        return cells
