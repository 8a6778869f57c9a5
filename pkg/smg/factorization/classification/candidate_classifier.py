import logging

from typing import List, Optional

from ..ansatz import Candidate, ParameterSolver
from ..base import DomainError, PoleAtNodeError
from ..chf import ECHFKind, GammaUtil
from ..systems import EVerdictStatus, SystemCatalog, SystemSpec
from .boundary_analysis import BoundaryAnalysis
from .classifier_settings import ClassifierSettings
from .e_infinity_growth import EInfinityGrowth
from .end_behaviour import EndBehaviour
from .superpotential_util import SuperpotentialUtil
from .system_classification import ClassifiedCandidate, SystemClassification
from .verdict import Verdict


logger = logging.getLogger(__name__)


class CandidateClassifier:
    """
    Decides whether each candidate solution is acceptable: its superpotential must be real and its wavefunction must
    stay bounded at every end of the domain.
    """

    # CONSTRUCTOR

    def __init__(self, settings: Optional[ClassifierSettings] = None):
        """
        Construct a candidate classifier.

        :param settings:    The classifier settings (optional).
        """
        self.__settings = settings if settings is not None else ClassifierSettings()  # type: ClassifierSettings

    # PUBLIC METHODS

    def classify(self, candidate: Candidate) -> Verdict:
        """
        Classify a candidate.

        :param candidate:   The candidate.
        :return:            The verdict (one is always produced).
        """
        system = candidate.get_system()
        margin = self.__settings.get_growth_margin()

        ends = [
            BoundaryAnalysis.analyse_end(candidate, end, margin=margin) for end in SystemCatalog.domain_ends(system)
        ]  # type: List[EndBehaviour]

        defects = []  # type: List[EVerdictStatus]
        notes = []    # type: List[str]
        for behaviour in ends:
            if behaviour.diverges():
                defects.append(
                    EVerdictStatus.REJECTED_DIVERGES_AT_ORIGIN if behaviour.get_end().is_origin()
                    else EVerdictStatus.REJECTED_DIVERGES_AT_INFINITY
                )

        if SystemCatalog.is_zero_energy_special_case(system, candidate.get_k()) and \
                candidate.get_kind() is ECHFKind.M:
            notes.append(self.__zero_energy_note(candidate))
            defects.append(EVerdictStatus.REJECTED_DIVERGES_AT_INFINITY)

        max_im_w = self.__reality_scan(candidate)
        if max_im_w > self.__settings.get_reality_threshold():
            defects.append(EVerdictStatus.REJECTED_IMAGINARY_W)

        infinity_growths = [b.get_growth() for b in ends if b.get_growth() is not None]
        verdict = Verdict(
            list(set(defects)),
            max_im_w=max_im_w,
            origin_exponent=BoundaryAnalysis.origin_exponent(candidate) if system.get_coordinate_type().is_radial()
            else None,
            infinity_growth=max(infinity_growths, key=EInfinityGrowth.get_severity) if infinity_growths else None,
            ends=ends,
            notes=notes
        )
        logger.debug("%s: %s", candidate, verdict.describe())
        return verdict

    def classify_system(self, system: SystemSpec, k: float, *, alpha: Optional[float] = None) -> SystemClassification:
        """
        Classify every candidate of a system and compare the verdicts with the system's golden table.

        .. note::
            Mismatches are reported by the result rather than raised; call check() on it to raise them.

        :param system:                  The system.
        :param k:                       The wavenumber.
        :param alpha:                   The shift α (optional; see ParameterSolver.solve_parameters).
        :return:                        The classification.
        :raises DomainError:            If k is not admissible for the system.
        :raises UnsupportedSystemError: If the system is not in the catalog.
        """
        golden = SystemCatalog.expected_verdicts(system)
        rows = [
            ClassifiedCandidate(candidate, self.classify(candidate), golden.get_row(candidate.get_case_id()))
            for candidate in ParameterSolver.solve_parameters(system, k, alpha)
        ]  # type: List[ClassifiedCandidate]
        result = SystemClassification(system, k, rows)

        for row in result.get_disputed_rows():
            logger.warning(
                "%s case %d is disputed (golden %s, computed %s): %s", system.describe(), row.get_case_id(),
                row.get_golden().get_status().value, row.get_verdict().get_status().value, row.get_golden().get_note()
            )

        accepted = [row.get_case_id() for row in rows if row.get_verdict().is_accepted()]
        logger.info(
            "Classified %s at k = %g: accepted cases %s, %d mismatches", system.describe(), k, accepted,
            len(result.get_mismatches())
        )
        return result

    def get_settings(self) -> ClassifierSettings:
        return self.__settings

    # PRIVATE METHODS

    def __reality_scan(self, candidate: Candidate) -> float:
        """
        Scan the superpotential across the system's classification window for an imaginary part.

        .. note::
            W = -u'/u is unchanged by a constant phase of u, so no phase needs to be removed before the scan.

        :param candidate:   The candidate.
        :return:            The largest value of |Im W| / max(1, |W|) at the points that are not nodes.
        """
        settings = self.__settings
        window = SystemCatalog.classification_window(candidate.get_system()).with_n(settings.get_n_points())

        worst = 0.0
        skipped = 0
        for z in window.points():
            try:
                w = SuperpotentialUtil.superpotential(
                    candidate, z, policy=settings.get_policy(), pole_threshold=settings.get_pole_threshold()
                )
            except (DomainError, PoleAtNodeError):
                skipped += 1
                continue
            worst = max(worst, abs(w.imag) / max(1.0, abs(w)))

        if skipped > 0:
            logger.debug("%s: skipped %d of %d scan points at nodes or singular points", candidate, skipped,
                         window.get_n())
        return worst

    def __zero_energy_note(self, candidate: Candidate) -> str:
        a = candidate.get_a()
        if GammaUtil.is_nonpositive_integer(a):
            m = int(round(-a.real))
            rate = BoundaryAnalysis.second_solution_growth_rate(m, policy=self.__settings.get_policy())
            logger.info("Zero-energy second solution F(-%d, 1, ζ) grows at rate %.4f (e^ζ growth gives 1/2)", m, rate)
            return "zero energy: M(-{0}, 1, ζ) is replaced by F(-{0}, 1, ζ), which grows at rate {1:.3f}".format(
                m, rate
            )
        return "zero energy: b = 1, and the Kummer function is excluded"
