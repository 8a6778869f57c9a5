import logging

from typing import Tuple

from ..base import ESign
from ..chf import CHFParams, ECHFKind, GreekCoefficients
from ..systems import SystemCatalog, SystemSpec
from .ansatz_util import AnsatzUtil
from .frame_offset import FrameOffset
from .zeta_map import ZetaMap


logger = logging.getLogger(__name__)


class Candidate:
    """
    A candidate solution for one system: the parameters (a, b), the ansatz ζ(z), the frame z = κq + α and the kind of
    confluent hypergeometric function, which together determine a superpotential and a reduced wavefunction.
    """

    # CONSTANTS

    # The fractions of the classification window at which the master constraint is checked on construction.
    CHECK_FRACTIONS = (0.13, 0.31, 0.52, 0.71, 0.89)  # type: Tuple[float, ...]

    # The tolerance on the master-constraint residual, relative to its largest term.
    RESIDUAL_TOLERANCE = 1e-10  # type: float

    # CONSTRUCTOR

    def __init__(self, system: SystemSpec, case_id: int, params: CHFParams, zeta_map: ZetaMap, frame: FrameOffset,
                 kind: ECHFKind, *, sign_b: ESign, sign_c: ESign):
        """
        Construct a candidate.

        :param system:              The system the candidate belongs to.
        :param case_id:             The case (or item) number in the system's verdict table.
        :param params:              The parameters (a, b).
        :param zeta_map:            The ansatz ζ(z).
        :param frame:               The frame z = κq + α.
        :param kind:                The kind of confluent hypergeometric function.
        :param sign_b:              The sign choice that selected b.
        :param sign_c:              The sign choice that selected c.
        :raises InvalidBError:      If the kind does not exist for the parameters.
        :raises BetaUndefinedError: If β is undefined for the kind and parameters.
        :raises ValueError:         If the parameters and ansatz do not satisfy the master constraint for the system.
        """
        params.check_valid_for(kind)

        self.__case_id = case_id                          # type: int
        self.__frame = frame                              # type: FrameOffset
        self.__greek = GreekCoefficients(kind, params)    # type: GreekCoefficients
        self.__kind = kind                                # type: ECHFKind
        self.__params = params                            # type: CHFParams
        self.__sign_b = sign_b                            # type: ESign
        self.__sign_c = sign_c                            # type: ESign
        self.__system = system                            # type: SystemSpec
        self.__zeta_map = zeta_map                        # type: ZetaMap

        self.__check_master_constraint()

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "Candidate({} #{}: a={}, b={}, {}, kind={})".format(
            self.__system.get_name().get_display_name(), self.__case_id, self.__params.get_a(),
            self.__params.get_b(), self.__zeta_map.describe(), self.__kind.value
        )

    # PUBLIC METHODS

    def get_a(self) -> complex:
        return self.__params.get_a()

    def get_b(self) -> complex:
        return self.__params.get_b()

    def get_case_id(self) -> int:
        return self.__case_id

    def get_frame(self) -> FrameOffset:
        return self.__frame

    def get_greek(self) -> GreekCoefficients:
        return self.__greek

    def get_k(self) -> float:
        return self.__frame.get_k()

    def get_kind(self) -> ECHFKind:
        return self.__kind

    def get_params(self) -> CHFParams:
        return self.__params

    def get_sign_b(self) -> ESign:
        return self.__sign_b

    def get_sign_c(self) -> ESign:
        return self.__sign_c

    def get_system(self) -> SystemSpec:
        return self.__system

    def get_zeta_map(self) -> ZetaMap:
        return self.__zeta_map

    def max_relative_residual(self) -> float:
        """
        Compute the largest residual of the master constraint at the check points, relative to its largest term.

        :return:    The largest relative residual.
        """
        window = SystemCatalog.classification_window(self.__system)
        k, alpha = self.__frame.get_k(), self.__frame.get_alpha()
        worst = 0.0
        for fraction in Candidate.CHECK_FRACTIONS:
            z = window.get_z_min() + fraction * (window.get_z_max() - window.get_z_min())
            rhs = SystemCatalog.ansatz_rhs(self.__system, k, z, alpha=alpha)
            terms = AnsatzUtil.zeta_residual_terms(self.__zeta_map, self.__params, z)
            scale = max(max(abs(t) for t in terms), abs(rhs), 1e-300)
            worst = max(worst, abs(sum(terms) - rhs) / scale)
        return worst

    # PRIVATE METHODS

    def __check_master_constraint(self) -> None:
        residual = self.max_relative_residual()
        if residual > Candidate.RESIDUAL_TOLERANCE:
            raise ValueError("{} violates the master constraint (relative residual {:.3e})".format(self, residual))
        logger.debug("%s satisfies the master constraint (relative residual %.3e)", self, residual)
