from typing import List, Optional, Sequence

from ..systems import EVerdictStatus
from .e_infinity_growth import EInfinityGrowth
from .end_behaviour import EndBehaviour


class Verdict:
    """
    The outcome of classifying a candidate: the rejection reasons that the evidence confirms, and the evidence itself.

    .. note::
        The status is the first confirmed defect in the order origin, infinity, reality, or Accepted if there is none.
    """

    # CONSTRUCTOR

    def __init__(self, defects: Sequence[EVerdictStatus], *, max_im_w: float, origin_exponent: Optional[complex],
                 infinity_growth: Optional[EInfinityGrowth], ends: Sequence[EndBehaviour], notes: Sequence[str] = ()):
        """
        Construct a verdict.

        :param defects:         The confirmed rejection reasons (in any order, without repeats).
        :param max_im_w:        The largest value of |Im W| / max(1, |W|) seen during the reality scan.
        :param origin_exponent: The leading exponent of u ∝ z^p at the radial origin, if there is one.
        :param infinity_growth: The worst behaviour of the wavefunction at the ends at infinity, if there are any.
        :param ends:            The behaviour at each end of the domain.
        :param notes:           Any further evidence, in human-readable form.
        :raises ValueError:     If Accepted is listed as a defect.
        """
        if EVerdictStatus.ACCEPTED in defects:
            raise ValueError("Accepted is not a defect")

        order = EVerdictStatus.rejection_order()
        self.__defects = [s for s in order if s in defects]    # type: List[EVerdictStatus]
        self.__ends = list(ends)                                # type: List[EndBehaviour]
        self.__infinity_growth = infinity_growth                # type: Optional[EInfinityGrowth]
        self.__max_im_w = max_im_w                              # type: float
        self.__notes = list(notes)                              # type: List[str]
        self.__origin_exponent = origin_exponent                # type: Optional[complex]

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "Verdict({}, defects=[{}], max_im_w={:.3e})".format(
            self.get_status().value, ", ".join(d.value for d in self.__defects), self.__max_im_w
        )

    # PUBLIC METHODS

    def describe(self, status: Optional[EVerdictStatus] = None) -> str:
        """
        Make a one-line human-readable account of the verdict and its evidence.

        :param status:  The status to lead with (optional; defaults to get_status()).
        :return:        The account.
        """
        parts = ["max|Im W| {:.2e}".format(self.__max_im_w)]
        if self.__origin_exponent is not None:
            parts.append("origin exponent {:.4g}".format(self.__origin_exponent))
        if self.__infinity_growth is not None:
            parts.append("at infinity {}".format(self.__infinity_growth.value))
        status = status if status is not None else self.get_status()
        return "{} ({})".format(status.describe(), "; ".join(parts + self.__notes))

    def get_defects(self) -> List[EVerdictStatus]:
        return list(self.__defects)

    def get_ends(self) -> List[EndBehaviour]:
        return list(self.__ends)

    def get_infinity_growth(self) -> Optional[EInfinityGrowth]:
        return self.__infinity_growth

    def get_max_im_w(self) -> float:
        return self.__max_im_w

    def get_notes(self) -> List[str]:
        return list(self.__notes)

    def get_origin_exponent(self) -> Optional[complex]:
        return self.__origin_exponent

    def get_status(self) -> EVerdictStatus:
        return self.__defects[0] if self.__defects else EVerdictStatus.ACCEPTED

    def has_defect(self, status: EVerdictStatus) -> bool:
        return status in self.__defects

    def is_accepted(self) -> bool:
        return not self.__defects

    def matches(self, expected: EVerdictStatus) -> bool:
        """
        Determine whether the verdict agrees with an expected status.

        :param expected:    The expected status.
        :return:            True, if the expected status is Accepted and there are no defects, or if the expected
                            rejection reason is among the confirmed defects.
        """
        if expected is EVerdictStatus.ACCEPTED:
            return self.is_accepted()
        return expected in self.__defects

    def status_against(self, expected: EVerdictStatus) -> EVerdictStatus:
        """
        Get the status to report alongside an expected status.

        .. note::
            A candidate can have several confirmed defects. If the expected rejection reason is one of them, that
            reason is reported; otherwise this is the same as get_status.

        :param expected:    The expected status.
        :return:            The status to report.
        """
        return expected if expected in self.__defects else self.get_status()
