from enum import Enum
from typing import List


class EVerdictStatus(Enum):
    """The possible outcomes of classifying a candidate solution."""

    ACCEPTED = "Accepted"
    REJECTED_IMAGINARY_W = "RejectedImaginaryW"
    REJECTED_DIVERGES_AT_ORIGIN = "RejectedDivergesAtOrigin"
    REJECTED_DIVERGES_AT_INFINITY = "RejectedDivergesAtInfinity"

    # PUBLIC METHODS

    def describe(self) -> str:
        """
        Get a short human-readable description of the status.

        :return:    The description.
        """
        return _DESCRIPTIONS[self]

    def is_rejection(self) -> bool:
        return self is not EVerdictStatus.ACCEPTED

    # PUBLIC STATIC METHODS

    @staticmethod
    def rejection_order() -> List["EVerdictStatus"]:
        """
        Get the rejection reasons in the order in which they take precedence when several apply.

        :return:    The ordered rejection reasons (origin, infinity, reality).
        """
        return [
            EVerdictStatus.REJECTED_DIVERGES_AT_ORIGIN,
            EVerdictStatus.REJECTED_DIVERGES_AT_INFINITY,
            EVerdictStatus.REJECTED_IMAGINARY_W
        ]


_DESCRIPTIONS = {
    EVerdictStatus.ACCEPTED: "Usual Solution",
    EVerdictStatus.REJECTED_IMAGINARY_W: "Imaginary Superpotential",
    EVerdictStatus.REJECTED_DIVERGES_AT_ORIGIN: "Wavefunction diverges at the origin",
    EVerdictStatus.REJECTED_DIVERGES_AT_INFINITY: "Wavefunction diverges exponentially at infinity"
}
