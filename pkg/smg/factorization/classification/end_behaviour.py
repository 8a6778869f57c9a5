from typing import Optional

from ..systems import DomainEnd
from .e_infinity_growth import EInfinityGrowth


class EndBehaviour:
    """The behaviour of a candidate's wavefunction at one end of its domain, as found by the boundary analysis."""

    # CONSTRUCTOR

    def __init__(self, end: DomainEnd, *, diverges: bool, exponent: Optional[complex] = None, has_log: bool = False,
                 growth: Optional[EInfinityGrowth] = None, detail: str = ""):
        """
        Construct the behaviour at a domain end.

        :param end:         The domain end.
        :param diverges:    Whether the wavefunction is unbounded there.
        :param exponent:    The leading exponent, if the behaviour is a power (of z at an origin, of ζ where ζ → 0).
        :param has_log:     Whether the leading behaviour carries a logarithm.
        :param growth:      The growth class, for an end at infinity.
        :param detail:      A human-readable account of the evidence.
        """
        self.__detail = detail                                                # type: str
        self.__diverges = diverges                                            # type: bool
        self.__end = end                                                      # type: DomainEnd
        self.__exponent = complex(exponent) if exponent is not None else None  # type: Optional[complex]
        self.__growth = growth                                                # type: Optional[EInfinityGrowth]
        self.__has_log = has_log                                              # type: bool

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "EndBehaviour({}, diverges={}, {})".format(self.__end, self.__diverges, self.__detail)

    # PUBLIC METHODS

    def diverges(self) -> bool:
        return self.__diverges

    def get_detail(self) -> str:
        return self.__detail

    def get_end(self) -> DomainEnd:
        return self.__end

    def get_exponent(self) -> Optional[complex]:
        return self.__exponent

    def get_growth(self) -> Optional[EInfinityGrowth]:
        return self.__growth

    def has_log(self) -> bool:
        return self.__has_log
