from enum import Enum


class EEndKind(Enum):
    """Whether a domain end is a radial origin or lies at infinity in the physical coordinate."""

    ORIGIN = "origin"
    INFINITY = "infinity"


class DomainEnd:
    """One end of the domain of the dimensionless variable z, approached as z → direction·∞ or z → 0⁺."""

    # CONSTRUCTOR

    def __init__(self, kind: EEndKind, direction: int):
        """
        Construct a domain end.

        :param kind:        Whether the end is a radial origin or at infinity.
        :param direction:   +1 or -1: the side from which z approaches the end (for an origin, always +1).
        :raises ValueError: If the direction is not ±1.
        """
        if direction not in (1, -1):
            raise ValueError("A domain end direction must be +1 or -1, got {}".format(direction))

        self.__direction = direction  # type: int
        self.__kind = kind            # type: EEndKind

    # SPECIAL METHODS

    def __repr__(self) -> str:
        if self.__kind is EEndKind.ORIGIN:
            return "DomainEnd(z → 0+)"
        return "DomainEnd(z → {}∞)".format("+" if self.__direction > 0 else "-")

    # PUBLIC METHODS

    def get_direction(self) -> int:
        return self.__direction

    def get_kind(self) -> EEndKind:
        return self.__kind

    def is_origin(self) -> bool:
        return self.__kind is EEndKind.ORIGIN
