from enum import Enum


class ECHFKind(Enum):
    """The three confluent hypergeometric solutions a candidate can be built from."""

    M = "M"
    U = "U"
    MTILDE = "Mtilde"

    # PUBLIC STATIC METHODS

    @staticmethod
    def parse(name: str) -> "ECHFKind":
        """
        Parse a kind from its name.

        :param name:        The name (case-insensitive), e.g. "M", "U" or "Mtilde".
        :return:            The corresponding kind.
        :raises ValueError: If the name does not denote a kind.
        """
        for kind in ECHFKind:
            if kind.value.lower() == name.strip().lower():
                return kind
        raise ValueError("Unknown confluent hypergeometric kind: '{}'".format(name))
