from enum import Enum


class ESign(Enum):
    """An explicit sign, used for the independent (±) choices that label the candidate solutions."""

    PLUS = 1
    MINUS = -1

    # PUBLIC METHODS

    def flipped(self) -> "ESign":
        """
        Get the opposite sign.

        :return:    The opposite sign.
        """
        return ESign.MINUS if self is ESign.PLUS else ESign.PLUS

    def symbol(self) -> str:
        """
        Get the symbol used to print the sign.

        :return:    "+" or "-".
        """
        return "+" if self is ESign.PLUS else "-"
