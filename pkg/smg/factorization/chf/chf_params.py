import cmath

from ..base import InvalidBError
from .e_chf_kind import ECHFKind
from .gamma_util import GammaUtil


class CHFParams:
    """The (complex) parameters a and b of a confluent hypergeometric function."""

    # CONSTRUCTOR

    def __init__(self, a: complex, b: complex):
        """
        Construct a set of confluent hypergeometric parameters.

        :param a:           The parameter a.
        :param b:           The parameter b.
        :raises ValueError: If either parameter is not finite.
        """
        self.__a = complex(a)  # type: complex
        self.__b = complex(b)  # type: complex

        if not (cmath.isfinite(self.__a) and cmath.isfinite(self.__b)):
            raise ValueError("Confluent hypergeometric parameters must be finite, got a={}, b={}".format(a, b))

    # SPECIAL METHODS

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CHFParams):
            return NotImplemented
        return self.__a == other.__a and self.__b == other.__b

    def __hash__(self) -> int:
        return hash((self.__a, self.__b))

    def __repr__(self) -> str:
        return "CHFParams(a={}, b={})".format(self.__a, self.__b)

    # PUBLIC METHODS

    def check_valid_for(self, kind: ECHFKind) -> None:
        """
        Check that the parameters define the specified kind of function.

        :param kind:            The kind of function.
        :raises InvalidBError:  If b is a non-positive integer (for M) or 2-b is one (for M̃).
        """
        if kind is ECHFKind.M and GammaUtil.is_nonpositive_integer(self.__b):
            raise InvalidBError("M(a,b,ζ) does not exist for b = {}".format(self.__b.real))
        elif kind is ECHFKind.MTILDE and GammaUtil.is_nonpositive_integer(2 - self.__b):
            raise InvalidBError("M̃(a,b,ζ) does not exist for b = {}".format(self.__b.real))

    def get_a(self) -> complex:
        """
        Get the parameter a.

        :return:    The parameter a.
        """
        return self.__a

    def get_b(self) -> complex:
        """
        Get the parameter b.

        :return:    The parameter b.
        """
        return self.__b

    def is_valid_for(self, kind: ECHFKind) -> bool:
        """
        Determine whether the parameters define the specified kind of function.

        :param kind:    The kind of function.
        :return:        True, if they do, or False otherwise.
        """
        try:
            self.check_valid_for(kind)
            return True
        except InvalidBError:
            return False

    def reduced(self) -> "CHFParams":
        """
        Get the parameters (1+a-b, 2-b) of the Kummer function inside M̃(a,b,ζ) = ζ^(1-b) M(1+a-b, 2-b, ζ).

        :return:    The reduced parameters.
        """
        return CHFParams(1 + self.__a - self.__b, 2 - self.__b)

    def with_b_shifted(self, shift: int = 1) -> "CHFParams":
        """
        Get the parameters (a, b+shift).

        :param shift:   The shift to apply to b.
        :return:        The shifted parameters.
        """
        return CHFParams(self.__a, self.__b + shift)
