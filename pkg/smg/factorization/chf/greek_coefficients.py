from typing import Tuple

from ..base import BetaUndefinedError
from .chf_params import CHFParams
from .e_chf_kind import ECHFKind


class GreekCoefficients:
    """
    The coefficients β, γ and δ that close the confluent hypergeometric recurrences for one kind of function F:

        dF/dζ = F - β F₊   and   ζ dF₊/dζ + γ F₊ - δ F = 0,

    where F₊ is the contiguous function with b raised by one (for M̃, the Kummer function inside it with 2-b raised
    by one).
    """

    # CONSTRUCTOR

    def __init__(self, kind: ECHFKind, params: CHFParams):
        """
        Construct the coefficients for the specified kind of function and parameters.

        :param kind:                The kind of function.
        :param params:              The parameters (a, b).
        :raises BetaUndefinedError: If β has a zero denominator (b = 0 for M, b = 2 for M̃).
        """
        a, b = params.get_a(), params.get_b()

        self.__kind = kind  # type: ECHFKind

        if kind is ECHFKind.M:
            if b == 0:
                raise BetaUndefinedError("β = (b-a)/b is undefined for M when b = 0")
            self.__beta = (b - a) / b  # type: complex
            self.__gamma = b           # type: complex
            self.__delta = b           # type: complex
        elif kind is ECHFKind.U:
            self.__beta = 1 + 0j
            self.__gamma = b
            self.__delta = b - a
        else:
            if b == 2:
                raise BetaUndefinedError("β = (1-a)/(2-b) is undefined for M̃ when b = 2")
            self.__beta = (1 - a) / (2 - b)
            self.__gamma = 2 - b
            self.__delta = 2 - b

        self.__a = a  # type: complex
        self.__b = b  # type: complex

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "GreekCoefficients(kind={}, beta={}, gamma={}, delta={})".format(
            self.__kind.value, self.__beta, self.__gamma, self.__delta
        )

    # PUBLIC METHODS

    def consistency_residuals(self) -> Tuple[complex, complex]:
        """
        Compute the residuals of the two algebraic constraints that every kind satisfies:
        γ - 2βδ = 2a - b and γ(γ - 2) = b(b - 2).

        :return:    The two residuals, which should vanish up to rounding.
        """
        a, b = self.__a, self.__b
        return (
            self.__gamma - 2 * self.__beta * self.__delta - (2 * a - b),
            self.__gamma * (self.__gamma - 2) - b * (b - 2)
        )

    def get_beta(self) -> complex:
        return self.__beta

    def get_delta(self) -> complex:
        return self.__delta

    def get_gamma(self) -> complex:
        return self.__gamma

    def get_kind(self) -> ECHFKind:
        return self.__kind
