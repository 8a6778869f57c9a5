import math

from scipy import special

from ..base import PoleAtNonPositiveIntegerError


class GammaUtil:
    """Utility functions related to the gamma function, its reciprocal, its logarithm and its logarithmic derivative."""

    # CONSTANTS

    EULER_GAMMA = 0.57721566490153286061  # type: float

    # PUBLIC STATIC METHODS

    @staticmethod
    def digamma(z: complex) -> complex:
        """
        Evaluate the digamma function ψ(z) = Γ'(z)/Γ(z).

        :param z:                               The argument.
        :return:                                ψ(z).
        :raises PoleAtNonPositiveIntegerError:  If z is a non-positive integer.
        """
        GammaUtil.__check_not_pole(z, "digamma")
        return complex(special.psi(complex(z)))

    @staticmethod
    def gamma(z: complex) -> complex:
        """
        Evaluate the gamma function.

        :param z:                               The argument.
        :return:                                Γ(z).
        :raises PoleAtNonPositiveIntegerError:  If z is a non-positive integer.
        """
        GammaUtil.__check_not_pole(z, "gamma")
        return complex(special.gamma(complex(z)))

    @staticmethod
    def is_integer(z: complex) -> bool:
        """
        Determine whether a complex number is exactly an integer.

        :param z:   The number.
        :return:    True, if z is an integer, or False otherwise.
        """
        z = complex(z)
        return z.imag == 0.0 and math.isfinite(z.real) and z.real == math.floor(z.real)

    @staticmethod
    def is_nonpositive_integer(z: complex) -> bool:
        """
        Determine whether a complex number is one of 0, -1, -2, ...

        :param z:   The number.
        :return:    True, if z is a non-positive integer, or False otherwise.
        """
        return GammaUtil.is_integer(z) and complex(z).real <= 0.0

    @staticmethod
    def log_gamma(z: complex) -> complex:
        """
        Evaluate the principal branch of the logarithm of the gamma function.

        .. note::
            The principal branch is the one that is real on the positive real axis and continuous everywhere
            else in the plane cut along (-∞, 0], so that exp(log_gamma(z)) = Γ(z) but log_gamma(z) ≠ log(Γ(z))
            in general.

        :param z:                               The argument.
        :return:                                The principal value of log Γ(z).
        :raises PoleAtNonPositiveIntegerError:  If z is a non-positive integer.
        """
        GammaUtil.__check_not_pole(z, "log_gamma")
        return complex(special.loggamma(complex(z)))

    @staticmethod
    def pochhammer(z: complex, n: int) -> complex:
        """
        Evaluate the rising factorial (z)_n = z (z+1) ... (z+n-1).

        :param z:   The base.
        :param n:   The number of factors (n >= 0).
        :return:    (z)_n.
        """
        result = 1 + 0j  # type: complex
        for j in range(n):
            result *= z + j
        return result

    @staticmethod
    def rgamma(z: complex) -> complex:
        """
        Evaluate the reciprocal gamma function, which is entire (it vanishes at the poles of Γ).

        :param z:   The argument.
        :return:    1/Γ(z).
        """
        return complex(special.rgamma(complex(z)))

    # PRIVATE STATIC METHODS

    @staticmethod
    def __check_not_pole(z: complex, function_name: str) -> None:
        if GammaUtil.is_nonpositive_integer(z):
            raise PoleAtNonPositiveIntegerError(
                "Cannot evaluate {} at the non-positive integer {}".format(function_name, complex(z).real)
            )
