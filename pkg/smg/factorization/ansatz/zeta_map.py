import cmath
import math

from typing import Optional

from ..base import DomainError
from .e_zeta_family import EZetaFamily
from .zeta_point import ZetaPoint


class ZetaMap:
    """
    An ansatz ζ(z): linear (ζ = cz), power law (ζ = cz^d) or exponential (ζ = c·e^(-z)).

    .. note::
        Logarithms are continued along the real z axis: log z is principal (so log z = ln|z| + iπ for z < 0), and
        log ζ is built from it rather than from the principal logarithm of ζ. A power law evaluated at negative z
        therefore lands on a definite sheet, which is reported as the winding of the point.
    """

    # CONSTRUCTOR

    def __init__(self, family: EZetaFamily, c: complex, d: Optional[float] = None):
        """
        Construct an ansatz.

        :param family:      The functional form of the ansatz.
        :param c:           The coefficient c (non-zero).
        :param d:           The power d (> 0), for the power-law family only.
        :raises ValueError: If c = 0, or d is missing, non-positive or given for a family that does not use it.
        """
        c = complex(c)
        if c == 0 or not cmath.isfinite(c):
            raise ValueError("The ansatz coefficient c must be finite and non-zero, got {}".format(c))
        if family is EZetaFamily.POWER:
            if d is None or not d > 0.0:
                raise ValueError("A power-law ansatz needs a positive power d, got {}".format(d))
        elif d is not None:
            raise ValueError("A {} ansatz does not take a power d".format(family.value.lower()))

        self.__c = ZetaMap.__clean(c)                        # type: complex
        self.__d = float(d) if d is not None else None       # type: Optional[float]
        self.__family = family                               # type: EZetaFamily
        self.__log_c = cmath.log(self.__c)                   # type: complex

    # SPECIAL METHODS

    def __repr__(self) -> str:
        if self.__family is EZetaFamily.POWER:
            return "ZetaMap(Power, c={}, d={})".format(self.__c, self.__d)
        return "ZetaMap({}, c={})".format(self.__family.value, self.__c)

    # PUBLIC METHODS

    def describe(self) -> str:
        """
        Make a formula for the ansatz, e.g. "ζ = (1.333+0j)·z^1.5".

        :return:    The formula.
        """
        if self.__family is EZetaFamily.LINEAR:
            return "ζ = {}·z".format(self.__c)
        elif self.__family is EZetaFamily.POWER:
            return "ζ = {}·z^{:g}".format(self.__c, self.__d)
        else:
            return "ζ = {}·exp(-z)".format(self.__c)

    def evaluate(self, z: complex) -> ZetaPoint:
        """
        Evaluate the ansatz and its derivatives at a point.

        :param z:               The point z.
        :return:                The ζ point.
        :raises DomainError:    If ζ(z) = 0 or dζ/dz = 0, where the ratios of derivatives are undefined.
        """
        z = ZetaMap.__clean(complex(z))
        c = self.__c

        if self.__family is EZetaFamily.EXPONENTIAL:
            if z.imag == 0.0:
                zeta = ZetaMap.__clean(c * math.exp(-z.real))
            else:
                zeta = c * cmath.exp(-z)
            return self.__make_point(
                z, zeta, -zeta, -1 + 0j, 1 + 0j, self.__log_c - z, cmath.log(ZetaMap.__clean(-c)) - z
            )

        if z == 0:
            raise DomainError("The {} ansatz has ζ = 0 at z = 0".format(self.__family.value.lower()))
        log_z = cmath.log(z)

        if self.__family is EZetaFamily.LINEAR:
            return self.__make_point(z, ZetaMap.__clean(c * z), c, 0j, 0j, self.__log_c + log_z, self.__log_c)

        d = self.__d
        if z.imag == 0.0 and z.real > 0.0:
            zeta = ZetaMap.__clean(c * z.real ** d)
        else:
            zeta = ZetaMap.__clean(c * cmath.exp(d * log_z))
        return self.__make_point(
            z, zeta, d * zeta / z, (d - 1) / z, (d - 1) * (d - 2) / (z * z),
            self.__log_c + d * log_z, self.__log_c + math.log(d) + (d - 1) * log_z
        )

    def get_c(self) -> complex:
        return self.__c

    def get_d(self) -> Optional[float]:
        return self.__d

    def get_derivative_exponent(self) -> float:
        """
        Get the exponent e for which dζ/dz ∝ ζ^e along the ansatz: 0 for the linear family, 1 - 1/d for a power
        law, and 1 for the exponential family.

        :return:    The exponent.
        """
        if self.__family is EZetaFamily.LINEAR:
            return 0.0
        elif self.__family is EZetaFamily.POWER:
            return 1.0 - 1.0 / self.__d
        else:
            return 1.0

    def get_family(self) -> EZetaFamily:
        return self.__family

    def tends_to_zero(self, direction: int) -> bool:
        """
        Determine whether ζ(z) → 0 (rather than ∞) as z → direction·∞.

        :param direction:   +1 or -1.
        :return:            True, if ζ → 0 in that direction, or False otherwise.
        """
        return self.__family is EZetaFamily.EXPONENTIAL and direction > 0

    # PRIVATE METHODS

    def __make_point(self, z: complex, zeta: complex, dzeta: complex, d2_ratio: complex, d3_ratio: complex,
                     log_zeta: complex, log_dzeta: complex) -> ZetaPoint:
        if zeta == 0 or dzeta == 0:
            raise DomainError("The ansatz {} is stationary or vanishes at z = {}".format(self.describe(), z))
        winding = int(round((log_zeta.imag - cmath.phase(zeta)) / (2 * math.pi)))
        return ZetaPoint(z, zeta, dzeta, d2_ratio, d3_ratio, log_zeta, log_dzeta, winding)

    # PRIVATE STATIC METHODS

    @staticmethod
    def __clean(value: complex) -> complex:
        # A negative zero imaginary part would put a point on the cut onto its lower side.
        return complex(value.real, 0.0) if value.imag == 0.0 else value
