import mpmath
import numpy as np

from scipy import special

from ..base import OracleUnavailableError
from ..systems import ESystemName, SystemSpec


class IndependentOracles:
    """
    Closed forms of the accepted wavefunctions, computed by code that shares nothing with the confluent
    hypergeometric kernel: scipy's Bessel and Airy functions, and mpmath's Tricomi function.
    """

    # PUBLIC STATIC METHODS

    @staticmethod
    def airy_ai(z: np.ndarray) -> np.ndarray:
        return special.airy(np.asarray(z, dtype=float))[0]

    @staticmethod
    def airy_ai_prime(z: np.ndarray) -> np.ndarray:
        return special.airy(np.asarray(z, dtype=float))[1]

    @staticmethod
    def airy_via_modified_bessel(z: np.ndarray) -> np.ndarray:
        """
        Evaluate Ai(z) = (1/π) √(z/3) K_{1/3}((2/3) z^(3/2)) for z > 0.

        :param z:           The points (all positive).
        :return:            Ai at the points.
        :raises ValueError: If any point is not positive.
        """
        z = np.asarray(z, dtype=float)
        if np.any(z <= 0.0):
            raise ValueError("The modified Bessel form of Ai only holds for z > 0")
        return np.sqrt(z / 3) * special.kv(1.0 / 3.0, 2.0 / 3.0 * z ** 1.5) / np.pi

    @staticmethod
    def bessel_j(order: int, x: np.ndarray) -> np.ndarray:
        return special.jv(order, np.asarray(x, dtype=float))

    @staticmethod
    def reduced_wavefunction(system: SystemSpec, z: np.ndarray) -> np.ndarray:
        """
        Evaluate the known regular reduced wavefunction of a system, up to a constant factor, as a function of z.

        :param system:                  The system.
        :param z:                       The points z.
        :return:                        sin z (free particle in 1D), √z J_|m|(z) (2D), z j_l(z) (3D), or Ai(z)
                                        (linear potential).
        :raises OracleUnavailableError: If the system has no closed form among the oracles.
        """
        z = np.asarray(z, dtype=float)
        name = system.get_name()
        if name is ESystemName.FREE1D:
            return np.sin(z)
        elif name is ESystemName.FREE2D:
            return np.sqrt(z) * IndependentOracles.bessel_j(abs(system.get_m()), z)
        elif name is ESystemName.FREE3D:
            return z * special.spherical_jn(system.get_l(), z)
        elif name is ESystemName.LINEAR:
            return IndependentOracles.airy_ai(z)
        raise OracleUnavailableError("No independent closed form is available for {}".format(
            name.get_display_name()
        ))

    @staticmethod
    def spherical_j(l: int, x: np.ndarray) -> np.ndarray:
        return special.spherical_jn(l, np.asarray(x, dtype=float))

    @staticmethod
    def tricomi_u(a: complex, b: complex, zeta: complex) -> complex:
        """
        Evaluate Tricomi's function U(a,b,ζ) with mpmath's own algorithm.

        .. note::
            A fresh mpmath context is used for each call, so that calls from different threads do not share one.

        :param a:       The parameter a.
        :param b:       The parameter b.
        :param zeta:    The argument.
        :return:        U(a,b,ζ).
        """
        ctx = mpmath.MPContext()
        ctx.dps = 20
        return complex(ctx.hyperu(ctx.mpc(a), ctx.mpc(b), ctx.mpc(zeta)))
