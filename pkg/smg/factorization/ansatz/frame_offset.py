import math

from typing import Optional


class FrameOffset:
    """
    The affine map z = κq + α from a physical coordinate q to the dimensionless coordinate z, where κ is k₀ when a
    potential-derived wavenumber is present and k otherwise.
    """

    # CONSTRUCTOR

    def __init__(self, alpha: float, k: float, k0: Optional[float] = None):
        """
        Construct a frame offset.

        :param alpha:       The dimensionless shift α.
        :param k:           The wavenumber k (inverse length).
        :param k0:          The potential-derived wavenumber k₀ (inverse length), if any.
        :raises ValueError: If k is negative (or zero without k₀), k₀ is not positive, or any value is not finite.
        """
        if not (math.isfinite(alpha) and math.isfinite(k)):
            raise ValueError("The frame offset needs finite α and k, got α={}, k={}".format(alpha, k))
        if k < 0.0 or (k == 0.0 and k0 is None):
            raise ValueError("The wavenumber k must be positive, got {}".format(k))
        if k0 is not None and not (math.isfinite(k0) and k0 > 0.0):
            raise ValueError("The wavenumber k0 must be positive, got {}".format(k0))

        self.__alpha = float(alpha)                         # type: float
        self.__k = float(k)                                 # type: float
        self.__k0 = float(k0) if k0 is not None else None   # type: Optional[float]

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "FrameOffset(alpha={}, k={}, k0={})".format(self.__alpha, self.__k, self.__k0)

    # PUBLIC METHODS

    def get_alpha(self) -> float:
        return self.__alpha

    def get_k(self) -> float:
        return self.__k

    def get_k0(self) -> Optional[float]:
        return self.__k0

    def get_z_scale(self) -> float:
        """
        Get the scale κ in z = κq + α.

        :return:    κ.
        """
        return self.__k0 if self.__k0 is not None else self.__k

    def q_from_z(self, z: float) -> float:
        return (z - self.__alpha) / self.get_z_scale()

    def z_from_q(self, q: float) -> float:
        return self.get_z_scale() * q + self.__alpha
