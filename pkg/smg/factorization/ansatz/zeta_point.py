class ZetaPoint:
    """The value of an ansatz ζ(z) at one point z, together with its derivatives and continued logarithms."""

    # CONSTRUCTOR

    def __init__(self, z: complex, zeta: complex, dzeta: complex, d2_ratio: complex, d3_ratio: complex,
                 log_zeta: complex, log_dzeta: complex, winding: int):
        """
        Construct a ζ point.

        :param z:           The point z.
        :param zeta:        The principal value of ζ(z).
        :param dzeta:       dζ/dz.
        :param d2_ratio:    (d²ζ/dz²)/(dζ/dz).
        :param d3_ratio:    (d³ζ/dz³)/(dζ/dz).
        :param log_zeta:    log ζ, continued along the real z axis.
        :param log_dzeta:   log dζ/dz, continued along the real z axis.
        :param winding:     The number of times the continued argument of ζ has wound past the branch cut.
        """
        self.__d2_ratio = d2_ratio    # type: complex
        self.__d3_ratio = d3_ratio    # type: complex
        self.__dzeta = dzeta          # type: complex
        self.__log_dzeta = log_dzeta  # type: complex
        self.__log_zeta = log_zeta    # type: complex
        self.__winding = winding      # type: int
        self.__z = z                  # type: complex
        self.__zeta = zeta            # type: complex

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "ZetaPoint(z={}, zeta={}, winding={})".format(self.__z, self.__zeta, self.__winding)

    # PUBLIC METHODS

    def get_d2_ratio(self) -> complex:
        return self.__d2_ratio

    def get_d3_ratio(self) -> complex:
        return self.__d3_ratio

    def get_dzeta(self) -> complex:
        return self.__dzeta

    def get_log_dzeta(self) -> complex:
        return self.__log_dzeta

    def get_log_zeta(self) -> complex:
        return self.__log_zeta

    def get_winding(self) -> int:
        return self.__winding

    def get_z(self) -> complex:
        return self.__z

    def get_zeta(self) -> complex:
        return self.__zeta
