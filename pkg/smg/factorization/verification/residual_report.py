import math


class ResidualReport:
    """The outcome of one numerical check: its largest relative residual, where it occurred and the tolerance used."""

    # CONSTRUCTOR

    def __init__(self, name: str, max_rel_residual: float, location: float, tolerance_used: float, *,
                 detail: str = ""):
        """
        Construct a residual report.

        :param name:                The name of the check.
        :param max_rel_residual:    The largest relative residual found (NaN counts as a failure).
        :param location:            The coordinate at which it was found (NaN if it has no location).
        :param tolerance_used:      The tolerance against which the residual was judged.
        :param detail:              Any further human-readable information.
        """
        self.__detail = detail                              # type: str
        self.__location = float(location)                   # type: float
        self.__max_rel_residual = float(max_rel_residual)   # type: float
        self.__name = name                                  # type: str
        self.__tolerance_used = float(tolerance_used)       # type: float

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "ResidualReport({}: {:.3e} at {:.4g}, tolerance {:.1e}, {})".format(
            self.__name, self.__max_rel_residual, self.__location, self.__tolerance_used,
            "passed" if self.passed() else "FAILED"
        )

    # PUBLIC METHODS

    def get_detail(self) -> str:
        return self.__detail

    def get_location(self) -> float:
        return self.__location

    def get_max_rel_residual(self) -> float:
        return self.__max_rel_residual

    def get_name(self) -> str:
        return self.__name

    def get_tolerance_used(self) -> float:
        return self.__tolerance_used

    def passed(self) -> bool:
        return not math.isnan(self.__max_rel_residual) and self.__max_rel_residual <= self.__tolerance_used
