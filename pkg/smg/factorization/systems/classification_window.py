import numpy as np


class ClassificationWindow:
    """An interior range of the dimensionless variable z over which a candidate's superpotential is scanned."""

    # CONSTRUCTOR

    def __init__(self, z_min: float, z_max: float, n: int = 200):
        """
        Construct a classification window.

        :param z_min:       The lower end of the window.
        :param z_max:       The upper end of the window.
        :param n:           The number of (uniformly spaced) points in the window.
        :raises ValueError: If the window is empty or has fewer than two points.
        """
        if not z_min < z_max:
            raise ValueError("A classification window needs z_min < z_max, got [{}, {}]".format(z_min, z_max))
        if n < 2:
            raise ValueError("A classification window needs at least two points, got {}".format(n))

        self.__n = n                  # type: int
        self.__z_max = float(z_max)   # type: float
        self.__z_min = float(z_min)   # type: float

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "ClassificationWindow([{}, {}], n={})".format(self.__z_min, self.__z_max, self.__n)

    # PUBLIC METHODS

    def get_n(self) -> int:
        return self.__n

    def get_z_max(self) -> float:
        return self.__z_max

    def get_z_min(self) -> float:
        return self.__z_min

    def points(self) -> np.ndarray:
        """
        Get the points of the window.

        :return:    The n uniformly spaced points from z_min to z_max.
        """
        return np.linspace(self.__z_min, self.__z_max, self.__n)

    def with_n(self, n: int) -> "ClassificationWindow":
        return ClassificationWindow(self.__z_min, self.__z_max, n)
