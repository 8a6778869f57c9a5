from typing import Optional

from ..chf import EvalPolicy


class ClassifierSettings:
    """The thresholds used when classifying candidate solutions."""

    # CONSTRUCTOR

    def __init__(self, *, reality_threshold: float = 1e-9, n_points: int = 200, pole_threshold: float = 1e8,
                 growth_margin: float = 1e-6, policy: Optional[EvalPolicy] = None):
        """
        Construct a set of classifier settings.

        :param reality_threshold:   The largest tolerated value of |Im W| / max(1, |W|) over the scan.
        :param n_points:            The number of points in the reality scan.
        :param pole_threshold:      The |W| above which a point of the scan is treated as a node of the wavefunction
                                    and skipped.
        :param growth_margin:       The margin by which a growth rate or exponent must clear its threshold to count.
        :param policy:              The evaluation policy for the confluent hypergeometric functions (optional).
        :raises ValueError:         If any of the settings is out of range.
        """
        if not reality_threshold > 0.0:
            raise ValueError("reality_threshold must be positive, got {}".format(reality_threshold))
        if n_points < 2:
            raise ValueError("n_points must be at least 2, got {}".format(n_points))
        if not pole_threshold > 0.0:
            raise ValueError("pole_threshold must be positive, got {}".format(pole_threshold))
        if not growth_margin >= 0.0:
            raise ValueError("growth_margin must be non-negative, got {}".format(growth_margin))

        self.__growth_margin = float(growth_margin)                               # type: float
        self.__n_points = int(n_points)                                           # type: int
        self.__pole_threshold = float(pole_threshold)                             # type: float
        self.__policy = policy if policy is not None else EvalPolicy.default()    # type: EvalPolicy
        self.__reality_threshold = float(reality_threshold)                       # type: float

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "ClassifierSettings(reality_threshold={}, n_points={}, pole_threshold={}, growth_margin={})".format(
            self.__reality_threshold, self.__n_points, self.__pole_threshold, self.__growth_margin
        )

    # PUBLIC METHODS

    def get_growth_margin(self) -> float:
        return self.__growth_margin

    def get_n_points(self) -> int:
        return self.__n_points

    def get_pole_threshold(self) -> float:
        return self.__pole_threshold

    def get_policy(self) -> EvalPolicy:
        return self.__policy

    def get_reality_threshold(self) -> float:
        return self.__reality_threshold
