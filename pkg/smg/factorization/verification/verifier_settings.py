from typing import Optional

from ..chf import EvalPolicy


class VerifierSettings:
    """The tolerances and grid sizes used by the numerical verifier."""

    # CONSTRUCTOR

    def __init__(self, *, tolerance: float = 1e-6, oracle_tolerance: float = 1e-8, reality_tolerance: float = 1e-9,
                 growth_tolerance: float = 1e-3, grid_n: int = 2048, check_points: int = 200,
                 oracle_points: int = 50, node_margin: int = 3, policy: Optional[EvalPolicy] = None):
        """
        Construct a set of verifier settings.

        :param tolerance:           The tolerance for the Schrödinger, subsidiary, Riccati and chain checks.
        :param oracle_tolerance:    The tolerance for the cross-checks against independent oracles.
        :param reality_tolerance:   The tolerance for the reality, conjugation and duplicate-case checks.
        :param growth_tolerance:    The smallest |Im W| or growth exponent that confirms a rejection.
        :param grid_n:              The number of points in a sampled wavefunction grid.
        :param check_points:        The number of points at which pointwise checks are made.
        :param oracle_points:       The number of points at which the oracles are compared.
        :param node_margin:         The number of grid cells around a node of u that the subsidiary check avoids.
        :param policy:              The evaluation policy for the confluent hypergeometric functions (optional).
        :raises ValueError:         If any of the settings is out of range.
        """
        for name, value in (("tolerance", tolerance), ("oracle_tolerance", oracle_tolerance),
                            ("reality_tolerance", reality_tolerance), ("growth_tolerance", growth_tolerance)):
            if not value > 0.0:
                raise ValueError("{} must be positive, got {}".format(name, value))
        if grid_n < 64:
            raise ValueError("grid_n must be at least 64, got {}".format(grid_n))
        if check_points < 2 or oracle_points < 2:
            raise ValueError("check_points and oracle_points must be at least 2")
        if node_margin < 0:
            raise ValueError("node_margin must be non-negative, got {}".format(node_margin))

        self.__check_points = int(check_points)                                   # type: int
        self.__grid_n = int(grid_n)                                               # type: int
        self.__growth_tolerance = float(growth_tolerance)                         # type: float
        self.__node_margin = int(node_margin)                                     # type: int
        self.__oracle_points = int(oracle_points)                                 # type: int
        self.__oracle_tolerance = float(oracle_tolerance)                         # type: float
        self.__policy = policy if policy is not None else EvalPolicy.default()    # type: EvalPolicy
        self.__reality_tolerance = float(reality_tolerance)                       # type: float
        self.__tolerance = float(tolerance)                                       # type: float

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "VerifierSettings(tolerance={}, oracle_tolerance={}, reality_tolerance={}, grid_n={})".format(
            self.__tolerance, self.__oracle_tolerance, self.__reality_tolerance, self.__grid_n
        )

    # PUBLIC METHODS

    def get_check_points(self) -> int:
        return self.__check_points

    def get_grid_n(self) -> int:
        return self.__grid_n

    def get_growth_tolerance(self) -> float:
        return self.__growth_tolerance

    def get_node_margin(self) -> int:
        return self.__node_margin

    def get_oracle_points(self) -> int:
        return self.__oracle_points

    def get_oracle_tolerance(self) -> float:
        return self.__oracle_tolerance

    def get_policy(self) -> EvalPolicy:
        return self.__policy

    def get_reality_tolerance(self) -> float:
        return self.__reality_tolerance

    def get_tolerance(self) -> float:
        return self.__tolerance

    def with_tolerance(self, tolerance: float) -> "VerifierSettings":
        """
        Make a copy of the settings in which every tolerance is replaced by the one specified.

        .. note::
            The growth tolerance is a lower bound rather than an upper one, so it is kept.

        :param tolerance:   The tolerance.
        :return:            The new settings.
        """
        return VerifierSettings(
            tolerance=tolerance, oracle_tolerance=tolerance, reality_tolerance=tolerance,
            growth_tolerance=self.__growth_tolerance, grid_n=self.__grid_n, check_points=self.__check_points,
            oracle_points=self.__oracle_points, node_margin=self.__node_margin, policy=self.__policy
        )
