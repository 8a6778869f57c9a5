class EvalPolicy:
    """
    The numerical policy used when evaluating confluent hypergeometric functions.

    All powers and logarithms use the principal branch, with the cut along (-∞, 0]; there is no setting for this.
    """

    # CONSTRUCTOR

    def __init__(self, *, series_tol: float = 1e-15, max_terms: int = 10000, asymptotic_crossover: float = 30.0,
                 cancellation_limit: float = 1e3, small_terms_to_stop: int = 3):
        """
        Construct an evaluation policy.

        :param series_tol:              The relative size below which a series term counts as negligible.
        :param max_terms:               The maximum number of terms to sum before giving up.
        :param asymptotic_crossover:    The |ζ| above which the asymptotic expansions are tried first.
        :param cancellation_limit:      The largest tolerated ratio of (largest partial contribution) / |result|
                                        before a value is recomputed in extended precision.
        :param small_terms_to_stop:     The number of consecutive negligible terms after which a series stops.
        :raises ValueError:             If any of the settings is out of range.
        """
        if not series_tol > 0.0:
            raise ValueError("series_tol must be positive, got {}".format(series_tol))
        if max_terms < 1:
            raise ValueError("max_terms must be at least 1, got {}".format(max_terms))
        if not asymptotic_crossover > 0.0:
            raise ValueError("asymptotic_crossover must be positive, got {}".format(asymptotic_crossover))
        if not cancellation_limit >= 1.0:
            raise ValueError("cancellation_limit must be at least 1, got {}".format(cancellation_limit))
        if small_terms_to_stop < 1:
            raise ValueError("small_terms_to_stop must be at least 1, got {}".format(small_terms_to_stop))

        self.__asymptotic_crossover = float(asymptotic_crossover)  # type: float
        self.__cancellation_limit = float(cancellation_limit)      # type: float
        self.__max_terms = int(max_terms)                          # type: int
        self.__series_tol = float(series_tol)                      # type: float
        self.__small_terms_to_stop = int(small_terms_to_stop)      # type: int

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "EvalPolicy(series_tol={}, max_terms={}, asymptotic_crossover={}, cancellation_limit={})".format(
            self.__series_tol, self.__max_terms, self.__asymptotic_crossover, self.__cancellation_limit
        )

    # PUBLIC METHODS

    def get_asymptotic_crossover(self) -> float:
        return self.__asymptotic_crossover

    def get_cancellation_limit(self) -> float:
        return self.__cancellation_limit

    def get_max_terms(self) -> int:
        return self.__max_terms

    def get_series_tol(self) -> float:
        return self.__series_tol

    def get_small_terms_to_stop(self) -> int:
        return self.__small_terms_to_stop

    # PUBLIC STATIC METHODS

    @staticmethod
    def default() -> "EvalPolicy":
        """
        Get the default policy.

        :return:    The default policy (series_tol 1e-15, max_terms 10000, crossover 30, cancellation limit 1e3).
        """
        return _DEFAULT_POLICY


_DEFAULT_POLICY = EvalPolicy()
