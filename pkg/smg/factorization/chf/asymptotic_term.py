class AsymptoticTerm:
    """
    One term coefficient · e^(rate·ζ) · ζ^power · (ln ζ)^(1 if has_log else 0) of the leading behaviour of a
    confluent hypergeometric function as ζ → 0 or |ζ| → ∞.
    """

    # CONSTRUCTOR

    def __init__(self, coefficient: complex, power: complex, *, has_log: bool = False, exp_rate: int = 0):
        """
        Construct an asymptotic term.

        :param coefficient: The constant coefficient.
        :param power:       The power of ζ.
        :param has_log:     Whether the term is multiplied by ln ζ.
        :param exp_rate:    The factor s in e^(sζ) (0 or 1).
        """
        self.__coefficient = complex(coefficient)  # type: complex
        self.__exp_rate = exp_rate                 # type: int
        self.__has_log = has_log                   # type: bool
        self.__power = complex(power)              # type: complex

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "AsymptoticTerm(coefficient={}, power={}, has_log={}, exp_rate={})".format(
            self.__coefficient, self.__power, self.__has_log, self.__exp_rate
        )

    # PUBLIC METHODS

    def get_coefficient(self) -> complex:
        return self.__coefficient

    def get_exp_rate(self) -> int:
        return self.__exp_rate

    def get_power(self) -> complex:
        return self.__power

    def has_log(self) -> bool:
        return self.__has_log
