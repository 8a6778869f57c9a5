from enum import Enum


class EInfinityGrowth(Enum):
    """The ways in which a wavefunction can behave as the coordinate runs off to infinity."""

    DECAYING = "Decaying"
    OSCILLATORY = "Oscillatory"
    EXPONENTIAL_GROWTH = "ExponentialGrowth"

    # PUBLIC METHODS

    def get_severity(self) -> int:
        """
        Get the severity of the behaviour, which orders the behaviours from best to worst.

        :return:    0 for decay, 1 for oscillation, 2 for exponential growth.
        """
        return _SEVERITIES[self]


_SEVERITIES = {
    EInfinityGrowth.DECAYING: 0,
    EInfinityGrowth.OSCILLATORY: 1,
    EInfinityGrowth.EXPONENTIAL_GROWTH: 2
}
