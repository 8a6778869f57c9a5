from enum import Enum


class EZetaFamily(Enum):
    """The functional forms the ansatz ζ(z) can take."""

    LINEAR = "Linear"
    POWER = "Power"
    EXPONENTIAL = "Exponential"
