from typing import List, Sequence


# BASE CLASS

class FactorizationError(RuntimeError):
    """The base class for all errors raised by the factorization library."""
    pass


# KERNEL ERRORS

class NonConvergenceError(FactorizationError):
    """Raised when a series or expansion fails to reach the requested tolerance within its term budget."""
    pass


class InvalidBError(FactorizationError):
    """Raised when the b parameter of a confluent hypergeometric function makes the requested series undefined."""
    pass


class BranchCutAmbiguityError(FactorizationError):
    """Raised when a multi-valued function is asked for its value on its branch cut (−∞, 0]."""
    pass


class BetaUndefinedError(FactorizationError):
    """Raised when the β coefficient of the derivative identity has a vanishing denominator."""
    pass


class PoleAtNonPositiveIntegerError(FactorizationError):
    """Raised when the gamma or digamma function is evaluated at one of its poles."""
    pass


class DomainError(FactorizationError):
    """Raised when a point lies outside the domain on which an operation is defined."""
    pass


# SOLVER / CATALOG ERRORS

class UnsupportedSystemError(FactorizationError):
    """Raised when a physical system is not one of those the catalog supports."""
    pass


# CLASSIFIER ERRORS

class PoleAtNodeError(FactorizationError):
    """Raised when the superpotential is requested at a node of the wavefunction, where it has a pole."""

    # CONSTRUCTOR

    def __init__(self, z: float, magnitude: float):
        """
        Construct a pole-at-node error.

        :param z:           The point at which the superpotential was requested.
        :param magnitude:   The magnitude of the superpotential that triggered the error.
        """
        super().__init__("Superpotential has a pole at z = {} (|W| = {:.3e})".format(z, magnitude))
        self.z = z                  # type: float
        self.magnitude = magnitude  # type: float


class VerdictMismatchError(FactorizationError):
    """Raised when a computed verdict table differs from the golden one (the mismatch report)."""

    # CONSTRUCTOR

    def __init__(self, system_name: str, mismatches: Sequence[str]):
        """
        Construct a verdict mismatch error.

        :param system_name: The name of the system whose verdict table was checked.
        :param mismatches:  A human-readable description of each mismatching row.
        """
        super().__init__("Verdict table for {} differs from the golden table:\n  {}".format(
            system_name, "\n  ".join(mismatches)
        ))
        self.system_name = system_name        # type: str
        self.mismatches = list(mismatches)    # type: List[str]


# VERIFIER ERRORS

class GridTooCoarseError(FactorizationError):
    """Raised when a sampling grid is too coarse for the stencil error bound to meet the requested tolerance."""
    pass


class AllPointsNearNodesError(FactorizationError):
    """Raised when every usable point of a grid lies too close to a node of the wavefunction."""
    pass


class PoleTooCloseError(FactorizationError):
    """Raised when a check is asked to evaluate the superpotential too close to one of its poles."""
    pass


class OracleUnavailableError(FactorizationError):
    """Raised when an independent oracle needed for a cross-check cannot be provided."""
    pass


# CLI ERRORS

class ConfigError(FactorizationError):
    """Raised when a run configuration is invalid."""
    pass
