from .factorization_errors import FactorizationError
from .factorization_errors import AllPointsNearNodesError, BetaUndefinedError, BranchCutAmbiguityError, ConfigError
from .factorization_errors import DomainError, GridTooCoarseError, InvalidBError, NonConvergenceError
from .factorization_errors import OracleUnavailableError, PoleAtNodeError, PoleAtNonPositiveIntegerError
from .factorization_errors import PoleTooCloseError, UnsupportedSystemError, VerdictMismatchError

from .e_sign import ESign
