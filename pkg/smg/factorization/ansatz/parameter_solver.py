import cmath
import logging

from typing import Dict, List, Optional, Tuple

from ..base import ESign, UnsupportedSystemError
from ..chf import CHFParams, ECHFKind
from ..systems import ESystemName, SystemCatalog, SystemSpec
from .candidate import Candidate
from .e_zeta_family import EZetaFamily
from .frame_offset import FrameOffset
from .zeta_map import ZetaMap


logger = logging.getLogger(__name__)


class ParameterSolver:
    """
    Solves the master constraint in closed form for each system in the catalog.

    .. note::
        Each system's right-hand side is a short sum of powers (or exponentials) of z, and matching coefficients
        fixes c, b and a for each ansatz family:

        - ζ = cz with rhs = A + B/z + C/z²:          c = ±√A,      b = 1 ± √(1+C),  2a - b = B/(2c)
        - ζ = cz^d with rhs = Az^(2d-2):              c = ±√A/d,    b = 1 ± 1/d,     2a - b = 0
        - ζ = c·e^(-z) with rhs = Ae^(-2z) + Be^(-z) + C: c = ±√A,  b = 1 ± √C,      2a - b = B/(2c)

        The candidates are emitted in the order of the system's verdict table.
    """

    # PUBLIC STATIC METHODS

    @staticmethod
    def solve_parameters(system: SystemSpec, k: float, alpha: Optional[float] = None) -> List[Candidate]:
        """
        Enumerate every candidate solution for a system at the specified wavenumber.

        :param system:                  The system.
        :param k:                       The wavenumber (k = 0 is allowed only for Morse).
        :param alpha:                   The shift α (optional; only the free particle in one dimension admits a
                                        non-default value).
        :return:                        The candidates, in verdict-table order.
        :raises DomainError:            If k is not admissible for the system.
        :raises UnsupportedSystemError: If the system is not in the catalog.
        :raises ValueError:             If α is given for a system whose α is fixed.
        """
        SystemCatalog.check_k(system, k)
        name = system.get_name()
        if name not in _LAYOUTS:
            raise UnsupportedSystemError("No ansatz reduction is known for {}".format(name))

        default_alpha = SystemCatalog.alpha(system, k)
        if alpha is None:
            alpha = default_alpha
        elif name is not ESystemName.FREE1D and alpha != default_alpha:
            raise ValueError("The shift α is fixed for {} (α = {}), got {}".format(
                name.get_display_name(), default_alpha, alpha
            ))

        k0 = SystemCatalog.k0(system) if name in (ESystemName.LINEAR, ESystemName.MORSE) else None
        frame = FrameOffset(alpha, k, k0)

        candidates = []  # type: List[Candidate]
        for case_id, (sign_b, sign_c, kind) in enumerate(_LAYOUTS[name], start=1):
            params, zeta_map = ParameterSolver.__solve_row(system, k, sign_b, sign_c)
            candidates.append(Candidate(system, case_id, params, zeta_map, frame, kind, sign_b=sign_b, sign_c=sign_c))

        logger.debug("Enumerated %d candidates for %s at k = %g", len(candidates), system.describe(), k)
        return candidates

    # PRIVATE STATIC METHODS

    @staticmethod
    def __solve_row(system: SystemSpec, k: float, sign_b: ESign, sign_c: ESign) -> Tuple[CHFParams, ZetaMap]:
        name = system.get_name()
        sb, sc = sign_b.value, sign_c.value

        if name is ESystemName.LINEAR:
            # rhs = 4z, so ζ = cz^(3/2).
            d = 1.5
            c = sc * cmath.sqrt(4.0) / d
            b = 1 + sb / d
            return CHFParams(b / 2, b), ZetaMap(EZetaFamily.POWER, c, d)

        if name is ESystemName.MORSE:
            xi = SystemCatalog.xi(system)
            eta = SystemCatalog.eta(system, k)
            big_a, big_b, big_c = 4 * xi * xi, -8 * xi * xi, -4 * eta * eta
            c = sc * cmath.sqrt(big_a)
            b = 1 + sb * cmath.sqrt(big_c)
            return CHFParams((b + big_b / (2 * c)) / 2, b), ZetaMap(EZetaFamily.EXPONENTIAL, c)

        big_a, big_b, big_c = ParameterSolver.__linear_rhs_coefficients(system, k)
        c = sc * cmath.sqrt(big_a)
        b = 1 + sb * cmath.sqrt(1 + big_c)
        return CHFParams((b + big_b / (2 * c)) / 2, b), ZetaMap(EZetaFamily.LINEAR, c)

    @staticmethod
    def __linear_rhs_coefficients(system: SystemSpec, k: float) -> Tuple[float, float, float]:
        """
        Get the coefficients (A, B, C) of rhs = A + B/z + C/z² for the systems solved with a linear ansatz.

        :return:    The coefficients.
        """
        name = system.get_name()
        big_b = 0.0
        big_c = 0.0
        if name is ESystemName.FREE2D:
            m = system.get_m()
            big_c = 4.0 * m * m - 1.0
        elif name in (ESystemName.FREE3D, ESystemName.HYDROGEN):
            l = system.get_l()
            big_c = 4.0 * l * (l + 1)
        if name is ESystemName.HYDROGEN:
            big_b = -8.0 * system.get_Z() / (system.get_a0_tilde() * k)
        return -4.0, big_b, big_c


_P, _N = ESign.PLUS, ESign.MINUS
_M, _U, _MT = ECHFKind.M, ECHFKind.U, ECHFKind.MTILDE

# (sign of b, sign of c, kind) for each row of a system's verdict table.
_FREE_LAYOUT = [(_N, _P, _MT), (_N, _P, _U), (_P, _P, _M), (_P, _P, _U)]

_LAYOUTS = {
    ESystemName.FREE1D: _FREE_LAYOUT,
    ESystemName.FREE2D: _FREE_LAYOUT,
    ESystemName.FREE3D: _FREE_LAYOUT,
    ESystemName.LINEAR: [
        (_N, _P, _M), (_N, _N, _M), (_N, _P, _U), (_N, _N, _U),
        (_P, _P, _M), (_P, _N, _M), (_P, _P, _U), (_P, _N, _U)
    ],
    ESystemName.HYDROGEN: [
        (_P, _P, _M), (_P, _P, _U), (_P, _N, _M), (_P, _N, _U),
        (_N, _P, _MT), (_N, _P, _U), (_N, _N, _MT), (_N, _N, _U)
    ],
    ESystemName.MORSE: [
        (_P, _P, _M), (_P, _P, _U), (_P, _N, _M), (_P, _N, _U),
        (_N, _P, _M), (_N, _P, _U), (_N, _N, _M), (_N, _N, _U)
    ]
}  # type: Dict[ESystemName, List[Tuple[ESign, ESign, ECHFKind]]]
