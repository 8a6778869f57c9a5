import cmath
import numpy as np

from typing import Optional

from ..ansatz import Candidate
from ..base import DomainError, GridTooCoarseError
from ..chf import EvalPolicy
from ..classification import SuperpotentialUtil
from ..systems import ESystemName, SystemCatalog, SystemSpec


class WavefunctionGrid:
    """
    A reduced wavefunction u sampled on a uniform grid of the physical coordinate q, with the constant 𝒞 set to 1
    and the global phase removed (so that u is real wherever the candidate is acceptable).

    .. note::
        The superpotential W may be stored alongside u, with NaN at the nodes of u.
    """

    # CONSTANTS

    MIN_POINTS = 64  # type: int

    # CONSTRUCTOR

    def __init__(self, system: SystemSpec, k: float, q: np.ndarray, u: np.ndarray, *, alpha: Optional[float] = None,
                 case_id: Optional[int] = None, w: Optional[np.ndarray] = None):
        """
        Construct a wavefunction grid.

        :param system:              The system.
        :param k:                   The wavenumber.
        :param q:                   The grid points (uniformly spaced, increasing).
        :param u:                   The reduced wavefunction at the grid points.
        :param alpha:               The shift α of the frame z = κq + α (optional; defaults to the system's α).
        :param case_id:             The case whose wavefunction was sampled, if any.
        :param w:                   The superpotential at the grid points (optional).
        :raises GridTooCoarseError: If there are fewer than MIN_POINTS points.
        :raises DomainError:        If a radial grid includes q <= 0.
        :raises ValueError:         If the grid is not uniform and increasing, or the arrays disagree in length.
        """
        q = np.asarray(q, dtype=float)
        u = np.asarray(u, dtype=complex)
        if len(q) < WavefunctionGrid.MIN_POINTS:
            raise GridTooCoarseError("A wavefunction grid needs at least {} points, got {}".format(
                WavefunctionGrid.MIN_POINTS, len(q)
            ))
        if u.shape != q.shape or (w is not None and np.shape(w) != q.shape):
            raise ValueError("The grid arrays must all have shape {}".format(q.shape))

        spacing = (q[-1] - q[0]) / (len(q) - 1)
        if not spacing > 0.0 or not np.allclose(np.diff(q), spacing, rtol=1e-9, atol=0.0):
            raise ValueError("A wavefunction grid must be uniform and increasing")
        if system.get_coordinate_type().is_radial() and q[0] <= 0.0:
            raise DomainError("A radial grid must exclude the origin, but starts at q = {}".format(q[0]))

        self.__alpha = alpha if alpha is not None else SystemCatalog.alpha(system, k)  # type: float
        self.__case_id = case_id                                                      # type: Optional[int]
        self.__k = k                                                                  # type: float
        self.__q = q                                                                  # type: np.ndarray
        self.__spacing = spacing                                                      # type: float
        self.__system = system                                                        # type: SystemSpec
        self.__u = u                                                                  # type: np.ndarray
        self.__w = np.asarray(w, dtype=complex) if w is not None else None            # type: Optional[np.ndarray]

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "WavefunctionGrid({}, k={}, case={}, q=[{:g}, {:g}], n={})".format(
            self.__system.describe(), self.__k, self.__case_id, self.__q[0], self.__q[-1], len(self.__q)
        )

    # PUBLIC METHODS

    def effective_potential(self) -> np.ndarray:
        """
        Evaluate the system's effective potential at the grid points.

        :return:    V_eff(q) at each point.
        """
        return np.array([SystemCatalog.effective_potential(self.__system, q) for q in self.__q])

    def get_airy_normalization(self) -> Optional[float]:
        """
        Get the delta-normalization constant carried as metadata by linear-potential grids.

        :return:    The constant, or None for the other systems.
        """
        if self.__system.get_name() is ESystemName.LINEAR:
            return SystemCatalog.airy_normalization(self.__system)
        return None

    def get_alpha(self) -> float:
        return self.__alpha

    def get_case_id(self) -> Optional[int]:
        return self.__case_id

    def get_k(self) -> float:
        return self.__k

    def get_n(self) -> int:
        return len(self.__q)

    def get_q(self) -> np.ndarray:
        return self.__q

    def get_spacing(self) -> float:
        return self.__spacing

    def get_system(self) -> SystemSpec:
        return self.__system

    def get_u(self) -> np.ndarray:
        return self.__u

    def get_w(self) -> Optional[np.ndarray]:
        return self.__w

    def get_z(self) -> np.ndarray:
        """
        Get the dimensionless coordinates z = κq + α of the grid points.

        :return:    The z values.
        """
        return SystemCatalog.z_scale(self.__system, self.__k) * self.__q + self.__alpha

    def with_u(self, u: np.ndarray) -> "WavefunctionGrid":
        """
        Make a grid on the same points that carries a different wavefunction (and no superpotential).

        :param u:   The new wavefunction values.
        :return:    The new grid.
        """
        return WavefunctionGrid(self.__system, self.__k, self.__q, u, alpha=self.__alpha, case_id=self.__case_id)

    # PUBLIC STATIC METHODS

    @staticmethod
    def from_candidate(candidate: Candidate, q_min: float, q_max: float, n: int, *,
                       policy: Optional[EvalPolicy] = None) -> "WavefunctionGrid":
        """
        Sample a candidate's reduced wavefunction and superpotential on a uniform grid.

        .. note::
            The global phase is removed by multiplying u by e^(-i arg u) at the point where |u| is largest.

        :param candidate:           The candidate.
        :param q_min:               The first grid point.
        :param q_max:               The last grid point.
        :param n:                   The number of points.
        :param policy:              The evaluation policy (optional).
        :return:                    The grid.
        :raises GridTooCoarseError: If n is less than MIN_POINTS.
        :raises DomainError:        If a grid point is singular for the candidate.
        """
        if n < WavefunctionGrid.MIN_POINTS:
            raise GridTooCoarseError("A wavefunction grid needs at least {} points, got {}".format(
                WavefunctionGrid.MIN_POINTS, n
            ))

        frame = candidate.get_frame()
        q = np.linspace(q_min, q_max, n)
        z = np.array([frame.z_from_q(qi) for qi in q])
        u, w, _ = SuperpotentialUtil.sample(candidate, z, policy=policy)

        reference = int(np.argmax(np.abs(u)))
        u = u * cmath.exp(-1j * cmath.phase(u[reference]))
        return WavefunctionGrid(
            candidate.get_system(), candidate.get_k(), q, u, alpha=frame.get_alpha(),
            case_id=candidate.get_case_id(), w=w
        )

    @staticmethod
    def load(path: str) -> "WavefunctionGrid":
        """
        Load a grid written by GridIO (the format is inferred from the file's extension).

        :param path:    The path to the file.
        :return:        The grid.
        """
        from .grid_io import GridIO
        return GridIO.read(path)
