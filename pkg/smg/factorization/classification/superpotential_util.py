import cmath
import numpy as np

from typing import Optional, Tuple

from ..ansatz import AnsatzUtil, Candidate, ZetaPoint
from ..base import PoleAtNodeError
from ..chf import ChfUtil, ECHFKind, EvalPolicy


class SuperpotentialUtil:
    """
    Utility functions that build the superpotential W(z) and the reduced wavefunction u(z) of a candidate.

    .. note::
        With F the function the derivative identity is written for (M, U, or M(1+a-b, 2-b, ζ) for M̃), F₊ its
        shifted partner and γ the matching coefficient, the reduced wavefunction is u = f_γ(z)·F(ζ(z)) and

            W = -d/dz ln u = g_γ(z) + β ζ' F₊/F.

        Differentiating once more with ζF₊' = δF - γF₊ and F' = F - βF₊ gives dW/dz without finite
        differences.
    """

    # CONSTANTS

    DEFAULT_POLE_THRESHOLD = 1e8  # type: float

    # PUBLIC STATIC METHODS

    @staticmethod
    def sample(candidate: Candidate, zs: np.ndarray, *, policy: Optional[EvalPolicy] = None,
               pole_threshold: float = DEFAULT_POLE_THRESHOLD) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Sample the reduced wavefunction and the superpotential of a candidate on a set of points.

        :param candidate:       The candidate.
        :param zs:              The points z.
        :param policy:          The evaluation policy (optional).
        :param pole_threshold:  The |W| above which a point is treated as a node.
        :return:                A tuple (u, W, is_node), in which W is NaN wherever is_node is True.
        """
        zs = np.asarray(zs, dtype=float)
        us = np.empty(len(zs), dtype=complex)
        ws = np.empty(len(zs), dtype=complex)
        is_node = np.zeros(len(zs), dtype=bool)
        for i, z in enumerate(zs):
            us[i], w = SuperpotentialUtil.__evaluate(candidate, z, policy, pole_threshold)
            if w is None:
                ws[i] = complex(np.nan, np.nan)
                is_node[i] = True
            else:
                ws[i] = w
        return us, ws, is_node

    @staticmethod
    def superpotential(candidate: Candidate, z: float, *, policy: Optional[EvalPolicy] = None,
                       pole_threshold: float = DEFAULT_POLE_THRESHOLD) -> complex:
        """
        Evaluate the superpotential W(z) = -d/dz ln u(z) of a candidate.

        :param candidate:           The candidate (whose frame fixes k).
        :param z:                   The point z.
        :param policy:              The evaluation policy (optional).
        :param pole_threshold:      The |W| above which z is treated as a node of the wavefunction.
        :return:                    W(z).
        :raises PoleAtNodeError:    If z is at (or numerically indistinguishable from) a node of u.
        :raises DomainError:        If ζ or dζ/dz vanishes at z.
        """
        point, ratio = SuperpotentialUtil.__ratio(candidate, z, policy, pole_threshold)
        greek = candidate.get_greek()
        g = AnsatzUtil.compute_g(candidate.get_zeta_map(), greek.get_gamma(), z)
        w = g + greek.get_beta() * point.get_dzeta() * ratio
        SuperpotentialUtil.__check_pole(z, w, pole_threshold)
        return w

    @staticmethod
    def superpotential_derivative(candidate: Candidate, z: float, *, policy: Optional[EvalPolicy] = None,
                                  pole_threshold: float = DEFAULT_POLE_THRESHOLD) -> complex:
        """
        Evaluate dW/dz analytically.

        :param candidate:           The candidate.
        :param z:                   The point z.
        :param policy:              The evaluation policy (optional).
        :param pole_threshold:      The |W| above which z is treated as a node of the wavefunction.
        :return:                    dW/dz at z.
        :raises PoleAtNodeError:    If z is at a node of u.
        :raises DomainError:        If ζ or dζ/dz vanishes at z.
        """
        point, ratio = SuperpotentialUtil.__ratio(candidate, z, policy, pole_threshold)
        greek = candidate.get_greek()
        beta, gamma, delta = greek.get_beta(), greek.get_gamma(), greek.get_delta()
        zeta, dzeta, r2 = point.get_zeta(), point.get_dzeta(), point.get_d2_ratio()

        dg = AnsatzUtil.compute_g_derivative(candidate.get_zeta_map(), gamma, z)
        d_ratio = (delta - gamma * ratio) / zeta - ratio * (1 - beta * ratio)
        return dg + beta * (r2 * dzeta * ratio + dzeta * dzeta * d_ratio)

    @staticmethod
    def wavefunction(candidate: Candidate, z: float, *, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate the physical (radial) wavefunction ψ = u / q^((D-1)/2), where q is the physical coordinate.

        :param candidate:       The candidate.
        :param z:               The point z.
        :param policy:          The evaluation policy (optional).
        :return:                ψ at z.
        :raises DomainError:    If ζ or dζ/dz vanishes at z.
        """
        u = SuperpotentialUtil.wavefunction_reduced(candidate, z, policy=policy)
        dimension = candidate.get_system().get_coordinate_type().get_dimension()
        if dimension == 1:
            return u
        q = candidate.get_frame().q_from_z(z)
        return u / q ** ((dimension - 1) / 2)

    @staticmethod
    def wavefunction_reduced(candidate: Candidate, z: float, *, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate the reduced wavefunction u(z) = h(z)·F(a,b,ζ(z)), with the arbitrary constant set to 1.

        :param candidate:       The candidate.
        :param z:               The point z.
        :param policy:          The evaluation policy (optional).
        :return:                u(z).
        :raises DomainError:    If ζ or dζ/dz vanishes at z.
        """
        zm, kind, params = candidate.get_zeta_map(), candidate.get_kind(), candidate.get_params()
        point = zm.evaluate(z)
        f = ChfUtil.eval_F_on_sheet(kind, params, point.get_zeta(), point.get_winding(), policy)
        if kind is ECHFKind.MTILDE:
            f *= cmath.exp((1 - params.get_b()) * point.get_log_zeta())
        return AnsatzUtil.compute_h(zm, params.get_b(), z) * f

    # PRIVATE STATIC METHODS

    @staticmethod
    def __check_pole(z: float, w: complex, pole_threshold: float) -> None:
        if not cmath.isfinite(w) or abs(w) > pole_threshold:
            raise PoleAtNodeError(z, abs(w))

    @staticmethod
    def __ratio(candidate: Candidate, z: float, policy: Optional[EvalPolicy],
                pole_threshold: float) -> Tuple[ZetaPoint, complex]:
        point = candidate.get_zeta_map().evaluate(z)
        kind, params = candidate.get_kind(), candidate.get_params()
        f = ChfUtil.eval_F_on_sheet(kind, params, point.get_zeta(), point.get_winding(), policy)
        if f == 0:
            raise PoleAtNodeError(z, float("inf"))
        f_plus = ChfUtil.eval_F_plus_on_sheet(kind, params, point.get_zeta(), point.get_winding(), policy)
        ratio = f_plus / f
        SuperpotentialUtil.__check_pole(z, candidate.get_greek().get_beta() * point.get_dzeta() * ratio, pole_threshold)
        return point, ratio

    @staticmethod
    def __evaluate(candidate: Candidate, z: float, policy: Optional[EvalPolicy],
                   pole_threshold: float) -> Tuple[complex, Optional[complex]]:
        """
        Evaluate u and W together at a point, sharing the evaluation of F between them.

        :return:    A tuple (u, W), in which W is None if z is at a node of u.
        """
        zm, greek = candidate.get_zeta_map(), candidate.get_greek()
        kind, params = candidate.get_kind(), candidate.get_params()
        point = zm.evaluate(z)
        f = ChfUtil.eval_F_on_sheet(kind, params, point.get_zeta(), point.get_winding(), policy)
        u = AnsatzUtil.compute_f(zm, greek.get_gamma(), z) * f
        if f == 0:
            return u, None

        f_plus = ChfUtil.eval_F_plus_on_sheet(kind, params, point.get_zeta(), point.get_winding(), policy)
        w = AnsatzUtil.compute_g(zm, greek.get_gamma(), z) + greek.get_beta() * point.get_dzeta() * f_plus / f
        if not cmath.isfinite(w) or abs(w) > pole_threshold:
            return u, None
        return u, w
