import cmath

from typing import List

from ..base import DomainError
from ..chf import CHFParams
from .zeta_map import ZetaMap


class AnsatzUtil:
    """
    Utility functions for the ansatz ζ(z): the master constraint that ζ, a and b must satisfy for a system, and the
    functions g(z) and h(z) from which the superpotential and the wavefunction are built.

    .. note::
        The master constraint reads

            (ζ')² [1 + 2(2a-b)/ζ + b(b-2)/ζ²] + 3(ζ''/ζ')² - 2ζ'''/ζ' = 8M/(ħ²κ²) (V_eff(q) - E),

        where primes denote derivatives with respect to z.
    """

    # PUBLIC STATIC METHODS

    @staticmethod
    def compute_f(zm: ZetaMap, gamma: complex, z: complex) -> complex:
        """
        Compute f(z) = e^(-ζ/2) ζ^(γ/2) (dζ/dz)^(-1/2), the prefactor for which g(z) = -d/dz ln[e^ζ f(z)].

        :param zm:              The ansatz.
        :param gamma:           The coefficient γ.
        :param z:               The point z.
        :return:                f(z), with the arbitrary overall constant set to 1.
        :raises DomainError:    If ζ or dζ/dz vanishes at z.
        """
        point = zm.evaluate(z)
        return cmath.exp(-point.get_zeta() / 2 + gamma / 2 * point.get_log_zeta() - point.get_log_dzeta() / 2)

    @staticmethod
    def compute_g(zm: ZetaMap, gamma: complex, z: complex) -> complex:
        """
        Compute g(z) = -(1/2)(1 + γ/ζ) dζ/dz + (1/2)(d²ζ/dz²)/(dζ/dz).

        :param zm:              The ansatz.
        :param gamma:           The coefficient γ.
        :param z:               The point z.
        :return:                g(z).
        :raises DomainError:    If ζ or dζ/dz vanishes at z.
        """
        point = zm.evaluate(z)
        return -(1 + gamma / point.get_zeta()) * point.get_dzeta() / 2 + point.get_d2_ratio() / 2

    @staticmethod
    def compute_g_derivative(zm: ZetaMap, gamma: complex, z: complex) -> complex:
        """
        Compute dg/dz analytically.

        :param zm:              The ansatz.
        :param gamma:           The coefficient γ.
        :param z:               The point z.
        :return:                dg/dz.
        :raises DomainError:    If ζ or dζ/dz vanishes at z.
        """
        point = zm.evaluate(z)
        zeta, dzeta = point.get_zeta(), point.get_dzeta()
        r2, r3 = point.get_d2_ratio(), point.get_d3_ratio()
        log_derivative = dzeta / zeta
        return gamma * log_derivative * log_derivative / 2 - (1 + gamma / zeta) * r2 * dzeta / 2 + (r3 - r2 * r2) / 2

    @staticmethod
    def compute_h(zm: ZetaMap, b: complex, z: complex) -> complex:
        """
        Compute h(z) = e^(-ζ/2) ζ^(b/2) (dζ/dz)^(-1/2), the prefactor of the reduced wavefunction
        u = h(z)·F(a,b,ζ).

        .. note::
            The arbitrary overall constant is set to 1. Powers of ζ and dζ/dz use the continued logarithms of the
            ansatz, so h is continuous along the real z axis.

        :param zm:              The ansatz.
        :param b:               The parameter b.
        :param z:               The point z.
        :return:                h(z).
        :raises DomainError:    If ζ or dζ/dz vanishes at z.
        """
        return AnsatzUtil.compute_f(zm, b, z)

    @staticmethod
    def zeta_residual(zm: ZetaMap, p: CHFParams, z: complex, rhs: complex) -> complex:
        """
        Compute the residual of the master constraint at a point.

        :param zm:              The ansatz.
        :param p:               The parameters (a, b).
        :param z:               The point z.
        :param rhs:             The right-hand side 8M/(ħ²κ²)(V_eff(q) - E) at z.
        :return:                The left-hand side minus the right-hand side.
        :raises DomainError:    If ζ or dζ/dz vanishes at z.
        """
        return sum(AnsatzUtil.zeta_residual_terms(zm, p, z)) - rhs

    @staticmethod
    def zeta_residual_terms(zm: ZetaMap, p: CHFParams, z: complex) -> List[complex]:
        """
        Compute the individual terms of the left-hand side of the master constraint, which set the scale against
        which its residual is judged.

        :param zm:              The ansatz.
        :param p:               The parameters (a, b).
        :param z:               The point z.
        :return:                The terms (ζ')², 2(2a-b)(ζ')²/ζ, b(b-2)(ζ'/ζ)², 3(ζ''/ζ')² and -2ζ'''/ζ'.
        :raises DomainError:    If ζ or dζ/dz vanishes at z.
        """
        a, b = p.get_a(), p.get_b()
        point = zm.evaluate(z)
        zeta, dzeta = point.get_zeta(), point.get_dzeta()
        if zeta == 0:
            raise DomainError("The master constraint is singular at ζ = 0")
        dzeta2 = dzeta * dzeta
        r2 = point.get_d2_ratio()
        return [
            dzeta2,
            2 * (2 * a - b) * dzeta2 / zeta,
            b * (b - 2) * dzeta2 / (zeta * zeta),
            3 * r2 * r2,
            -2 * point.get_d3_ratio()
        ]
