import math

from typing import Dict, List, Optional

from ..base import DomainError, UnsupportedSystemError
from ..chf import ECHFKind
from .classification_window import ClassificationWindow
from .domain_end import DomainEnd, EEndKind
from .e_system_name import ECoordinateType, ESystemName
from .e_verdict_status import EVerdictStatus
from .system_spec import SystemSpec
from .verdict_table import VerdictRow, VerdictTable


class SystemCatalog:
    """
    The physical data of the six systems in the catalog: potentials, energy relation, natural scales and the
    golden verdict tables against which the classifier is checked.

    .. note::
        Every system is reduced to the dimensionless variable z = κq + α, where q is the physical coordinate
        (x, ρ or r) and κ is k for the free particles and hydrogen but k₀ for the linear and Morse potentials.
        The shift α is zero except for the linear potential (and, optionally, the free particle in one dimension).
    """

    # PUBLIC STATIC METHODS

    @staticmethod
    def airy_normalization(s: SystemSpec) -> float:
        """
        Get the delta-normalisation constant N = (2M)^(1/3) / (C^(1/6) ħ^(2/3)) of the linear-potential wavefunction
        N·Ai(z).

        :param s:               The system (must be the linear potential).
        :return:                The normalisation constant.
        :raises UnsupportedSystemError: If the system is not the linear potential.
        """
        SystemCatalog.__require(s, ESystemName.LINEAR, "The Airy normalisation")
        return (2.0 * s.get_mass()) ** (1.0 / 3.0) / (s.get_C() ** (1.0 / 6.0) * s.get_hbar() ** (2.0 / 3.0))

    @staticmethod
    def alpha(s: SystemSpec, k: float) -> float:
        """
        Get the default shift α in z = κq + α for the specified system and wavenumber.

        .. note::
            For the linear potential α = -k₀E/C, which makes the classical turning point z = 0. For every other
            system α = 0.

        :param s:   The system.
        :param k:   The wavenumber.
        :return:    The shift α.
        """
        if s.get_name() is ESystemName.LINEAR:
            return -SystemCatalog.k0(s) * SystemCatalog.energy(s, k) / s.get_C()
        return 0.0

    @staticmethod
    def ansatz_rhs(s: SystemSpec, k: float, z: float, *, alpha: Optional[float] = None) -> float:
        """
        Compute the right-hand side 4·(2M/ħ²κ²)(V_eff(q) - E) of the master constraint at the specified point.

        .. note::
            A quarter of this is the right-hand side W² - dW/dz of the Riccati relation in z.

        :param s:       The system.
        :param k:       The wavenumber.
        :param z:       The dimensionless coordinate.
        :param alpha:   The shift α (optional; defaults to the system's own α).
        :return:        The right-hand side.
        """
        if alpha is None:
            alpha = SystemCatalog.alpha(s, k)
        kappa = SystemCatalog.z_scale(s, k)
        q = SystemCatalog.q_from_z(s, k, z, alpha=alpha)
        scale = 2.0 * s.get_mass() / (s.get_hbar() ** 2 * kappa ** 2)
        return 4.0 * scale * (SystemCatalog.effective_potential(s, q) - SystemCatalog.energy(s, k))

    @staticmethod
    def check_k(s: SystemSpec, k: float) -> None:
        """
        Check that a wavenumber is admissible for the specified system.

        :param s:               The system.
        :param k:               The wavenumber.
        :raises DomainError:    If k is negative or not finite, or zero for a system other than Morse.
        """
        if not math.isfinite(k) or k < 0.0:
            raise DomainError("The wavenumber must be finite and non-negative, got {}".format(k))
        if k == 0.0 and s.get_name() is not ESystemName.MORSE:
            raise DomainError("The wavenumber must be positive for {}".format(s.get_name().get_display_name()))

    @staticmethod
    def classification_window(s: SystemSpec) -> ClassificationWindow:
        """
        Get the interior z-window over which a candidate's superpotential is scanned for reality.

        :param s:   The system.
        :return:    The window.
        """
        z_min, z_max = _WINDOWS[s.get_name()]
        return ClassificationWindow(z_min, z_max)

    @staticmethod
    def default_system(name: ESystemName) -> SystemSpec:
        """
        Make a system with the default parameters used when none are given on the command line.

        :param name:    The system.
        :return:        The system specification.
        """
        if name is ESystemName.FREE2D:
            return SystemSpec(name, m=0)
        elif name is ESystemName.FREE3D:
            return SystemSpec(name, l=0)
        elif name is ESystemName.LINEAR:
            return SystemSpec(name, C=1.0)
        elif name is ESystemName.HYDROGEN:
            return SystemSpec(name, l=0, Z=1.0, a0_tilde=1.0)
        elif name is ESystemName.MORSE:
            return SystemSpec(name, D=1.0, k0=1.0)
        else:
            return SystemSpec(name)

    @staticmethod
    def domain_ends(s: SystemSpec) -> List[DomainEnd]:
        """
        Get the ends of the system's domain in z.

        :param s:   The system.
        :return:    The lower end, followed by the upper end.
        """
        if s.get_coordinate_type().is_radial():
            return [DomainEnd(EEndKind.ORIGIN, 1), DomainEnd(EEndKind.INFINITY, 1)]
        return [DomainEnd(EEndKind.INFINITY, -1), DomainEnd(EEndKind.INFINITY, 1)]

    @staticmethod
    def effective_potential(s: SystemSpec, q: float) -> float:
        """
        Compute the effective potential of the separated radial (or one-dimensional) problem.

        :param s:               The system.
        :param q:               The physical coordinate (x, ρ or r).
        :return:                V_eff(q).
        :raises DomainError:    If q <= 0 for a radial system.
        """
        coordinate = s.get_coordinate_type()
        if coordinate.is_radial() and q <= 0.0:
            raise DomainError("The radial coordinate must be positive, got {}".format(q))

        hbar2_over_2m = s.get_hbar() ** 2 / (2.0 * s.get_mass())
        name = s.get_name()
        if name is ESystemName.LINEAR:
            v = s.get_C() * q
        elif name is ESystemName.HYDROGEN:
            v = -s.get_Z() * s.get_hbar() ** 2 / (s.get_mass() * s.get_a0_tilde() * q)
        elif name is ESystemName.MORSE:
            e = math.exp(-s.get_k0() * q)
            v = s.get_D() * (e * e - 2.0 * e)
        else:
            v = 0.0

        if coordinate is ECoordinateType.PLANE_POLAR:
            m = s.get_m()
            v += hbar2_over_2m * (m * m - 0.25) / (q * q)
        elif coordinate is ECoordinateType.SPHERICAL:
            l = s.get_l()
            v += hbar2_over_2m * l * (l + 1) / (q * q)
        return v

    @staticmethod
    def energy(s: SystemSpec, k: float) -> float:
        """
        Compute the energy E = ħ²k²/2M of the continuum state with wavenumber k.

        :param s:   The system.
        :param k:   The wavenumber.
        :return:    The energy.
        """
        return s.get_hbar() ** 2 * k * k / (2.0 * s.get_mass())

    @staticmethod
    def eta(s: SystemSpec, k: float) -> float:
        """
        Compute the Morse energy group η = k/k₀.

        :param s:   The system (must be Morse).
        :param k:   The wavenumber.
        :return:    η.
        """
        SystemCatalog.__require(s, ESystemName.MORSE, "η")
        return k / s.get_k0()

    @staticmethod
    def expected_verdicts(s: SystemSpec) -> VerdictTable:
        """
        Get the golden verdict table for the specified system.

        :param s:   The system.
        :return:    The verdict table.
        """
        name = s.get_name()
        return VerdictTable(name, _GOLDEN_ROWS[name])

    @staticmethod
    def is_zero_energy_special_case(s: SystemSpec, k: float) -> bool:
        """
        Determine whether the specified wavenumber puts the system into the zero-energy Morse case, in which b = 1 and
        the Kummer function can no longer be used.

        :param s:   The system.
        :param k:   The wavenumber.
        :return:    True, if the system is Morse and k = 0, or False otherwise.
        """
        return s.get_name() is ESystemName.MORSE and k == 0.0

    @staticmethod
    def k0(s: SystemSpec) -> float:
        """
        Get the potential-derived wavenumber k₀: (2MC/ħ²)^(1/3) for the linear potential, or the Morse range
        parameter.

        :param s:               The system.
        :return:                k₀.
        :raises DomainError:    If the system has no k₀.
        """
        name = s.get_name()
        if name is ESystemName.LINEAR:
            return (2.0 * s.get_mass() * s.get_C() / s.get_hbar() ** 2) ** (1.0 / 3.0)
        elif name is ESystemName.MORSE:
            return s.get_k0()
        raise DomainError("{} has no potential-derived wavenumber k0".format(name.get_display_name()))

    @staticmethod
    def q_from_z(s: SystemSpec, k: float, z: float, *, alpha: Optional[float] = None) -> float:
        """
        Convert a dimensionless coordinate z into the physical coordinate q = (z - α)/κ.

        :param s:       The system.
        :param k:       The wavenumber.
        :param z:       The dimensionless coordinate.
        :param alpha:   The shift α (optional; defaults to the system's own α).
        :return:        q.
        """
        if alpha is None:
            alpha = SystemCatalog.alpha(s, k)
        return (z - alpha) / SystemCatalog.z_scale(s, k)

    @staticmethod
    def xi(s: SystemSpec) -> float:
        """
        Compute the Morse depth group ξ = √(2MD)/(ħk₀).

        :param s:   The system (must be Morse).
        :return:    ξ.
        """
        SystemCatalog.__require(s, ESystemName.MORSE, "ξ")
        return math.sqrt(2.0 * s.get_mass() * s.get_D()) / (s.get_hbar() * s.get_k0())

    @staticmethod
    def z_from_q(s: SystemSpec, k: float, q: float, *, alpha: Optional[float] = None) -> float:
        """
        Convert a physical coordinate q into the dimensionless coordinate z = κq + α.

        :param s:       The system.
        :param k:       The wavenumber.
        :param q:       The physical coordinate.
        :param alpha:   The shift α (optional; defaults to the system's own α).
        :return:        z.
        """
        if alpha is None:
            alpha = SystemCatalog.alpha(s, k)
        return SystemCatalog.z_scale(s, k) * q + alpha

    @staticmethod
    def z_scale(s: SystemSpec, k: float) -> float:
        """
        Get the inverse length κ that makes the coordinate dimensionless: k₀ for the linear and Morse potentials, and
        k otherwise.

        :param s:   The system.
        :param k:   The wavenumber.
        :return:    κ.
        """
        if s.get_name() in (ESystemName.LINEAR, ESystemName.MORSE):
            return SystemCatalog.k0(s)
        return k

    # PRIVATE STATIC METHODS

    @staticmethod
    def __require(s: SystemSpec, name: ESystemName, what: str) -> None:
        if s.get_name() is not name:
            raise UnsupportedSystemError("{} is only defined for {}, not {}".format(
                what, name.get_display_name(), s.get_name().get_display_name()
            ))


_ACCEPTED = EVerdictStatus.ACCEPTED
_IMAGINARY = EVerdictStatus.REJECTED_IMAGINARY_W
_ORIGIN = EVerdictStatus.REJECTED_DIVERGES_AT_ORIGIN
_INFINITY = EVerdictStatus.REJECTED_DIVERGES_AT_INFINITY

_M, _U, _MT = ECHFKind.M, ECHFKind.U, ECHFKind.MTILDE

_LINEAR_DIVERGES = "ψ(x) Diverges Exponentially as x → +∞"
_MORSE_DIVERGES = "ψ(x) → ∞ as x → -∞"
_FREE3D_ORIGIN = "rψ_r(r) ↛ 0 as r → 0"
_HYDROGEN_MTILDE_NOTE = (
    "With b = -2l the function M̃ equals ζ^(1+2l) M(1+l±iZ/kã₀, 2+2l, ζ), so u is the regular solution of"
    " items 1 and 3 and vanishes as r^(l+1) at the origin; the printed divergence does not follow from the printed parameters."
)

_GOLDEN_ROWS = {
    ESystemName.FREE1D: [
        VerdictRow(1, "0", "0", "±2i", _MT, _ACCEPTED, "Usual Solutions"),
        VerdictRow(2, "0", "0", "±2i", _U, _IMAGINARY, "Imaginary Superpotential"),
        VerdictRow(3, "1", "2", "±2i", _M, _ACCEPTED, "Usual Solutions"),
        VerdictRow(4, "1", "2", "±2i", _U, _IMAGINARY, "Imaginary Superpotential")
    ],
    ESystemName.FREE2D: [
        VerdictRow(1, "1/2-|m|", "1-2|m|", "±2i", _MT, _ACCEPTED, "Usual Solution for m ≤ 0",
                   note="M̃ is written for negative m, but with |m| it is the regular solution for every m."),
        VerdictRow(2, "1/2-|m|", "1-2|m|", "±2i", _U, _IMAGINARY, "Imaginary Superpotential"),
        VerdictRow(3, "1/2+|m|", "1+2|m|", "±2i", _M, _ACCEPTED, "Usual Solution for m ≥ 0",
                   note="M is written for non-negative m, but with |m| it is the regular solution for every m."),
        VerdictRow(4, "1/2+|m|", "1+2|m|", "±2i", _U, _IMAGINARY, "Imaginary Superpotential")
    ],
    ESystemName.FREE3D: [
        VerdictRow(1, "-l", "-2l", "±2i", _MT, _ACCEPTED, "Usual Solution"),
        VerdictRow(2, "-l", "-2l", "±2i", _U, _ORIGIN, _FREE3D_ORIGIN),
        VerdictRow(3, "l+1", "2(l+1)", "±2i", _M, _ACCEPTED, "Usual Solutions"),
        VerdictRow(4, "l+1", "2(l+1)", "±2i", _U, _ORIGIN, _FREE3D_ORIGIN)
    ],
    ESystemName.LINEAR: [
        VerdictRow(1, "1/6", "1/3", "4/3", _M, _INFINITY, _LINEAR_DIVERGES, d=1.5),
        VerdictRow(2, "1/6", "1/3", "-4/3", _M, _INFINITY, _LINEAR_DIVERGES, d=1.5),
        VerdictRow(3, "1/6", "1/3", "4/3", _U, _ACCEPTED, "Usual Solution", d=1.5),
        VerdictRow(4, "1/6", "1/3", "-4/3", _U, _INFINITY, _LINEAR_DIVERGES, d=1.5),
        VerdictRow(5, "5/6", "5/3", "4/3", _M, _INFINITY, _LINEAR_DIVERGES, d=1.5),
        VerdictRow(6, "5/6", "5/3", "-4/3", _M, _INFINITY, _LINEAR_DIVERGES, d=1.5),
        VerdictRow(7, "5/6", "5/3", "4/3", _U, _ACCEPTED, "Usual Solution", d=1.5),
        VerdictRow(8, "5/6", "5/3", "-4/3", _U, _INFINITY, _LINEAR_DIVERGES, d=1.5)
    ],
    ESystemName.HYDROGEN: [
        VerdictRow(1, "l+1+iZ/kã₀", "2(l+1)", "+2i", _M, _ACCEPTED, "Usual Solution"),
        VerdictRow(2, "l+1+iZ/kã₀", "2(l+1)", "+2i", _U, _ORIGIN, "ψ_{k,r,0}(r) → ∞ as r → 0"),
        VerdictRow(3, "l+1-iZ/kã₀", "2(l+1)", "-2i", _M, _ACCEPTED, "Usual Solution"),
        VerdictRow(4, "l+1-iZ/kã₀", "2(l+1)", "-2i", _U, _ORIGIN, "ψ_{k,r,0}(r) → -∞ as r → 0"),
        VerdictRow(5, "-l+iZ/kã₀", "-2l", "+2i", _MT, _ORIGIN, "ψ_{k,r,l}(r) → ∞ as r → 0",
                   disputed=True, note=_HYDROGEN_MTILDE_NOTE),
        VerdictRow(6, "-l+iZ/kã₀", "-2l", "+2i", _U, _ORIGIN, "ψ_{k,r,0}(r) → ∞ as r → 0"),
        VerdictRow(7, "-l-iZ/kã₀", "-2l", "-2i", _MT, _ORIGIN, "ψ_{k,r,l}(r) → ∞ as r → 0",
                   disputed=True, note=_HYDROGEN_MTILDE_NOTE),
        VerdictRow(8, "-l-iZ/kã₀", "-2l", "-2i", _U, _ORIGIN, "ψ_{k,r,0}(r) → ∞ as r → 0")
    ],
    ESystemName.MORSE: [
        VerdictRow(1, "1/2-ξ+iη", "1+2iη", "+2ξ", _M, _INFINITY, _MORSE_DIVERGES),
        VerdictRow(2, "1/2-ξ+iη", "1+2iη", "+2ξ", _U, _ACCEPTED, "Usual Solution"),
        VerdictRow(3, "1/2+ξ+iη", "1+2iη", "-2ξ", _M, _INFINITY, _MORSE_DIVERGES),
        VerdictRow(4, "1/2+ξ+iη", "1+2iη", "-2ξ", _U, _INFINITY, _MORSE_DIVERGES),
        VerdictRow(5, "1/2-ξ-iη", "1-2iη", "+2ξ", _M, _INFINITY, _MORSE_DIVERGES),
        VerdictRow(6, "1/2-ξ-iη", "1-2iη", "+2ξ", _U, _ACCEPTED, "Usual Solution"),
        VerdictRow(7, "1/2+ξ-iη", "1-2iη", "-2ξ", _M, _INFINITY, _MORSE_DIVERGES),
        VerdictRow(8, "1/2+ξ-iη", "1-2iη", "-2ξ", _U, _INFINITY, _MORSE_DIVERGES)
    ]
}  # type: Dict[ESystemName, List[VerdictRow]]

_WINDOWS = {
    ESystemName.FREE1D: (-9.7, 9.9),
    ESystemName.FREE2D: (0.3, 20.0),
    ESystemName.FREE3D: (0.3, 20.0),
    ESystemName.LINEAR: (-8.0, 4.0),
    ESystemName.HYDROGEN: (0.1, 20.0),
    ESystemName.MORSE: (-1.5, 4.0)
}
