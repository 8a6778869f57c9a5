import cmath
import logging
import math
import numpy as np

from typing import Dict, List, Optional, Sequence, Tuple

from ..ansatz import Candidate, ParameterSolver
from ..base import AllPointsNearNodesError, DomainError, GridTooCoarseError, OracleUnavailableError
from ..base import PoleAtNodeError, PoleTooCloseError, UnsupportedSystemError
from ..chf import CHFParams, ChfUtil, ECHFKind, GammaUtil
from ..classification import BoundaryAnalysis, SuperpotentialUtil, Verdict
from ..systems import ESystemName, EVerdictStatus, SystemCatalog, SystemSpec
from .independent_oracles import IndependentOracles
from .residual_report import ResidualReport
from .stencil_util import StencilUtil
from .verifier_settings import VerifierSettings
from .wavefunction_grid import WavefunctionGrid


logger = logging.getLogger(__name__)


class NumericalVerifier:
    """
    Confirms numerically what the classifier decides analytically: that accepted wavefunctions solve the Schrödinger
    equation, that their superpotentials satisfy the subsidiary condition and the Riccati relation, that they agree
    with independently computed closed forms, and that rejected candidates really do misbehave.
    """

    # CONSTANTS

    # The tolerance on the leading-order Airy asymptotic forms, whose first corrections are of order 1e-2.
    AIRY_ASYMPTOTIC_TOLERANCE = 2e-2  # type: float

    # The distance from 0 and π at which the ladder-chain grid starts and ends.
    CHAIN_MARGIN = 0.05  # type: float

    CHAIN_POINTS = 8192  # type: int

    # The step in z beyond the end of the classification window over which a growth rate at infinity is measured.
    GROWTH_STEP = 1.0  # type: float

    # The largest term-to-sum ratio accepted when comparing the two-term M combination with the Tricomi function.
    MAX_CANCELLATION = 1e5  # type: float

    MAX_CHAIN_INDEX = 6  # type: int

    # Points where |u| is below this fraction of its maximum are treated as lying near a node.
    NEAR_ZERO_FRACTION = 1e-2  # type: float

    # Points where an oracle is below this fraction of its maximum are left out of ratio comparisons.
    ORACLE_FLOOR = 5e-2  # type: float

    # The two values of z at which the growth exponent of ψ at a radial origin is measured.
    ORIGIN_PROBES = (1e-4, 1e-3)  # type: Tuple[float, float]

    ZERO_ENERGY_RATE_TOLERANCE = 1e-2  # type: float

    # CONSTRUCTOR

    def __init__(self, settings: Optional[VerifierSettings] = None):
        """
        Construct a numerical verifier.

        :param settings:    The verifier settings (optional).
        """
        self.__settings = settings if settings is not None else VerifierSettings()  # type: VerifierSettings

    # PUBLIC METHODS

    def airy_asymptotics(self, system: SystemSpec, k: float) -> List[ResidualReport]:
        """
        Check the accepted linear-potential wavefunction against the leading asymptotic forms of Ai.

        .. note::
            The wavefunction is scaled to match Ai at z = 1. On z ∈ [4, 8] the decaying form
            Ai(z)·2√π z^(1/4) e^((2/3)z^(3/2)) → 1 is checked; on z ∈ [-40, -20] the envelope
            √(Ai² + Ai'²/|z|)·|z|^(1/4) → π^(-1/2) of the oscillating form is checked.

        :param system:                  The system (must be the linear potential).
        :param k:                       The wavenumber.
        :return:                        The two reports.
        :raises UnsupportedSystemError: If the system is not the linear potential.
        """
        NumericalVerifier.__require(system, (ESystemName.LINEAR,), "The Airy asymptotic check")
        candidate = self.__candidate(system, k, 7)
        policy = self.__settings.get_policy()
        scale = IndependentOracles.airy_ai(1.0) / SuperpotentialUtil.wavefunction_reduced(candidate, 1.0, policy=policy)

        n = self.__settings.get_oracle_points()
        decaying = np.linspace(4.0, 8.0, n)
        ratios = np.array([
            scale * SuperpotentialUtil.wavefunction_reduced(candidate, z, policy=policy) * 2 * math.sqrt(math.pi)
            * z ** 0.25 * math.exp(2.0 / 3.0 * z ** 1.5)
            for z in decaying
        ])
        i = int(np.argmax(np.abs(ratios - 1)))
        decaying_report = ResidualReport(
            "airy_decaying_form", abs(ratios[i] - 1), decaying[i], self.AIRY_ASYMPTOTIC_TOLERANCE,
            detail="u·2√π z^(1/4) e^((2/3)z^(3/2)) → 1 on z ∈ [4, 8]"
        )

        oscillating = np.linspace(-40.0, -20.0, n)
        envelopes = np.empty(n)
        for j, z in enumerate(oscillating):
            u = scale * SuperpotentialUtil.wavefunction_reduced(candidate, z, policy=policy)
            du = -SuperpotentialUtil.superpotential(candidate, z, policy=policy) * u
            envelopes[j] = math.sqrt(abs(u) ** 2 + abs(du) ** 2 / abs(z)) * abs(z) ** 0.25 * math.sqrt(math.pi)
        j = int(np.argmax(np.abs(envelopes - 1)))
        oscillating_report = ResidualReport(
            "airy_oscillating_envelope", abs(envelopes[j] - 1), oscillating[j], self.AIRY_ASYMPTOTIC_TOLERANCE,
            detail="envelope·√π → 1 on z ∈ [-40, -20]; N·Ai has envelope N/√π with N = {:.6g}".format(
                SystemCatalog.airy_normalization(system)
            )
        )
        return [decaying_report, oscillating_report]

    def closed_form_crosschecks(self, system: SystemSpec, k: float) -> List[ResidualReport]:
        """
        Check a system's accepted wavefunctions against closed forms computed independently of the kernel.

        :param system:                  The system.
        :param k:                       The wavenumber.
        :return:                        One report per identity checked.
        :raises OracleUnavailableError: If the system has no independent closed form (hydrogen).
        """
        name = system.get_name()
        tolerance = self.__settings.get_oracle_tolerance()
        if name is ESystemName.HYDROGEN:
            raise OracleUnavailableError("No independent oracle is available for the hydrogen continuum")
        elif name is ESystemName.MORSE:
            return self.morse_u_form(system, k)

        reports = []  # type: List[ResidualReport]
        if name is ESystemName.FREE1D:
            reports.append(self.__sin_identity())
        elif name is ESystemName.FREE2D:
            reports += self.__mirrored_m(system, k)

        z_min, z_max = NumericalVerifier.verification_window(system)
        zs = np.linspace(z_min, z_max, self.__settings.get_oracle_points())
        oracle = IndependentOracles.reduced_wavefunction(system, zs)
        for case_id in SystemCatalog.expected_verdicts(system).get_accepted_case_ids():
            u = self.__sample_u(self.__candidate(system, k, case_id), zs)
            reports.append(NumericalVerifier.__ratio_report(
                "oracle_ratio[case {}]".format(case_id), u, oracle, zs, tolerance
            ))

        if name is ESystemName.LINEAR:
            zs = np.linspace(0.5, 4.0, self.__settings.get_oracle_points())
            u = self.__sample_u(self.__candidate(system, k, 3), zs)
            reports.append(NumericalVerifier.__ratio_report(
                "modified_bessel_route[case 3]", u, IndependentOracles.airy_via_modified_bessel(zs), zs, tolerance
            ))
            reports += self.airy_asymptotics(system, k)
        return reports

    def confirm_rejection(self, candidate: Candidate, status: EVerdictStatus, verdict: Verdict) -> ResidualReport:
        """
        Measure numerically the evidence for rejecting a candidate for the specified reason.

        .. note::
            The residual of the report is the evidence itself (the largest |Im W|, or a growth exponent), judged
            against the growth tolerance. A confirmed rejection therefore *fails* its tolerance, and the check is
            recorded as one that is expected to fail.

        :param candidate:   The candidate.
        :param status:      The rejection reason to confirm.
        :param verdict:     The classifier's verdict on the candidate.
        :return:            The report.
        :raises ValueError: If the status is not a rejection.
        """
        growth_tolerance = self.__settings.get_growth_tolerance()
        if status is EVerdictStatus.REJECTED_IMAGINARY_W:
            evidence, where = self.__imaginary_evidence(candidate)
            detail = "largest |Im W| in the classification window"
        elif status is EVerdictStatus.REJECTED_DIVERGES_AT_ORIGIN:
            evidence, where = self.__origin_evidence(candidate)
            detail = "growth exponent of |ψ| as z → 0, between z = {:g} and {:g}".format(*self.ORIGIN_PROBES)
        elif status is EVerdictStatus.REJECTED_DIVERGES_AT_INFINITY:
            evidence, where, detail = self.__infinity_evidence(candidate, verdict)
        else:
            raise ValueError("{} is not a rejection".format(status.value))

        return ResidualReport(
            "rejection[{}]".format(status.name.lower()), evidence, where, growth_tolerance,
            detail=detail + " (expected to exceed the tolerance)"
        )

    def duplicate_superpotentials(self, system: SystemSpec, k: float) -> ResidualReport:
        """
        Check that the two accepted cases of a free particle (cases 1 and 3) have the same superpotential.

        :param system:                  The system (a free particle).
        :param k:                       The wavenumber.
        :return:                        The report.
        :raises UnsupportedSystemError: If the system is not a free particle.
        """
        NumericalVerifier.__require(
            system, (ESystemName.FREE1D, ESystemName.FREE2D, ESystemName.FREE3D), "The duplicate-case check"
        )
        first, second = self.__candidate(system, k, 1), self.__candidate(system, k, 3)

        worst, where = 0.0, math.nan
        for z in self.__check_points(system):
            try:
                w1, w3 = self.__superpotential(first, z), self.__superpotential(second, z)
            except PoleAtNodeError:
                continue
            residual = abs(w1 - w3) / max(1.0, abs(w1))
            if residual > worst:
                worst, where = residual, z
        return ResidualReport(
            "duplicate_superpotential[1 vs 3]", worst, where, self.__settings.get_reality_tolerance()
        )

    def get_settings(self) -> VerifierSettings:
        return self.__settings

    def grid_for(self, candidate: Candidate) -> WavefunctionGrid:
        """
        Sample a candidate on the verification window of its system.

        :param candidate:   The candidate.
        :return:            The grid.
        """
        frame = candidate.get_frame()
        z_min, z_max = NumericalVerifier.verification_window(candidate.get_system())
        return WavefunctionGrid.from_candidate(
            candidate, frame.q_from_z(z_min), frame.q_from_z(z_max), self.__settings.get_grid_n(),
            policy=self.__settings.get_policy()
        )

    def hydrogen_conjugation(self, system: SystemSpec, k: float) -> ResidualReport:
        """
        Check that the hydrogen wavefunction of item 3 (the (-) sign choice) is the complex conjugate of that of
        item 1, once each is divided by its value at a common reference point.

        :param system:                  The system (must be hydrogen).
        :param k:                       The wavenumber.
        :return:                        The report.
        :raises UnsupportedSystemError: If the system is not hydrogen.
        """
        NumericalVerifier.__require(system, (ESystemName.HYDROGEN,), "The conjugation check")
        z_min, z_max = NumericalVerifier.verification_window(system)
        zs = np.linspace(z_min, z_max, self.__settings.get_oracle_points())
        plus = self.__sample_u(self.__candidate(system, k, 1), zs)
        minus = self.__sample_u(self.__candidate(system, k, 3), zs)

        reference = int(np.argmax(np.abs(plus)))
        plus, minus = plus / plus[reference], minus / minus[reference]
        deviations = np.abs(plus - np.conj(minus)) / np.max(np.abs(plus))
        i = int(np.argmax(deviations))
        return ResidualReport("conjugation[1 vs 3]", deviations[i], zs[i], self.__settings.get_reality_tolerance())

    def ladder_chain_1d(self, j: int, k: float, zs: Optional[np.ndarray] = None) -> ResidualReport:
        """
        Build the j'th excited free-particle state by applying the raising operators of the factorization chain to the
        ground state sin^(j+1) z of the j'th auxiliary Hamiltonian.

        .. note::
            The auxiliary Hamiltonians have superpotentials W_j = -(j+1) cot z, with wavenumbers k_j = (j+1)k, and
            A†_j = -d/dz + W_j. The result of A†_0 ... A†_(j-1) sin^(j+1) z is compared with sin((j+1)z) through
            their normalised inner product; the report holds 1 - |corr|.

        :param j:                   The index of the state, in [0, MAX_CHAIN_INDEX].
        :param k:                   The wavenumber of the chain's first Hamiltonian.
        :param zs:                  The uniformly spaced points (optional; defaults to CHAIN_POINTS points in (0, π)).
        :return:                    The report.
        :raises GridTooCoarseError: If too few points would remain after the stencils have trimmed the ends.
        :raises ValueError:         If j is out of range.
        """
        if not 0 <= j <= self.MAX_CHAIN_INDEX:
            raise ValueError("The chain index must be in [0, {}], got {}".format(self.MAX_CHAIN_INDEX, j))
        if zs is None:
            zs = np.linspace(self.CHAIN_MARGIN, math.pi - self.CHAIN_MARGIN, self.CHAIN_POINTS)
        zs = np.asarray(zs, dtype=float)
        if len(zs) - 4 * j < WavefunctionGrid.MIN_POINTS:
            raise GridTooCoarseError("The chain for j = {} needs at least {} points, got {}".format(
                j, WavefunctionGrid.MIN_POINTS + 4 * j, len(zs)
            ))

        h = (zs[-1] - zs[0]) / (len(zs) - 1)
        phi = np.sin(zs) ** (j + 1)
        z = zs
        for level in range(j - 1, -1, -1):
            derivative = StencilUtil.first_derivative(phi, h)
            z = StencilUtil.interior(z)
            phi = -derivative - (level + 1) * StencilUtil.interior(phi) / np.tan(z)

        target = np.sin((j + 1) * z)
        corr = abs(np.dot(phi, target)) / (np.linalg.norm(phi) * np.linalg.norm(target))
        free = SystemSpec(ESystemName.FREE1D)
        return ResidualReport(
            "ladder_chain[j={}]".format(j), 1.0 - corr, math.nan, self.__settings.get_tolerance(),
            detail="k_j = {:g}, E_j = {:g}".format((j + 1) * k, SystemCatalog.energy(free, (j + 1) * k))
        )

    def morse_reality(self, system: SystemSpec, k: float) -> List[ResidualReport]:
        """
        Check that the accepted Morse wavefunctions (items 2 and 6) are real once their global phase is removed.

        :param system:                  The system (must be Morse).
        :param k:                       The wavenumber.
        :return:                        One report per accepted item.
        :raises UnsupportedSystemError: If the system is not Morse.
        """
        NumericalVerifier.__require(system, (ESystemName.MORSE,), "The Morse reality check")
        z_min, z_max = NumericalVerifier.verification_window(system)
        zs = np.linspace(z_min, z_max, self.__settings.get_oracle_points())

        reports = []  # type: List[ResidualReport]
        for item in SystemCatalog.expected_verdicts(system).get_accepted_case_ids():
            u = self.__sample_u(self.__candidate(system, k, item), zs)
            u = u * cmath.exp(-1j * cmath.phase(u[int(np.argmax(np.abs(u)))]))
            imaginary = np.abs(u.imag) / np.max(np.abs(u))
            i = int(np.argmax(imaginary))
            reports.append(ResidualReport(
                "reality[item {}]".format(item), imaginary[i], zs[i], self.__settings.get_reality_tolerance()
            ))
        return reports

    def morse_u_form(self, system: SystemSpec, k: float) -> List[ResidualReport]:
        """
        Compare the Tricomi function of each accepted Morse item, as evaluated by the kernel and as written as the
        two-term combination of Kummer functions, with mpmath's own evaluation of it.

        .. note::
            Points at which the two Kummer terms cancel by more than MAX_CANCELLATION are left out of the combination
            comparison. At zero energy b = 1 and the combination does not exist, so only the kernel is compared.

        :param system:                  The system (must be Morse).
        :param k:                       The wavenumber.
        :return:                        One report per accepted item.
        :raises UnsupportedSystemError: If the system is not Morse.
        """
        NumericalVerifier.__require(system, (ESystemName.MORSE,), "The Tricomi-form check")
        policy = self.__settings.get_policy()
        z_min, z_max = NumericalVerifier.verification_window(system)
        zs = np.linspace(z_min, z_max, self.__settings.get_oracle_points())

        reports = []  # type: List[ResidualReport]
        for item in SystemCatalog.expected_verdicts(system).get_accepted_case_ids():
            candidate = self.__candidate(system, k, item)
            params = candidate.get_params()
            a, b = params.get_a(), params.get_b()
            combine = not GammaUtil.is_integer(b)

            worst, where, skipped = 0.0, math.nan, 0
            for z in zs:
                zeta = candidate.get_zeta_map().evaluate(z).get_zeta()
                reference = IndependentOracles.tricomi_u(a, b, zeta)
                residual = abs(ChfUtil.eval_U(params, zeta, policy) - reference)
                if combine:
                    first = GammaUtil.gamma(1 - b) * GammaUtil.rgamma(a - b + 1) * ChfUtil.eval_M(params, zeta, policy)
                    second = GammaUtil.gamma(b - 1) * GammaUtil.rgamma(a) * ChfUtil.principal_power(zeta, 1 - b) \
                        * ChfUtil.eval_M(CHFParams(a - b + 1, 2 - b), zeta, policy)
                    combination = first + second
                    if max(abs(first), abs(second)) <= self.MAX_CANCELLATION * abs(combination):
                        residual = max(residual, abs(combination - reference))
                    else:
                        skipped += 1
                residual /= abs(reference)
                if residual > worst:
                    worst, where = residual, z

            reports.append(ResidualReport(
                "tricomi_form[item {}]".format(item), worst, where, self.__settings.get_oracle_tolerance(),
                detail="combination skipped at {} of {} points".format(skipped, len(zs)) if combine
                else "b = 1: kernel against mpmath only"
            ))
        return reports

    def plane_polar_chain(self, system: SystemSpec, k: float) -> ResidualReport:
        """
        Attempt to continue a factorization chain in plane polar coordinates, by asking whether the partner potential
        W² + dW/dz of the accepted superpotential for |m| is the effective potential for |m| + 1 (up to a constant).

        .. note::
            It is not: W has poles at the zeros of the Bessel function, which the next effective potential does not
            share. The check is therefore expected to fail.

        :param system:                  The system (must be the free particle in two dimensions).
        :param k:                       The wavenumber.
        :return:                        The report.
        :raises UnsupportedSystemError: If the system is not the free particle in two dimensions.
        """
        NumericalVerifier.__require(system, (ESystemName.FREE2D,), "The plane polar chain")
        candidate = self.__candidate(system, k, 3)
        m = abs(system.get_m())
        partner = SystemSpec(ESystemName.FREE2D, m=m + 1, mass=system.get_mass(), hbar=system.get_hbar())

        zs, differences, scales = [], [], []
        for z in self.__check_points(system):
            try:
                w = self.__superpotential(candidate, z)
                dw = SuperpotentialUtil.superpotential_derivative(
                    candidate, z, policy=self.__settings.get_policy()
                )
            except PoleAtNodeError:
                continue
            target = SystemCatalog.ansatz_rhs(partner, k, z) / 4
            zs.append(z)
            differences.append(w * w + dw - target)
            scales.append(max(1.0, abs(w) ** 2, abs(dw), abs(target)))

        differences = np.array(differences)
        residuals = np.abs(differences - np.median(differences.real)) / np.array(scales)
        i = int(np.argmax(residuals))
        return ResidualReport(
            "plane_polar_chain[m={}→{}]".format(m, m + 1), residuals[i], zs[i], self.__settings.get_tolerance(),
            detail="expected to fail: the zeros of successive Bessel wavefunctions do not match"
        )

    def riccati_check(self, candidate: Candidate, zs: Optional[Sequence[float]] = None) -> ResidualReport:
        """
        Check the Riccati relation W² - dW/dz = (2M/ħ²κ²)(V_eff - E) with W and dW/dz computed analytically.

        :param candidate:           The candidate (whose frame fixes k).
        :param zs:                  The points (optional; defaults to the system's classification window, in which
                                    nodes are skipped).
        :return:                    The report, with residuals relative to max(1, |W|², |dW/dz|, |rhs|).
        :raises PoleTooCloseError:  If an explicitly given point is at a pole of W.
        """
        system, k = candidate.get_system(), candidate.get_k()
        alpha = candidate.get_frame().get_alpha()
        explicit = zs is not None
        if zs is None:
            zs = self.__check_points(system)

        worst, where, skipped = 0.0, math.nan, 0
        for z in zs:
            try:
                w = self.__superpotential(candidate, z)
                dw = SuperpotentialUtil.superpotential_derivative(candidate, z, policy=self.__settings.get_policy())
            except PoleAtNodeError as e:
                if explicit:
                    raise PoleTooCloseError("z = {} is too close to a pole of W".format(z)) from e
                skipped += 1
                continue
            target = SystemCatalog.ansatz_rhs(system, k, z, alpha=alpha) / 4
            residual = abs(w * w - dw - target) / max(1.0, abs(w) ** 2, abs(dw), abs(target))
            if residual > worst:
                worst, where = residual, z

        return ResidualReport(
            "riccati", worst, where, self.__settings.get_tolerance(),
            detail="{} poles skipped".format(skipped) if skipped else ""
        )

    def schrodinger_residual(self, grid: WavefunctionGrid) -> ResidualReport:
        """
        Check that a sampled wavefunction solves -(ħ²/2M)u'' + (V_eff - E)u = 0, with u'' from the five-point stencil.

        .. note::
            Residuals are relative to max(|E·u|, |(ħ²/2M)u''|) over the grid, not to u pointwise, so that nodes
            do not inflate them.

        :param grid:                The grid.
        :return:                    The report.
        :raises GridTooCoarseError: If the estimated stencil error exceeds a tenth of the tolerance.
        """
        system, k, h = grid.get_system(), grid.get_k(), grid.get_spacing()
        tolerance = self.__settings.get_tolerance()
        hbar2_over_2m = system.get_hbar() ** 2 / (2.0 * system.get_mass())
        energy = SystemCatalog.energy(system, k)

        u = grid.get_u()
        kinetic = hbar2_over_2m * StencilUtil.second_derivative(u, h)
        u_inner = StencilUtil.interior(u)
        scale = max(np.max(np.abs(energy * u_inner)), np.max(np.abs(kinetic)))
        if scale == 0.0:
            return ResidualReport("schrodinger", math.nan, math.nan, tolerance, detail="u vanishes on the grid")

        bound = hbar2_over_2m * StencilUtil.second_derivative_error_bound(u, h) / scale
        logger.debug("%s: stencil error bound %.2e against tolerance %.1e", grid, bound, tolerance)
        if bound > tolerance / 10:
            raise GridTooCoarseError(
                "The stencil error bound {:.2e} of {} exceeds a tenth of the tolerance {:.1e}".format(
                    bound, grid, tolerance
                )
            )

        potential = StencilUtil.interior(grid.effective_potential())
        residuals = np.abs(-kinetic + (potential - energy) * u_inner) / scale
        i = int(np.argmax(residuals))
        return ResidualReport(
            "schrodinger", residuals[i], StencilUtil.interior(grid.get_q())[i], tolerance,
            detail="stencil error bound {:.1e}".format(bound)
        )

    def subsidiary_residual(self, grid: WavefunctionGrid, candidate: Candidate) -> ResidualReport:
        """
        Check the subsidiary condition u'/u = -W, with u' from the five-point stencil.

        .. note::
            Points within node_margin cells of a sign change of u, points at which |u| is below NEAR_ZERO_FRACTION of
            its maximum (which includes the neighbourhood of a radial origin), and points at which W is not available
            are not used.

        :param grid:                    The grid, sampled from the candidate.
        :param candidate:               The candidate.
        :return:                        The report, with residuals |u'/u + W| / (1 + |W|).
        :raises AllPointsNearNodesError: If no usable points remain.
        """
        settings = self.__settings
        u = grid.get_u()
        kappa = SystemCatalog.z_scale(grid.get_system(), grid.get_k())
        du = StencilUtil.first_derivative(u, grid.get_spacing()) / kappa

        w = grid.get_w()
        if w is None or not np.any(np.isfinite(w)):
            _, w, _ = SuperpotentialUtil.sample(candidate, grid.get_z(), policy=settings.get_policy())

        safe = StencilUtil.interior(~self.__near_nodes(u) & np.isfinite(w))
        if not np.any(safe):
            raise AllPointsNearNodesError("All the points of {} are within {} cells of a node".format(
                grid, settings.get_node_margin()
            ))

        u_inner, w_inner = StencilUtil.interior(u)[safe], StencilUtil.interior(w)[safe]
        residuals = np.abs(du[safe] / u_inner + w_inner) / (1 + np.abs(w_inner))
        i = int(np.argmax(residuals))
        return ResidualReport(
            "subsidiary", residuals[i], StencilUtil.interior(grid.get_q())[safe][i], settings.get_tolerance(),
            detail="{} of {} interior points used".format(int(np.sum(safe)), len(safe))
        )

    def zero_energy_growth(self, system: SystemSpec) -> Optional[ResidualReport]:
        """
        Check the growth of the logarithmic second solution F(-m, 1, ζ) that replaces M in the zero-energy Morse case
        when 1/2 - ξ = -m is a non-positive integer. Since F ~ e^ζ ζ^(-m-1), ln|e^(-ζ/2) F| should rise at the rate
        1/2 - (m+1) ln(ζ₂/ζ₁)/(ζ₂ - ζ₁) between the two arguments at which it is measured.

        :param system:                  The system (must be Morse).
        :return:                        The report, or None if 1/2 - ξ is not a non-positive integer.
        :raises UnsupportedSystemError: If the system is not Morse.
        """
        NumericalVerifier.__require(system, (ESystemName.MORSE,), "The zero-energy growth check")
        a = 0.5 - SystemCatalog.xi(system)
        if not GammaUtil.is_nonpositive_integer(a):
            return None

        m = int(round(-a))
        lo, hi = BoundaryAnalysis.SECOND_SOLUTION_SPAN
        predicted = 0.5 - (m + 1) * math.log(hi / lo) / (hi - lo)
        measured = BoundaryAnalysis.second_solution_growth_rate(m, policy=self.__settings.get_policy())
        return ResidualReport(
            "zero_energy_growth[m={}]".format(m), abs(measured - predicted), math.nan, self.ZERO_ENERGY_RATE_TOLERANCE,
            detail="measured rate {:.4f}, predicted {:.4f}".format(measured, predicted)
        )

    # PRIVATE METHODS

    def __candidate(self, system: SystemSpec, k: float, case_id: int) -> Candidate:
        for candidate in ParameterSolver.solve_parameters(system, k):
            if candidate.get_case_id() == case_id:
                return candidate
        raise ValueError("{} has no case {}".format(system.describe(), case_id))

    def __check_points(self, system: SystemSpec) -> np.ndarray:
        return SystemCatalog.classification_window(system).with_n(self.__settings.get_check_points()).points()

    def __imaginary_evidence(self, candidate: Candidate) -> Tuple[float, float]:
        worst, where = 0.0, math.nan
        for z in self.__check_points(candidate.get_system()):
            try:
                w = self.__superpotential(candidate, z)
            except (DomainError, PoleAtNodeError):
                continue
            if abs(w.imag) > worst:
                worst, where = abs(w.imag), z
        return worst, where

    def __infinity_evidence(self, candidate: Candidate, verdict: Verdict) -> Tuple[float, float, str]:
        """
        Measure the growth rate d ln|u| / d|ζ| just beyond the classification window, at the first end at infinity at
        which the verdict says the wavefunction diverges.

        .. note::
            In the zero-energy Morse case a Kummer row may be rejected without a diverging end, because M is replaced
            by the logarithmic second solution; its growth rate is then measured instead.

        :return:    A tuple (rate, location, detail).
        """
        policy = self.__settings.get_policy()
        ends = [e for e in verdict.get_ends() if e.diverges() and not e.get_end().is_origin()]
        if not ends:
            a = candidate.get_a()
            if SystemCatalog.is_zero_energy_special_case(candidate.get_system(), candidate.get_k()) \
                    and candidate.get_kind() is ECHFKind.M and GammaUtil.is_nonpositive_integer(a):
                rate = BoundaryAnalysis.second_solution_growth_rate(int(round(-a.real)), policy=policy)
                return rate, math.nan, "growth rate of the zero-energy second solution"
            return 0.0, math.nan, "no diverging end at infinity"

        direction = ends[0].get_end().get_direction()
        window = SystemCatalog.classification_window(candidate.get_system())
        near = window.get_z_max() if direction > 0 else window.get_z_min()
        far = near + direction * self.GROWTH_STEP

        zeta_map = candidate.get_zeta_map()
        log_near = math.log(abs(SuperpotentialUtil.wavefunction_reduced(candidate, near, policy=policy)))
        log_far = math.log(abs(SuperpotentialUtil.wavefunction_reduced(candidate, far, policy=policy)))
        span = abs(zeta_map.evaluate(far).get_zeta()) - abs(zeta_map.evaluate(near).get_zeta())
        return (log_far - log_near) / span, far, "growth rate d ln|u| / d|ζ| between z = {:g} and {:g}".format(
            near, far
        )

    def __mirrored_m(self, system: SystemSpec, k: float) -> List[ResidualReport]:
        m = system.get_m()
        if m == 0:
            return []

        parameters = system.get_parameters()
        parameters["m"] = -m
        mirrored = SystemSpec.from_parameters(parameters)

        z_min, z_max = NumericalVerifier.verification_window(system)
        zs = np.linspace(z_min, z_max, self.__settings.get_oracle_points())
        reports = []  # type: List[ResidualReport]
        for case_id in SystemCatalog.expected_verdicts(system).get_accepted_case_ids():
            u = self.__sample_u(self.__candidate(system, k, case_id), zs)
            u_mirrored = self.__sample_u(self.__candidate(mirrored, k, case_id), zs)
            reports.append(NumericalVerifier.__ratio_report(
                "mirrored_m[case {}]".format(case_id), u_mirrored, u, zs, self.__settings.get_oracle_tolerance()
            ))
        return reports

    def __near_nodes(self, u: np.ndarray) -> np.ndarray:
        margin = self.__settings.get_node_margin()
        near = np.abs(u) < self.NEAR_ZERO_FRACTION * np.max(np.abs(u))
        for i in np.flatnonzero(np.signbit(u.real[:-1]) != np.signbit(u.real[1:])):
            near[max(0, i - margin):i + margin + 2] = True
        return near

    def __origin_evidence(self, candidate: Candidate) -> Tuple[float, float]:
        policy = self.__settings.get_policy()
        z_small, z_large = self.ORIGIN_PROBES
        psi_small = abs(SuperpotentialUtil.wavefunction(candidate, z_small, policy=policy))
        psi_large = abs(SuperpotentialUtil.wavefunction(candidate, z_large, policy=policy))
        return (math.log(psi_small) - math.log(psi_large)) / (math.log(z_large) - math.log(z_small)), z_small

    def __sample_u(self, candidate: Candidate, zs: np.ndarray) -> np.ndarray:
        policy = self.__settings.get_policy()
        return np.array([SuperpotentialUtil.wavefunction_reduced(candidate, z, policy=policy) for z in zs])

    def __sin_identity(self) -> ResidualReport:
        policy = self.__settings.get_policy()
        zs = np.linspace(-10.0, 10.0, self.__settings.get_oracle_points())
        params = CHFParams(1, 2)
        worst, where = 0.0, math.nan
        for z in zs:
            for sign in (1, -1):
                lhs = cmath.exp(-sign * 1j * z) * z * ChfUtil.eval_M(params, sign * 2j * z, policy)
                if abs(lhs - math.sin(z)) > worst:
                    worst, where = abs(lhs - math.sin(z)), z
        return ResidualReport(
            "sin_identity", worst, where, self.__settings.get_oracle_tolerance(),
            detail="sin z = e^(∓iz) z M(1,2,±2iz)"
        )

    def __superpotential(self, candidate: Candidate, z: float) -> complex:
        return SuperpotentialUtil.superpotential(candidate, z, policy=self.__settings.get_policy())

    # PUBLIC STATIC METHODS

    @staticmethod
    def verification_window(system: SystemSpec) -> Tuple[float, float]:
        """
        Get the z-window on which a system's wavefunctions are sampled and compared with the oracles.

        :param system:  The system.
        :return:        A tuple (z_min, z_max).
        """
        return _VERIFICATION_WINDOWS[system.get_name()]

    # PRIVATE STATIC METHODS

    @staticmethod
    def __ratio_report(name: str, u: np.ndarray, oracle: np.ndarray, zs: np.ndarray,
                       tolerance: float) -> ResidualReport:
        """
        Check that u is a constant multiple of an oracle, using the points at which the oracle is not small.

        :return:    A report whose residual is the largest relative deviation of u/oracle from its value at the point
                    where |oracle| is largest.
        """
        usable = np.abs(oracle) >= NumericalVerifier.ORACLE_FLOOR * np.max(np.abs(oracle))
        ratios = u[usable] / oracle[usable]
        reference = ratios[int(np.argmax(np.abs(oracle[usable])))]
        deviations = np.abs(ratios / reference - 1)
        i = int(np.argmax(deviations))
        return ResidualReport(name, deviations[i], zs[usable][i], tolerance)

    @staticmethod
    def __require(system: SystemSpec, names: Sequence[ESystemName], what: str) -> None:
        if system.get_name() not in names:
            raise UnsupportedSystemError("{} does not apply to {}".format(what, system.get_name().get_display_name()))


# The ends of the Free1D and linear windows are incommensurate with 0, so no uniform grid over them lands on z = 0.
_VERIFICATION_WINDOWS = {
    ESystemName.FREE1D: (-10.0, 3 * math.pi),
    ESystemName.FREE2D: (0.2, 20.0),
    ESystemName.FREE3D: (0.2, 20.0),
    ESystemName.LINEAR: (-8.0, 1.5 * math.pi),
    ESystemName.HYDROGEN: (0.05, 25.0),
    ESystemName.MORSE: (-1.5, 4.0)
}  # type: Dict[ESystemName, Tuple[float, float]]
