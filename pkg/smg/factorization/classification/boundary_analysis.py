import logging
import math

from typing import List, Optional, Tuple

from ..ansatz import Candidate, EZetaFamily
from ..chf import AsymptoticTerm, ChfUtil, ECHFKind, EvalPolicy, GammaUtil
from ..systems import DomainEnd, SystemCatalog
from .e_infinity_growth import EInfinityGrowth
from .end_behaviour import EndBehaviour


logger = logging.getLogger(__name__)


class BoundaryAnalysis:
    """
    Analytic analysis of the behaviour of a candidate's wavefunction at the ends of its domain.

    .. note::
        The reduced wavefunction is u = e^(-ζ/2) ζ^(b/2) (dζ/dz)^(-1/2) F(a,b,ζ), and dζ/dz ∝ ζ^e along each
        ansatz. Where ζ → 0, u therefore behaves like ζ^P with P = b/2 - e/2 + (the leading small-ζ power of F).
        Where |ζ| → ∞, each asymptotic term e^(sζ) of F contributes a factor e^((s - 1/2)ζ) to u, so u grows
        exponentially exactly when Re((s - 1/2)ζ) → +∞ for some term that is present.
    """

    # CONSTANTS

    # The arguments between which the growth rate of the logarithmic second solution is measured.
    SECOND_SOLUTION_SPAN = (40.0, 60.0)  # type: Tuple[float, float]

    # PUBLIC STATIC METHODS

    @staticmethod
    def analyse_end(candidate: Candidate, end: DomainEnd, *, margin: float = 1e-6) -> EndBehaviour:
        """
        Analyse the behaviour of a candidate's wavefunction at one end of its domain.

        :param candidate:   The candidate.
        :param end:         The domain end.
        :param margin:      The margin by which an exponent or rate must clear its threshold to count.
        :return:            The behaviour at the end.
        """
        zm = candidate.get_zeta_map()
        if end.is_origin():
            return BoundaryAnalysis.__analyse_origin(candidate, end, margin)
        elif zm.tends_to_zero(end.get_direction()):
            return BoundaryAnalysis.__analyse_vanishing_zeta(candidate, end, margin)
        else:
            return BoundaryAnalysis.__analyse_large_zeta(candidate, end, margin)

    @staticmethod
    def continuation_adds_kummer(candidate: Candidate) -> bool:
        """
        Determine whether continuing the candidate's Tricomi function onto another sheet brings in a multiple of the
        Kummer function M(a,b,ζ) (and with it a possible e^ζ growth).

        :param candidate:   The candidate.
        :return:            True, if the continuation has a non-zero M component, or False otherwise.
        """
        a, b = candidate.get_a(), candidate.get_b()
        return not GammaUtil.is_nonpositive_integer(a) and not GammaUtil.is_nonpositive_integer(1 + a - b)

    @staticmethod
    def origin_exponent(candidate: Candidate) -> Optional[complex]:
        """
        Get the leading exponent p of the reduced wavefunction u ∝ z^p as z → 0, if ζ(0) = 0.

        :param candidate:   The candidate.
        :return:            The exponent, or None if the ansatz does not vanish at z = 0.
        """
        zm = candidate.get_zeta_map()
        if zm.get_family() is EZetaFamily.EXPONENTIAL:
            return None
        power, _ = BoundaryAnalysis.__small_zeta_exponent(candidate)
        scale = 1.0 if zm.get_family() is EZetaFamily.LINEAR else zm.get_d()
        return power * scale

    @staticmethod
    def second_solution_growth_rate(m: int, *, policy: Optional[EvalPolicy] = None) -> float:
        """
        Measure the growth rate of ln|e^(-ζ/2) F(-m, 1, ζ)| along the positive real ζ axis, where F is the
        logarithmic second solution. A rate near +1/2 confirms the e^ζ growth of F.

        :param m:       The non-negative integer m.
        :param policy:  The evaluation policy (optional).
        :return:        The measured growth rate.
        """
        lo, hi = BoundaryAnalysis.SECOND_SOLUTION_SPAN
        log_lo = math.log(abs(ChfUtil.eval_log_second_solution(m, lo, policy))) - lo / 2
        log_hi = math.log(abs(ChfUtil.eval_log_second_solution(m, hi, policy))) - hi / 2
        rate = (log_hi - log_lo) / (hi - lo)
        logger.debug("Second solution F(-%d, 1, ζ) grows at rate %.6f for ζ in [%g, %g]", m, rate, lo, hi)
        return rate

    # PRIVATE STATIC METHODS

    @staticmethod
    def __analyse_large_zeta(candidate: Candidate, end: DomainEnd, margin: float) -> EndBehaviour:
        window = SystemCatalog.classification_window(candidate.get_system())
        z_far = window.get_z_max() if end.get_direction() > 0 else window.get_z_min()
        point = candidate.get_zeta_map().evaluate(z_far)
        unit = point.get_zeta() / abs(point.get_zeta())
        upper = unit.imag >= 0.0

        kind, params = candidate.get_kind(), candidate.get_params()
        terms = BoundaryAnalysis.__non_vanishing(ChfUtil.large_zeta_leading_terms(kind, params, upper=upper))
        if kind is ECHFKind.U and point.get_winding() != 0 and BoundaryAnalysis.continuation_adds_kummer(candidate):
            terms += BoundaryAnalysis.__non_vanishing(
                ChfUtil.large_zeta_leading_terms(ECHFKind.M, params, upper=upper)
            )

        rate = max(((t.get_exp_rate() - 0.5) * unit).real for t in terms) if terms else -0.5 * unit.real
        if rate > margin:
            growth = EInfinityGrowth.EXPONENTIAL_GROWTH
        elif rate < -margin:
            growth = EInfinityGrowth.DECAYING
        else:
            growth = EInfinityGrowth.OSCILLATORY

        detail = "|ζ| → ∞ along {:.3f}: |u| ~ exp({:.3f}|ζ|)".format(unit, rate)
        return EndBehaviour(end, diverges=growth is EInfinityGrowth.EXPONENTIAL_GROWTH, growth=growth, detail=detail)

    @staticmethod
    def __analyse_origin(candidate: Candidate, end: DomainEnd, margin: float) -> EndBehaviour:
        exponent = BoundaryAnalysis.origin_exponent(candidate)
        _, has_log = BoundaryAnalysis.__small_zeta_exponent(candidate)
        threshold = (candidate.get_system().get_coordinate_type().get_dimension() - 1) / 2

        diverges = exponent.real < threshold - margin or (abs(exponent.real - threshold) <= margin and has_log)
        detail = "u ~ z^({:.4g}){} as z → 0; ψ bounded needs Re p {} {:g}".format(
            exponent, "·ln z" if has_log else "", ">" if has_log else ">=", threshold
        )
        return EndBehaviour(end, diverges=diverges, exponent=exponent, has_log=has_log, detail=detail)

    @staticmethod
    def __analyse_vanishing_zeta(candidate: Candidate, end: DomainEnd, margin: float) -> EndBehaviour:
        # ζ ∝ e^(-z), so |ζ^P| ∝ e^(-Re(P)·z).
        power, has_log = BoundaryAnalysis.__small_zeta_exponent(candidate)
        if power.real < -margin:
            growth = EInfinityGrowth.EXPONENTIAL_GROWTH
        elif power.real > margin:
            growth = EInfinityGrowth.DECAYING
        else:
            growth = EInfinityGrowth.OSCILLATORY

        detail = "ζ → 0: u ~ ζ^({:.4g}){}".format(power, "·ln ζ" if has_log else "")
        return EndBehaviour(
            end, diverges=growth is EInfinityGrowth.EXPONENTIAL_GROWTH, exponent=power, has_log=has_log,
            growth=growth, detail=detail
        )

    @staticmethod
    def __non_vanishing(terms: List[AsymptoticTerm]) -> List[AsymptoticTerm]:
        return [t for t in terms if t.get_coefficient() != 0]

    @staticmethod
    def __small_zeta_exponent(candidate: Candidate) -> Tuple[complex, bool]:
        """
        Get the exponent P of u ∝ ζ^P as ζ → 0, and whether the leading behaviour carries a logarithm.

        :param candidate:   The candidate.
        :return:            A tuple (P, has_log).
        """
        terms = BoundaryAnalysis.__non_vanishing(
            ChfUtil.small_zeta_leading_terms(candidate.get_kind(), candidate.get_params())
        )
        lowest = min(t.get_power().real for t in terms)
        leading = [t for t in terms if t.get_power().real == lowest]
        has_log = any(t.has_log() for t in leading)
        prefactor = candidate.get_b() / 2 - candidate.get_zeta_map().get_derivative_exponent() / 2
        return prefactor + leading[0].get_power(), has_log
