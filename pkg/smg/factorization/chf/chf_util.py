import cmath
import logging
import math

from typing import List, Optional, Tuple

from ..base import BranchCutAmbiguityError, DomainError, NonConvergenceError
from .asymptotic_term import AsymptoticTerm
from .chf_params import CHFParams
from .e_chf_kind import ECHFKind
from .eval_policy import EvalPolicy
from .gamma_util import GammaUtil
from .greek_coefficients import GreekCoefficients
from .multiprecision_util import MultiPrecisionUtil


logger = logging.getLogger(__name__)


class ChfUtil:
    """
    Utility functions for evaluating the confluent hypergeometric functions M, U and M̃ with complex parameters.

    .. note::
        All non-integer powers and logarithms are taken on the principal branch, with the cut along (-∞, 0]. The
        internal routines accept points on the cut and return the value on its upper side; the public ones refuse
        them where the function is multi-valued, and the *_on_sheet variants continue onto other sheets explicitly.
    """

    # CONSTANTS

    # The largest tolerated ratio (|F| + |β F₊|) / |F - β F₊| in the derivative identity.
    DERIVATIVE_CANCELLATION_LIMIT = 4.0  # type: float

    # PUBLIC STATIC METHODS

    @staticmethod
    def eval_d2F(kind: ECHFKind, params: CHFParams, zeta: complex, f: complex, df: complex) -> complex:
        """
        Compute the second derivative of the function F for the specified kind from the confluent hypergeometric
        equation ζF'' + (b - ζ)F' - aF = 0 (with (a, b) replaced by (1+a-b, 2-b) for M̃).

        :param kind:        The kind of function.
        :param params:      The parameters (a, b).
        :param zeta:        The argument (non-zero).
        :param f:           F at ζ.
        :param df:          dF/dζ at ζ.
        :return:            d²F/dζ² at ζ.
        :raises DomainError: If ζ = 0.
        """
        if zeta == 0:
            raise DomainError("Cannot recover F'' from the confluent hypergeometric equation at ζ = 0")
        if kind is ECHFKind.MTILDE:
            params = params.reduced()
        return ((zeta - params.get_b()) * df + params.get_a() * f) / zeta

    @staticmethod
    def eval_dF(kind: ECHFKind, params: CHFParams, zeta: complex, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate dF/dζ using the identity F' = F - β F₊.

        .. note::
            For M̃, F is the Kummer function M(1+a-b, 2-b, ζ) = ζ^(b-1) M̃(a,b,ζ) that the identity is written for.
            Where F and β F₊ cancel by more than DERIVATIVE_CANCELLATION_LIMIT, the derivative is taken from the
            shifted forms M' = (a/b) M(a+1,b+1,ζ) and U' = -a U(a+1,b+1,ζ) instead.

        :param kind:                The kind of function.
        :param params:              The parameters (a, b).
        :param zeta:                The argument.
        :param policy:              The evaluation policy (optional).
        :return:                    dF/dζ.
        :raises BetaUndefinedError: If β is undefined for the parameters.
        """
        return ChfUtil.eval_dF_on_sheet(kind, params, zeta, 0, policy)

    @staticmethod
    def eval_dF_on_sheet(kind: ECHFKind, params: CHFParams, zeta: complex, winding: int,
                         policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate dF/dζ on the specified sheet of the Riemann surface of log ζ.

        :param kind:                The kind of function.
        :param params:              The parameters (a, b).
        :param zeta:                The principal value of the argument.
        :param winding:             The number of times the argument has wound anticlockwise past the cut.
        :param policy:              The evaluation policy (optional).
        :return:                    dF/dζ.
        :raises BetaUndefinedError: If β is undefined for the parameters.
        """
        beta = GreekCoefficients(kind, params).get_beta()
        f = ChfUtil.eval_F_on_sheet(kind, params, zeta, winding, policy)
        beta_f_plus = beta * ChfUtil.eval_F_plus_on_sheet(kind, params, zeta, winding, policy)
        df = f - beta_f_plus
        if abs(f) + abs(beta_f_plus) <= ChfUtil.DERIVATIVE_CANCELLATION_LIMIT * abs(df):
            return df

        logger.debug("F - βF₊ cancels for %s at %s; using the shifted form of F'", params, zeta)
        if kind is ECHFKind.U:
            a = params.get_a()
            if a == 0:
                return 0j
            return -a * ChfUtil.eval_U_on_sheet(CHFParams(a + 1, params.get_b() + 1), zeta, winding, policy)
        else:
            reduced = params.reduced() if kind is ECHFKind.MTILDE else params
            a, b = reduced.get_a(), reduced.get_b()
            if a == 0:
                return 0j
            return a / b * ChfUtil.eval_M(CHFParams(a + 1, b + 1), zeta, policy)

    @staticmethod
    def eval_dF_plus(kind: ECHFKind, params: CHFParams, zeta: complex,
                     policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate the derivative of the shifted function F₊ with respect to ζ.

        :param kind:    The kind of function.
        :param params:  The parameters (a, b).
        :param zeta:    The argument.
        :param policy:  The evaluation policy (optional).
        :return:        dF₊/dζ.
        """
        if kind is ECHFKind.MTILDE:
            return ChfUtil.eval_dF(ECHFKind.M, params.reduced().with_b_shifted(), zeta, policy)
        else:
            return ChfUtil.eval_dF(kind, params.with_b_shifted(), zeta, policy)

    @staticmethod
    def eval_F(kind: ECHFKind, params: CHFParams, zeta: complex, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate the function F that the derivative identity is written for: M(a,b,ζ), U(a,b,ζ), or, for M̃,
        the Kummer function M(1+a-b, 2-b, ζ).

        :param kind:    The kind of function.
        :param params:  The parameters (a, b).
        :param zeta:    The argument.
        :param policy:  The evaluation policy (optional).
        :return:        F at ζ.
        """
        if kind is ECHFKind.M:
            return ChfUtil.eval_M(params, zeta, policy)
        elif kind is ECHFKind.U:
            return ChfUtil.eval_U(params, zeta, policy)
        else:
            return ChfUtil.eval_M(params.reduced(), zeta, policy)

    @staticmethod
    def eval_F_on_sheet(kind: ECHFKind, params: CHFParams, zeta: complex, winding: int,
                        policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate F on the specified sheet. Only U is multi-valued; the Kummer functions are entire.

        :param kind:    The kind of function.
        :param params:  The parameters (a, b).
        :param zeta:    The principal value of the argument.
        :param winding: The winding number of the argument.
        :param policy:  The evaluation policy (optional).
        :return:        F at ζ e^(2πi·winding).
        """
        if kind is ECHFKind.U:
            return ChfUtil.eval_U_on_sheet(params, zeta, winding, policy)
        else:
            return ChfUtil.eval_F(kind, params, zeta, policy)

    @staticmethod
    def eval_F_plus(kind: ECHFKind, params: CHFParams, zeta: complex, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate the shifted function F₊: M(a,b+1,ζ), U(a,b+1,ζ), or, for M̃, M(1+a-b, 3-b, ζ).

        :param kind:    The kind of function.
        :param params:  The parameters (a, b).
        :param zeta:    The argument.
        :param policy:  The evaluation policy (optional).
        :return:        F₊ at ζ.
        """
        return ChfUtil.eval_F_plus_on_sheet(kind, params, zeta, 0, policy)

    @staticmethod
    def eval_F_plus_on_sheet(kind: ECHFKind, params: CHFParams, zeta: complex, winding: int,
                             policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate the shifted function F₊ on the specified sheet.

        :param kind:    The kind of function.
        :param params:  The parameters (a, b).
        :param zeta:    The principal value of the argument.
        :param winding: The winding number of the argument.
        :param policy:  The evaluation policy (optional).
        :return:        F₊ at ζ e^(2πi·winding).
        """
        if kind is ECHFKind.M:
            return ChfUtil.eval_M(params.with_b_shifted(), zeta, policy)
        elif kind is ECHFKind.U:
            return ChfUtil.eval_U_on_sheet(params.with_b_shifted(), zeta, winding, policy)
        else:
            return ChfUtil.eval_M(params.reduced().with_b_shifted(), zeta, policy)

    @staticmethod
    def eval_log_second_solution(m: int, zeta: complex, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate the logarithmic second solution F(-m, 1, ζ) of the confluent hypergeometric equation with a = -m and
        b = 1, the case in which M and U coincide up to a constant and a second solution needs a logarithm:

            F(-m,1,ζ) = -Σ_{s=0..m} (-m)_s/(1)_s ζ^s/s! [ln ζ + ψ(1+m-s) - 2ψ(1+s)]
                        + (-1)^(1+m) m! Σ_{s>m} (s-1-m)!/(1)_s ζ^s/s!

        :param m:                       The non-negative integer m.
        :param zeta:                    The argument (off the branch cut).
        :param policy:                  The evaluation policy (optional).
        :return:                        F(-m, 1, ζ).
        :raises BranchCutAmbiguityError: If ζ lies on (-∞, 0].
        :raises NonConvergenceError:    If the tail does not converge within the term limit.
        """
        if m < 0:
            raise ValueError("m must be non-negative, got {}".format(m))

        policy = policy if policy is not None else EvalPolicy.default()
        zeta = ChfUtil.__normalise(zeta)
        ChfUtil.__check_off_cut(zeta, "F(-{}, 1, ζ)".format(m))

        log_zeta = cmath.log(zeta)
        finite = 0j  # type: complex
        coefficient = 1 + 0j  # type: complex
        for s in range(m + 1):
            finite += coefficient * (log_zeta + GammaUtil.digamma(1 + m - s) - 2 * GammaUtil.digamma(1 + s))
            coefficient *= (s - m) * zeta / ((s + 1) * (s + 1))

        # Tail terms (s-1-m)!/(s!)² ζ^s, starting from s = m+1.
        term = zeta ** (m + 1) / math.factorial(m + 1) ** 2  # type: complex
        tail = 0j  # type: complex
        small_run = 0
        for s in range(m + 1, m + 1 + policy.get_max_terms()):
            tail += term
            if abs(term) <= policy.get_series_tol() * abs(tail):
                small_run += 1
                if small_run >= policy.get_small_terms_to_stop():
                    break
            else:
                small_run = 0
            term *= (s - m) * zeta / ((s + 1) * (s + 1))
        else:
            raise NonConvergenceError(
                "Logarithmic second solution F(-{}, 1, {}) did not converge in {} terms".format(
                    m, zeta, policy.get_max_terms()
                )
            )

        sign = 1.0 if m % 2 == 1 else -1.0
        return -finite + sign * math.factorial(m) * tail

    @staticmethod
    def eval_M(params: CHFParams, zeta: complex, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate Kummer's function M(a,b,ζ).

        .. note::
            The power series is summed for |ζ| up to the crossover, and the two-term asymptotic expansion beyond it
            when its truncation error is small enough. Points with Re ζ < 0 go through the Kummer transformation
            M(a,b,ζ) = e^ζ M(b-a,b,-ζ). Values that lose too much to cancellation are recomputed in extended
            precision.

        :param params:                  The parameters (a, b).
        :param zeta:                    The argument.
        :param policy:                  The evaluation policy (optional).
        :return:                        M(a,b,ζ).
        :raises InvalidBError:          If b is a non-positive integer.
        :raises NonConvergenceError:    If the series does not converge within the term limit.
        """
        policy = policy if policy is not None else EvalPolicy.default()
        params.check_valid_for(ECHFKind.M)
        zeta = ChfUtil.__normalise(zeta)
        if zeta == 0:
            return 1 + 0j
        return ChfUtil.__kummer_m(params.get_a(), params.get_b(), zeta, policy)

    @staticmethod
    def eval_Mtilde(params: CHFParams, zeta: complex, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate the second Frobenius solution M̃(a,b,ζ) = ζ^(1-b) M(1+a-b, 2-b, ζ).

        :param params:                      The parameters (a, b).
        :param zeta:                        The argument.
        :param policy:                      The evaluation policy (optional).
        :return:                            M̃(a,b,ζ).
        :raises InvalidBError:              If 2-b is a non-positive integer.
        :raises BranchCutAmbiguityError:    If ζ lies on (-∞, 0] and 1-b is not an integer.
        """
        params.check_valid_for(ECHFKind.MTILDE)
        zeta = ChfUtil.__normalise(zeta)
        if not GammaUtil.is_integer(1 - params.get_b()):
            ChfUtil.__check_off_cut(zeta, "M̃({}, {}, ζ)".format(params.get_a(), params.get_b()))
        return ChfUtil.eval_Mtilde_on_sheet(params, zeta, 0, policy)

    @staticmethod
    def eval_Mtilde_on_sheet(params: CHFParams, zeta: complex, winding: int,
                             policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate M̃(a,b,ζe^(2πi·winding)) = e^(2πi·winding·(1-b)) M̃(a,b,ζ).

        :param params:          The parameters (a, b).
        :param zeta:            The principal value of the argument (points on the cut are taken on its upper side).
        :param winding:         The winding number of the argument.
        :param policy:          The evaluation policy (optional).
        :return:                M̃ on the specified sheet.
        :raises InvalidBError:  If 2-b is a non-positive integer.
        :raises DomainError:    If ζ = 0 and M̃ has no finite limit there.
        """
        params.check_valid_for(ECHFKind.MTILDE)
        exponent = 1 - params.get_b()
        zeta = ChfUtil.__normalise(zeta)
        if zeta == 0:
            if exponent == 0:
                return 1 + 0j
            elif exponent.real > 0:
                return 0j
            else:
                raise DomainError("M̃(a,b,ζ) has no finite limit at ζ = 0 for Re(1-b) < 0")

        value = ChfUtil.principal_power(zeta, exponent) * ChfUtil.eval_M(params.reduced(), zeta, policy)
        if winding != 0 and not GammaUtil.is_integer(exponent):
            value *= cmath.exp(2j * math.pi * winding * exponent)
        return value

    @staticmethod
    def eval_U(params: CHFParams, zeta: complex, policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate Tricomi's function U(a,b,ζ) on the principal branch.

        .. note::
            Polynomial cases (a a non-positive integer) and cases of the form ζ^(1-b)·polynomial with integer b are
            single-valued and are evaluated anywhere. Otherwise a point on (-∞, 0] is ambiguous and is refused.

        :param params:                      The parameters (a, b).
        :param zeta:                        The argument.
        :param policy:                      The evaluation policy (optional).
        :return:                            U(a,b,ζ).
        :raises BranchCutAmbiguityError:    If ζ lies on (-∞, 0] and U is multi-valued there.
        :raises DomainError:                If ζ = 0 and U has no finite limit there.
        :raises NonConvergenceError:        If a series does not converge within the term limit.
        """
        policy = policy if policy is not None else EvalPolicy.default()
        a, b = params.get_a(), params.get_b()
        zeta = ChfUtil.__normalise(zeta)

        if GammaUtil.is_nonpositive_integer(a):
            return ChfUtil.__tricomi_polynomial(a, b, zeta, policy)

        if zeta == 0:
            if b.real < 1.0:
                return GammaUtil.gamma(1 - b) * GammaUtil.rgamma(1 + a - b)
            raise DomainError("U({}, {}, ζ) has no finite limit at ζ = 0".format(a, b))

        single_valued = GammaUtil.is_integer(b) and GammaUtil.is_nonpositive_integer(1 + a - b)
        if not single_valued:
            ChfUtil.__check_off_cut(zeta, "U({}, {}, ζ)".format(a, b))

        return ChfUtil.__tricomi_u(a, b, zeta, policy)

    @staticmethod
    def eval_U_on_sheet(params: CHFParams, zeta: complex, winding: int,
                        policy: Optional[EvalPolicy] = None) -> complex:
        """
        Evaluate U(a,b,ζe^(2πi·winding)) by analytic continuation across the cut:

            U(a,b,ζe^(2πim)) = (1 - e^(-2πibm)) Γ(1-b)/Γ(1+a-b) M(a,b,ζ) + e^(-2πibm) U(a,b,ζ),

        with the limiting form U + (-1)^(n+1) 2πim/(n! Γ(a-n)) M for b = n+1.

        :param params:  The parameters (a, b).
        :param zeta:    The principal value of the argument (points on the cut are taken on its upper side).
        :param winding: The winding number m of the argument.
        :param policy:  The evaluation policy (optional).
        :return:        U on the specified sheet.
        """
        policy = policy if policy is not None else EvalPolicy.default()
        a, b = params.get_a(), params.get_b()
        zeta = ChfUtil.__normalise(zeta)

        if GammaUtil.is_nonpositive_integer(a) or zeta == 0:
            return ChfUtil.eval_U(params, zeta, policy)
        if winding == 0:
            return ChfUtil.__tricomi_u(a, b, zeta, policy)

        logger.debug("Continuing U(%s, %s, ζ) onto sheet %d", a, b, winding)
        if GammaUtil.is_integer(b):
            if b.real <= 0.0:
                # ζ^(1-b) is single-valued here, so only the reflected function picks up the winding.
                return ChfUtil.principal_power(zeta, 1 - b) * ChfUtil.eval_U_on_sheet(
                    CHFParams(1 + a - b, 2 - b), zeta, winding, policy
                )
            n = int(b.real) - 1
            sign = -1.0 if n % 2 == 0 else 1.0
            jump = sign * 2j * math.pi * winding / math.factorial(n) * GammaUtil.rgamma(a - n)
            return ChfUtil.__tricomi_u(a, b, zeta, policy) + jump * ChfUtil.__kummer_m(a, b, zeta, policy)

        phase = cmath.exp(-2j * math.pi * b * winding)
        connection = GammaUtil.gamma(1 - b) * GammaUtil.rgamma(1 + a - b)
        m_part = ChfUtil.__kummer_m(a, b, zeta, policy) if connection != 0 else 0j
        return (1 - phase) * connection * m_part + phase * ChfUtil.__tricomi_u(a, b, zeta, policy)

    @staticmethod
    def large_zeta_leading_terms(kind: ECHFKind, params: CHFParams, *, upper: bool = True) -> List[AsymptoticTerm]:
        """
        Get the leading behaviour of a function as |ζ| → ∞.

        .. note::
            M has two terms, Γ(b)/Γ(a) e^ζ ζ^(a-b) and Γ(b)/Γ(b-a) e^(±iπa) ζ^(-a), with the upper sign for
            Im ζ >= 0. M̃ behaves in the same way with (a, b) replaced by (1+a-b, 2-b) after its prefactor is folded
            in. U has the single term ζ^(-a). Terms whose coefficient vanishes are omitted.

        :param kind:    The kind of function.
        :param params:  The parameters (a, b).
        :param upper:   Whether ζ lies in the upper half-plane (selects the sign of the phase of the second term).
        :return:        The non-vanishing leading terms.
        """
        a, b = params.get_a(), params.get_b()
        if kind is ECHFKind.U:
            return [AsymptoticTerm(1.0, -a)]

        if kind is ECHFKind.MTILDE:
            inner = params.reduced()
            big_a, big_b = inner.get_a(), inner.get_b()
        else:
            big_a, big_b = a, b

        sign = 1.0 if upper else -1.0
        gamma_b = GammaUtil.gamma(big_b)
        terms = []  # type: List[AsymptoticTerm]
        c1 = gamma_b * GammaUtil.rgamma(big_a)
        if c1 != 0:
            terms.append(AsymptoticTerm(c1, a - b, exp_rate=1))
        c2 = gamma_b * GammaUtil.rgamma(big_b - big_a) * cmath.exp(sign * 1j * math.pi * big_a)
        if c2 != 0:
            terms.append(AsymptoticTerm(c2, -a))
        return terms

    @staticmethod
    def principal_power(zeta: complex, exponent: complex) -> complex:
        """
        Compute ζ^p on the principal branch (integer powers are computed exactly and are single-valued).

        :param zeta:        The base.
        :param exponent:    The exponent p.
        :return:            ζ^p.
        :raises DomainError: If ζ = 0 and Re p <= 0 (other than p = 0).
        """
        zeta = ChfUtil.__normalise(zeta)
        exponent = complex(exponent)
        if exponent == 0:
            return 1 + 0j
        if zeta == 0:
            if exponent.real > 0:
                return 0j
            raise DomainError("0 cannot be raised to the power {}".format(exponent))
        if GammaUtil.is_integer(exponent) and abs(exponent.real) <= 64:
            return zeta ** int(exponent.real)
        return cmath.exp(exponent * cmath.log(zeta))

    @staticmethod
    def small_zeta_leading_terms(kind: ECHFKind, params: CHFParams) -> List[AsymptoticTerm]:
        """
        Get the leading behaviour of a function as ζ → 0, ordered from most to least singular.

        .. note::
            For U this follows the limit forms: -[ln ζ + ψ(a) + 2γ_E]/Γ(a) for b = 1, Γ(1-b)/Γ(1+a-b) for b <= 0,
            Γ(b-1)/Γ(a) ζ^(1-b) for integer b >= 2, both of the last two for non-integer b, and the leading
            non-vanishing monomial for the polynomial cases.

        :param kind:    The kind of function.
        :param params:  The parameters (a, b).
        :return:        The leading terms.
        """
        a, b = params.get_a(), params.get_b()
        if kind is ECHFKind.M:
            return [AsymptoticTerm(1.0, 0.0)]
        elif kind is ECHFKind.MTILDE:
            return [AsymptoticTerm(1.0, 1 - b)]

        if GammaUtil.is_nonpositive_integer(a):
            return [ChfUtil.__leading_polynomial_term(a, b, 0.0)]
        if GammaUtil.is_nonpositive_integer(1 + a - b):
            return [ChfUtil.__leading_polynomial_term(1 + a - b, 2 - b, 1 - b)]

        if GammaUtil.is_integer(b):
            if b.real == 1.0:
                rgamma_a = GammaUtil.rgamma(a)
                return [
                    AsymptoticTerm(-rgamma_a, 0.0, has_log=True),
                    AsymptoticTerm(-rgamma_a * (GammaUtil.digamma(a) + 2 * GammaUtil.EULER_GAMMA), 0.0)
                ]
            elif b.real >= 2.0:
                return [AsymptoticTerm(GammaUtil.gamma(b - 1) * GammaUtil.rgamma(a), 1 - b)]
            else:
                return [AsymptoticTerm(GammaUtil.gamma(1 - b) * GammaUtil.rgamma(1 + a - b), 0.0)]

        terms = [
            AsymptoticTerm(GammaUtil.gamma(1 - b) * GammaUtil.rgamma(1 + a - b), 0.0),
            AsymptoticTerm(GammaUtil.gamma(b - 1) * GammaUtil.rgamma(a), 1 - b)
        ]
        return sorted(terms, key=lambda t: t.get_power().real)

    # PRIVATE STATIC METHODS

    @staticmethod
    def __asymptotic_sum(p: complex, q: complex, w: complex, policy: EvalPolicy) -> Optional[complex]:
        """
        Sum the divergent series Σ (p)_s (q)_s / s! w^(-s) up to its smallest term.

        :return:    The sum, or None if the smallest term is not negligible relative to it.
        """
        term = 1 + 0j      # type: complex
        total = 1 + 0j     # type: complex
        previous = math.inf
        for s in range(policy.get_max_terms()):
            term *= (p + s) * (q + s) / ((s + 1) * w)
            abs_term = abs(term)
            if abs_term <= policy.get_series_tol() * abs(total):
                return total + term
            if abs_term >= previous:
                return None
            previous = abs_term
            total += term
        return None

    @staticmethod
    def __check_off_cut(zeta: complex, what: str) -> None:
        if zeta.imag == 0.0 and zeta.real <= 0.0:
            raise BranchCutAmbiguityError(
                "{} is ambiguous at ζ = {}, which lies on the branch cut (-∞, 0]".format(what, zeta.real)
            )

    @staticmethod
    def __kummer_m(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> complex:
        if zeta.real < 0.0:
            return cmath.exp(zeta) * ChfUtil.__kummer_m_right(b - a, b, ChfUtil.__normalise(-zeta), policy)
        return ChfUtil.__kummer_m_right(a, b, zeta, policy)

    @staticmethod
    def __kummer_m_asymptotic(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> Optional[complex]:
        gamma_b = GammaUtil.gamma(b)
        c1 = gamma_b * GammaUtil.rgamma(a)
        c2 = gamma_b * GammaUtil.rgamma(b - a)
        sign = 1.0 if zeta.imag >= 0.0 else -1.0

        t1 = t2 = 0j
        if c1 != 0:
            s1 = ChfUtil.__asymptotic_sum(b - a, 1 - a, zeta, policy)
            if s1 is None:
                return None
            t1 = c1 * cmath.exp(zeta) * ChfUtil.principal_power(zeta, a - b) * s1
        if c2 != 0:
            s2 = ChfUtil.__asymptotic_sum(a, a - b + 1, ChfUtil.__normalise(-zeta), policy)
            if s2 is None:
                return None
            t2 = c2 * cmath.exp(sign * 1j * math.pi * a) * ChfUtil.principal_power(zeta, -a) * s2

        total = t1 + t2
        if total == 0 or not cmath.isfinite(total):
            return None
        if abs(t1) + abs(t2) > policy.get_cancellation_limit() * abs(total):
            return None
        return total

    @staticmethod
    def __kummer_m_right(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> complex:
        if abs(zeta) > policy.get_asymptotic_crossover():
            value = ChfUtil.__kummer_m_asymptotic(a, b, zeta, policy)
            if value is not None:
                return value
            logger.debug("Asymptotic expansion of M(%s, %s, %s) not accurate enough, summing the series", a, b, zeta)

        value, loss = ChfUtil.__kummer_series(a, b, zeta, policy)
        if loss > policy.get_cancellation_limit():
            logger.debug("Escalating M(%s, %s, %s) to extended precision (loss factor %.3g)", a, b, zeta, loss)
            return MultiPrecisionUtil.hyp1f1(a, b, zeta)
        return value

    @staticmethod
    def __kummer_series(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> Tuple[complex, float]:
        """
        Sum the Kummer power series Σ (a)_n/(b)_n ζ^n/n!.

        :return:    The sum and its loss factor (largest term / |sum|).
        """
        term = 1 + 0j    # type: complex
        total = 1 + 0j   # type: complex
        largest = 1.0
        small_run = 0
        tol = policy.get_series_tol()
        for n in range(policy.get_max_terms()):
            term *= (a + n) * zeta / ((b + n) * (n + 1))
            total += term
            abs_term = abs(term)
            if abs_term > largest:
                largest = abs_term
            if abs_term <= tol * abs(total):
                small_run += 1
                if small_run >= policy.get_small_terms_to_stop():
                    break
            else:
                small_run = 0
        else:
            raise NonConvergenceError(
                "Series for M({}, {}, {}) did not converge in {} terms".format(a, b, zeta, policy.get_max_terms())
            )

        abs_total = abs(total)
        loss = largest / abs_total if abs_total > 0.0 else math.inf
        return total, loss

    @staticmethod
    def __kummer_series_either(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> Tuple[complex, float]:
        if zeta.real < 0.0:
            value, loss = ChfUtil.__kummer_series(b - a, b, ChfUtil.__normalise(-zeta), policy)
            return cmath.exp(zeta) * value, loss
        return ChfUtil.__kummer_series(a, b, zeta, policy)

    @staticmethod
    def __leading_polynomial_term(a: complex, b: complex, shift: complex) -> AsymptoticTerm:
        m = int(round(-a.real))
        for s, coefficient in enumerate(ChfUtil.__tricomi_polynomial_coefficients(m, b)):
            if coefficient != 0:
                return AsymptoticTerm(coefficient, shift + s)
        return AsymptoticTerm(0.0, shift)

    @staticmethod
    def __normalise(zeta: complex) -> complex:
        zeta = complex(zeta)
        if not cmath.isfinite(zeta):
            raise DomainError("Cannot evaluate at the non-finite argument {}".format(zeta))
        if zeta.imag == 0.0:
            # Avoid -0.0, which would select the lower side of the cut.
            zeta = complex(zeta.real, 0.0)
        return zeta

    @staticmethod
    def __tricomi_asymptotic(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> Optional[complex]:
        s = ChfUtil.__asymptotic_sum(a, a - b + 1, ChfUtil.__normalise(-zeta), policy)
        if s is None:
            return None
        return ChfUtil.principal_power(zeta, -a) * s

    @staticmethod
    def __tricomi_connection(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> Tuple[complex, float]:
        """
        Evaluate U for non-integer b via U = Γ(1-b)/Γ(1+a-b) M(a,b,ζ) + Γ(b-1)/Γ(a) ζ^(1-b) M(1+a-b,2-b,ζ).

        :return:    The value and its loss factor, which weights each term by the loss of its series plus the
                    sizes of the exponents its gamma and power factors are built from.
        """
        c1 = GammaUtil.gamma(1 - b) * GammaUtil.rgamma(1 + a - b)
        c2 = GammaUtil.gamma(b - 1) * GammaUtil.rgamma(a)

        t1 = t2 = 0j
        loss1 = loss2 = 0.0
        if c1 != 0:
            m1, series_loss = ChfUtil.__kummer_series_either(a, b, zeta, policy)
            t1 = c1 * m1
            loss1 = series_loss + abs(GammaUtil.log_gamma(1 - b)) + abs(GammaUtil.log_gamma(1 + a - b))
        if c2 != 0:
            m2, series_loss = ChfUtil.__kummer_series_either(1 + a - b, 2 - b, zeta, policy)
            t2 = c2 * ChfUtil.principal_power(zeta, 1 - b) * m2
            loss2 = (series_loss + abs(GammaUtil.log_gamma(b - 1)) + abs(GammaUtil.log_gamma(a))
                     + abs((1 - b) * cmath.log(zeta)))

        total = t1 + t2
        abs_total = abs(total)
        if abs_total == 0.0 or not cmath.isfinite(total):
            return total, math.inf
        return total, (abs(t1) * loss1 + abs(t2) * loss2) / abs_total

    @staticmethod
    def __tricomi_log_series(a: complex, n: int, zeta: complex, policy: EvalPolicy) -> Tuple[complex, float]:
        """
        Evaluate U(a, n+1, ζ) for a non-negative integer n (and a not a non-positive integer) via the logarithmic
        series

            U = (-1)^(n+1)/(n! Γ(a-n)) Σ_k (a)_k/((n+1)_k k!) ζ^k [ln ζ + ψ(a+k) - ψ(1+k) - ψ(n+k+1)]
                + 1/Γ(a) Σ_{k=1..n} (k-1)! (1-a+k)_(n-k)/(n-k)! ζ^(-k).

        :return:    The value and its loss factor.
        """
        sign = -1.0 if n % 2 == 0 else 1.0
        log_coefficient = sign / math.factorial(n) * GammaUtil.rgamma(a - n)

        log_part = 0j  # type: complex
        largest = 0.0
        if log_coefficient != 0:
            log_zeta = cmath.log(zeta)
            psi_a = GammaUtil.digamma(a)
            psi_k = -GammaUtil.EULER_GAMMA
            psi_nk = GammaUtil.digamma(n + 1).real
            term = 1 + 0j  # type: complex
            small_run = 0
            tol = policy.get_series_tol()
            for k in range(policy.get_max_terms()):
                contribution = term * (log_zeta + psi_a - psi_k - psi_nk)
                log_part += contribution
                abs_contribution = abs(contribution)
                if abs_contribution > largest:
                    largest = abs_contribution
                if abs_contribution <= tol * abs(log_part):
                    small_run += 1
                    if small_run >= policy.get_small_terms_to_stop():
                        break
                else:
                    small_run = 0

                psi_a += 1 / (a + k)
                psi_k += 1.0 / (1 + k)
                psi_nk += 1.0 / (n + k + 1)
                term *= (a + k) * zeta / ((n + 1 + k) * (k + 1))
            else:
                raise NonConvergenceError(
                    "Logarithmic series for U({}, {}, {}) did not converge in {} terms".format(
                        a, n + 1, zeta, policy.get_max_terms()
                    )
                )

        rgamma_a = GammaUtil.rgamma(a)
        finite_part = 0j  # type: complex
        finite_scale = 0.0
        for k in range(1, n + 1):
            t = math.factorial(k - 1) * GammaUtil.pochhammer(1 - a + k, n - k) / math.factorial(n - k) * zeta ** (-k)
            finite_part += t
            finite_scale += abs(t)
        finite_part *= rgamma_a
        finite_scale *= abs(rgamma_a)

        total = log_coefficient * log_part + finite_part
        abs_total = abs(total)
        if abs_total == 0.0 or not cmath.isfinite(total):
            return total, math.inf
        return total, (abs(log_coefficient) * largest + finite_scale) / abs_total

    @staticmethod
    def __tricomi_polynomial(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> complex:
        """Evaluate U(-m,b,ζ) = (-1)^m Σ_s C(m,s) (b+s)_(m-s) (-ζ)^s, which is a polynomial in ζ."""
        m = int(round(-a.real))
        total = 0j  # type: complex
        scale = 0.0
        power = 1 + 0j  # type: complex
        for coefficient in ChfUtil.__tricomi_polynomial_coefficients(m, b):
            t = coefficient * power
            total += t
            scale += abs(t)
            power *= zeta

        abs_total = abs(total)
        if scale > 0.0 and (abs_total == 0.0 or scale > policy.get_cancellation_limit() * abs_total):
            logger.debug("Escalating polynomial U(%s, %s, %s) to extended precision", a, b, zeta)
            return MultiPrecisionUtil.hyperu(a, b, zeta)
        return total

    @staticmethod
    def __tricomi_polynomial_coefficients(m: int, b: complex) -> List[complex]:
        """Get the coefficients of ζ^0, ..., ζ^m in U(-m,b,ζ)."""
        overall = 1.0 if m % 2 == 0 else -1.0
        return [
            overall * math.comb(m, s) * GammaUtil.pochhammer(b + s, m - s) * (1.0 if s % 2 == 0 else -1.0)
            for s in range(m + 1)
        ]

    @staticmethod
    def __tricomi_u(a: complex, b: complex, zeta: complex, policy: EvalPolicy) -> complex:
        """Evaluate U(a,b,ζ) for ζ ≠ 0 on the principal branch, taking points on the cut on its upper side."""
        if GammaUtil.is_nonpositive_integer(a):
            return ChfUtil.__tricomi_polynomial(a, b, zeta, policy)
        if GammaUtil.is_nonpositive_integer(1 + a - b):
            return ChfUtil.principal_power(zeta, 1 - b) * ChfUtil.__tricomi_polynomial(1 + a - b, 2 - b, zeta, policy)

        if abs(zeta) > policy.get_asymptotic_crossover():
            value = ChfUtil.__tricomi_asymptotic(a, b, zeta, policy)
            if value is not None:
                return value

        if GammaUtil.is_integer(b):
            if b.real <= 0.0:
                return ChfUtil.principal_power(zeta, 1 - b) * ChfUtil.__tricomi_u(1 + a - b, 2 - b, zeta, policy)
            value, loss = ChfUtil.__tricomi_log_series(a, int(b.real) - 1, zeta, policy)
        else:
            value, loss = ChfUtil.__tricomi_connection(a, b, zeta, policy)

        if loss > policy.get_cancellation_limit():
            logger.debug("Escalating U(%s, %s, %s) to extended precision (loss factor %.3g)", a, b, zeta, loss)
            return MultiPrecisionUtil.hyperu(a, b, zeta)
        return value
