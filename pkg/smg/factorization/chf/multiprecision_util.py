import logging
import mpmath
import threading

from mpmath.libmp import NoConvergence

from ..base import NonConvergenceError


logger = logging.getLogger(__name__)


class MultiPrecisionUtil:
    """
    Extended-precision fallbacks for confluent hypergeometric evaluations that lose too much to cancellation in
    double precision.

    .. note::
        Each thread gets its own mpmath context, since mpmath adjusts the working precision of the context it
        computes in while it sums a series. Sharing the global context between threads would not be safe.
    """

    # CONSTANTS

    WORKING_DPS = 20  # type: int

    # PRIVATE STATIC VARIABLES

    __local = threading.local()

    # PUBLIC STATIC METHODS

    @staticmethod
    def hyp1f1(a: complex, b: complex, zeta: complex) -> complex:
        """
        Evaluate Kummer's function M(a,b,ζ) in extended precision.

        :param a:                       The parameter a.
        :param b:                       The parameter b (not a non-positive integer).
        :param zeta:                    The argument.
        :return:                        M(a,b,ζ), rounded to double precision.
        :raises NonConvergenceError:    If mpmath fails to converge.
        """
        ctx = MultiPrecisionUtil.__get_context()
        try:
            return complex(ctx.hyp1f1(ctx.mpc(a), ctx.mpc(b), ctx.mpc(zeta)))
        except NoConvergence as e:
            raise NonConvergenceError("Extended-precision M({}, {}, {}) did not converge: {}".format(a, b, zeta, e))

    @staticmethod
    def hyperu(a: complex, b: complex, zeta: complex) -> complex:
        """
        Evaluate Tricomi's function U(a,b,ζ) in extended precision, on the principal branch.

        .. note::
            For ζ on the negative real axis, the value returned is the one on the upper side of the cut.

        :param a:                       The parameter a.
        :param b:                       The parameter b.
        :param zeta:                    The argument (non-zero).
        :return:                        U(a,b,ζ), rounded to double precision.
        :raises NonConvergenceError:    If mpmath fails to converge.
        """
        ctx = MultiPrecisionUtil.__get_context()
        try:
            return complex(ctx.hyperu(ctx.mpc(a), ctx.mpc(b), ctx.mpc(zeta)))
        except NoConvergence as e:
            raise NonConvergenceError("Extended-precision U({}, {}, {}) did not converge: {}".format(a, b, zeta, e))

    # PRIVATE STATIC METHODS

    @staticmethod
    def __get_context() -> mpmath.MPContext:
        ctx = getattr(MultiPrecisionUtil.__local, "ctx", None)
        if ctx is None:
            logger.debug("Creating mpmath context for thread %d", threading.get_ident())
            ctx = mpmath.MPContext()
            ctx.dps = MultiPrecisionUtil.WORKING_DPS
            MultiPrecisionUtil.__local.ctx = ctx
        return ctx
