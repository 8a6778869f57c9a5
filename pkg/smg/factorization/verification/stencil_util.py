import numpy as np


class StencilUtil:
    """
    Utility functions for five-point central differences on uniform grids.

    .. note::
        Every derivative is returned for the interior points 2, ..., n-3 only; the two points at each end are
        dropped rather than differentiated one-sidedly.
    """

    # PUBLIC STATIC METHODS

    @staticmethod
    def first_derivative(values: np.ndarray, h: float) -> np.ndarray:
        """
        Differentiate sampled values once, with truncation error h⁴ max|f⁽⁵⁾|/30.

        :param values:  The values at n >= 5 uniformly spaced points.
        :param h:       The spacing.
        :return:        The derivative at the n-4 interior points.
        """
        f = np.asarray(values)
        StencilUtil.__check_length(f, 5)
        return (-f[4:] + 8 * f[3:-1] - 8 * f[1:-3] + f[:-4]) / (12 * h)

    @staticmethod
    def interior(values: np.ndarray) -> np.ndarray:
        """
        Get the interior points at which the stencils produce values.

        :param values:  The values at n >= 5 points.
        :return:        The values at points 2, ..., n-3.
        """
        f = np.asarray(values)
        StencilUtil.__check_length(f, 5)
        return f[2:-2]

    @staticmethod
    def second_derivative(values: np.ndarray, h: float) -> np.ndarray:
        """
        Differentiate sampled values twice, with truncation error h⁴ max|f⁽⁶⁾|/90.

        :param values:  The values at n >= 5 uniformly spaced points.
        :param h:       The spacing.
        :return:        The second derivative at the n-4 interior points.
        """
        f = np.asarray(values)
        StencilUtil.__check_length(f, 5)
        return (-f[4:] + 16 * f[3:-1] - 30 * f[2:-2] + 16 * f[1:-3] - f[:-4]) / (12 * h * h)

    @staticmethod
    def second_derivative_error_bound(values: np.ndarray, h: float) -> float:
        """
        Estimate the truncation error bound h⁴ max|f⁽⁶⁾|/90 of the second-derivative stencil, with f⁽⁶⁾
        estimated from sixth differences of the samples.

        :param values:  The values at n >= 7 uniformly spaced points.
        :param h:       The spacing.
        :return:        The estimated bound.
        """
        f = np.asarray(values)
        StencilUtil.__check_length(f, 7)
        sixth = np.max(np.abs(np.diff(f, 6))) / h ** 6
        return h ** 4 * sixth / 90

    # PRIVATE STATIC METHODS

    @staticmethod
    def __check_length(f: np.ndarray, minimum: int) -> None:
        if f.ndim != 1 or len(f) < minimum:
            raise ValueError("A stencil needs a one-dimensional array of at least {} values, got shape {}".format(
                minimum, f.shape
            ))
