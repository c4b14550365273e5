"""
Safety Polynomials

For a string frozen at x_i with certified radius eps_i, the real polynomial
Q_i(t) = eps_i^2 |P'_t(x_i)|^2 - n^2 |P_t(x_i)|^2 stays positive exactly
while the certificate for x_i keeps holding along the segment. Positivity on
[0, t0] lets the monodromy follower jump from t = 0 to t = t0.
"""
import random
from fractions import Fraction
from typing import List, Sequence, Union

from config.settings import ADVANCE_MAX_HALVINGS
from src.monodromy.fibered import FiberedCurve
from src.numerics.gaussian import GaussianRational, gauss_norm
from src.polynomials import univariate
from src.polynomials.multipoly import MultiPoly
from src.utils.errors import InternalAssertionError, MonodromyError, PreconditionError
from src.utils.logger import logger

SAFETY_VARIABLE = "t"


def safety_coefficients(curve: FiberedCurve, y0: GaussianRational, y1: GaussianRational,
                        x: GaussianRational, radius2: Fraction) -> List[Fraction]:
    """Dense rational coefficients of Q(t) for a string frozen at x."""
    n = curve.degree
    a, b = univariate.real_imag_parts(curve.along(x, y0, y1))
    c, d = univariate.real_imag_parts(curve.derivative_along(x, y0, y1))
    value2 = univariate.add(univariate.mul(a, a), univariate.mul(b, b))
    slope2 = univariate.add(univariate.mul(c, c), univariate.mul(d, d))
    return univariate.sub(univariate.scale(slope2, radius2), univariate.scale(value2, n * n))


def safety_polynomial(curve: Union[FiberedCurve, MultiPoly], segment: Sequence[GaussianRational],
                      i: int, x_i: GaussianRational, radius2: Fraction,
                      fiber_var: str = None) -> MultiPoly:
    """
    Safety polynomial Q_i(t) of string i along the segment Y = (1-t)*y0 + t*y1.

    Args:
        curve: The curve, fibered or as a bivariate MultiPoly (then fiber_var is needed)
        segment: Endpoints (y0, y1)
        i: String index (for diagnostics)
        x_i: Frozen position of the string
        radius2: Certified squared radius eps_i^2

    Returns:
        Q_i as a MultiPoly in the single variable `t`, with rational coefficients
    """
    if isinstance(curve, MultiPoly):
        if fiber_var is None:
            raise PreconditionError("fiber_var is required for a MultiPoly curve")
        curve = FiberedCurve.from_poly(curve, fiber_var)
    y0, y1 = segment
    coefficients = safety_coefficients(curve, y0, y1, x_i, radius2)
    logger.debug(f"Safety polynomial for string {i}: degree {len(coefficients) - 1}")
    return MultiPoly.from_dense(coefficients, SAFETY_VARIABLE)


def _as_real_dense(q: Union[MultiPoly, Sequence[Fraction]]) -> List[Fraction]:
    if isinstance(q, MultiPoly):
        var = q.used_variables()[0] if q.used_variables() else q.variables[0]
        dense = q.to_dense(var)
        if any(c.im for c in dense):
            raise PreconditionError("safety polynomial must have real coefficients")
        return [c.re for c in dense]
    return univariate.trim([Fraction(c) for c in q])


def advance_t0(q: Union[MultiPoly, Sequence[Fraction]], max_halvings: int = ADVANCE_MAX_HALVINGS) -> Fraction:
    """
    Largest t0 in {1, 1/2, 1/4, ...} with Q certified positive on [0, t0].

    The Descartes transform test is tried first; after max_halvings
    inconclusive halvings the search restarts from 1 with exact Sturm counts.

    Raises:
        PreconditionError: If Q(0) <= 0
        MonodromyError: If no positive interval is found
    """
    dense = _as_real_dense(q)
    if not dense or dense[0] <= 0:
        raise PreconditionError("advance_t0 requires Q(0) > 0")
    t0 = Fraction(1)
    for _ in range(max_halvings + 1):
        if univariate.positive_by_descartes(dense, t0):
            return t0
        t0 /= 2
    t0 = Fraction(1)
    for _ in range(4 * max_halvings + 64):
        if univariate.positive_by_sturm(dense, t0):
            logger.debug(f"Sturm fallback certified t0 = {t0}")
            return t0
        t0 /= 2
    raise MonodromyError("no certified advance for the safety polynomial")


def certificate_holds(fiber: Sequence[GaussianRational], points: Sequence[GaussianRational],
                      radii2: Sequence[Fraction]) -> bool:
    """n^2 |P(x_i)|^2 < eps_i^2 |P'(x_i)|^2 for every frozen point."""
    n = len(points)
    for x, radius2 in zip(points, radii2):
        if radius2 is None:
            continue
        value, slope = univariate.eval_with_derivative(fiber, x)
        if n * n * gauss_norm(value) >= radius2 * gauss_norm(slope):
            return False
    return True


def spot_check_safety(curve: FiberedCurve, y0: GaussianRational, y1: GaussianRational, t0: Fraction,
                      points: Sequence[GaussianRational], radii2: Sequence[Fraction],
                      count: int, rng: random.Random) -> None:
    """
    Re-test the frozen certificate at random rational times inside (0, t0).

    Raises:
        InternalAssertionError: If the certificate fails at a sampled time
    """
    for _ in range(count):
        s = t0 * Fraction(rng.randrange(1, 10 ** 6), 10 ** 6)
        y = y0 + (y1 - y0) * s
        if not certificate_holds(curve.fiber(y), points, radii2):
            raise InternalAssertionError(f"safety certificate fails at t={s} on segment {y0} -> {y1}")
