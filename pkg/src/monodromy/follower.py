"""
Monodromy Following

Tracks the certified roots of P(., Y) while Y moves along a segment. At each
step every string gets its own safety polynomial and admissible t0; the
segment advances by the smallest one, the strings are re-approximated by
truncated Newton steps, re-certified, and the crossings between the two
snapshots are read off with lin_braid.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config.settings import (
    MONODROMY_MAX_ITERATIONS,
    NEWTON_GUARD_DIGITS,
    RANDOM_SEED,
    SAFETY_SPOT_CHECKS,
)
from src.monodromy.braid import BraidWord, lin_braid
from src.monodromy.fibered import FiberedCurve
from src.monodromy.safety import advance_t0, safety_coefficients, spot_check_safety
from src.numerics.gaussian import GaussianRational, gauss_norm
from src.polynomials import univariate
from src.roots.certification import (
    CertifiedConfiguration,
    newton_step,
    separation_test,
)
from src.utils.errors import InternalAssertionError, MonodromyError, PreconditionError
from src.utils.logger import logger

_REFINE_STEPS = 8
_MATCH_ROUNDS = 64
_SETTLED = 10 ** 4


@dataclass(frozen=True)
class Snapshot:
    """Certified configuration of the fiber at parameter t of a segment."""

    t: Fraction
    configuration: CertifiedConfiguration


def _lemma_radius2(fiber: Sequence[GaussianRational], x: GaussianRational) -> Optional[Fraction]:
    value, slope = univariate.eval_with_derivative(fiber, x)
    if not slope:
        return None
    n = len(fiber) - 1
    return n * n * gauss_norm(value) / gauss_norm(slope)


def _inside(x: GaussianRational, center: GaussianRational, radius2: Optional[Fraction],
            lemma2: Optional[Fraction]) -> bool:
    """Exact test that the disk D(x, lemma) lies inside the open disk D(center, radius)."""
    if lemma2 is None:
        return False
    if radius2 is None:
        return True
    distance2 = gauss_norm(x - center)
    if distance2 >= radius2:
        return False
    # radius > distance + lemma, squared twice
    slack = radius2 + distance2 - lemma2
    return slack > 0 and slack * slack > 4 * radius2 * distance2


def _refine(fiber: Sequence[GaussianRational], points: Sequence[GaussianRational],
            radii2: Sequence[Optional[Fraction]], guard: int) -> List[GaussianRational]:
    """Newton-improve each point; keep the last iterate whose lemma disk stays inside the old disk."""
    refined = []
    for x, radius2 in zip(points, radii2):
        best = x
        current = x
        for _ in range(_REFINE_STEPS):
            try:
                candidate = newton_step(fiber, current, guard)
            except PreconditionError:
                break
            if candidate == current:
                break
            current = candidate
            lemma2 = _lemma_radius2(fiber, candidate)
            if _inside(candidate, x, radius2, lemma2):
                best = candidate
                if radius2 is None or lemma2 * _SETTLED < radius2:
                    break
        refined.append(best)
    return refined


def follow_segment(curve: FiberedCurve, y0: GaussianRational, y1: GaussianRational,
                   start: Snapshot, guard: int = NEWTON_GUARD_DIGITS,
                   max_iterations: int = MONODROMY_MAX_ITERATIONS,
                   spot_checks: int = SAFETY_SPOT_CHECKS,
                   seed: int = RANDOM_SEED) -> Tuple[BraidWord, Snapshot]:
    """
    Follow the certified roots from Y = y0 to Y = y1.

    String i keeps its index throughout: end.configuration.points[i] tracks the
    root that start.configuration.points[i] certified.

    Args:
        curve: Curve fibered over the base variable
        y0, y1: Segment endpoints
        start: Certified snapshot of the fiber over y0 (t = 0)
        guard: Newton truncation guard digits
        max_iterations: Advance steps allowed before giving up
        spot_checks: Random re-tests of each frozen certificate per step
        seed: Seed for the spot-check times

    Returns:
        (braid word, snapshot over y1 with t = 1)

    Raises:
        MonodromyError: If the iteration budget runs out
    """
    n = curve.degree
    points = list(start.configuration.points)
    radii2 = list(start.configuration.radii2)
    word = BraidWord(max(n, 1))
    if n <= 1 or y0 == y1:
        if n == 1:
            fiber = curve.fiber(y1)
            points = [-fiber[0] / fiber[1]]
        configuration = CertifiedConfiguration(tuple(curve.fiber(y1)), tuple(points), tuple(radii2))
        return word, Snapshot(Fraction(1), configuration)

    rng = random.Random(seed)
    current = y0
    t_total = Fraction(0)
    for iteration in range(max_iterations):
        t0 = min(advance_t0(safety_coefficients(curve, current, y1, x, r2))
                 for x, r2 in zip(points, radii2))
        if spot_checks:
            spot_check_safety(curve, current, y1, t0, points, radii2, spot_checks, rng)
        target = current + (y1 - current) * t0
        fiber = curve.fiber(target)
        moved = _refine(fiber, points, radii2, guard)
        if moved != points:
            passed, new_radii2 = separation_test(fiber, moved)
            if passed:
                word = word + lin_braid(points, moved)
                points, radii2 = moved, new_radii2
        t_total = t_total + (1 - t_total) * t0
        current = target
        if t0 == 1:
            logger.debug(f"Segment {y0} -> {y1} followed in {iteration + 1} steps, {len(word)} crossings")
            configuration = CertifiedConfiguration(tuple(fiber), tuple(points), tuple(radii2))
            return word, Snapshot(Fraction(1), configuration)
    raise MonodromyError("monodromy budget exhausted", segment=(str(y0), str(y1)), t=t_total)


def match_configuration(curve: FiberedCurve, y: GaussianRational, end: CertifiedConfiguration,
                        target: CertifiedConfiguration, guard: int = NEWTON_GUARD_DIGITS) -> BraidWord:
    """
    Braid from a followed configuration onto the reference configuration over y.

    Each followed point is refined until its lemma disk sits inside exactly
    one reference disk; the strings then slide linearly onto the reference
    points.

    Raises:
        InternalAssertionError: If some string cannot be matched
    """
    n = end.degree
    if n <= 1:
        return BraidWord(max(n, 1))
    fiber = curve.fiber(y)
    current = list(end.points)
    accepted = list(end.points)
    assignment: List[Optional[int]] = [None] * n
    for _ in range(_MATCH_ROUNDS):
        for i, x in enumerate(accepted):
            if assignment[i] is not None:
                continue
            lemma2 = _lemma_radius2(fiber, x)
            for j, (c, r2) in enumerate(zip(target.points, target.radii2)):
                if _inside(x, c, r2, lemma2):
                    assignment[i] = j
                    break
        if all(a is not None for a in assignment):
            break
        for i in range(n):
            if assignment[i] is not None:
                continue
            try:
                current[i] = newton_step(fiber, current[i], guard)
            except PreconditionError:
                continue
            if _inside(current[i], end.points[i], end.radii2[i], _lemma_radius2(fiber, current[i])):
                accepted[i] = current[i]
    if any(a is None for a in assignment) or len(set(assignment)) != n:
        raise InternalAssertionError(f"cannot match followed strings to the configuration over {y}")
    matched = [target.points[j] for j in assignment]
    return lin_braid(end.points, accepted) + lin_braid(accepted, matched)


def follow_edge(curve: FiberedCurve, y0: GaussianRational, y1: GaussianRational,
                start: CertifiedConfiguration, finish: CertifiedConfiguration,
                guard: int = NEWTON_GUARD_DIGITS, max_iterations: int = MONODROMY_MAX_ITERATIONS,
                spot_checks: int = SAFETY_SPOT_CHECKS, seed: int = RANDOM_SEED) -> BraidWord:
    """
    Braid of the segment y0 -> y1 between two reference configurations.

    Words compose along paths: the braid of a loop is the concatenation of
    its edge braids, and the reverse edge carries the inverse word.
    """
    word, end = follow_segment(curve, y0, y1, Snapshot(Fraction(0), start), guard,
                               max_iterations, spot_checks, seed)
    return word + match_configuration(curve, y1, end.configuration, finish, guard)
