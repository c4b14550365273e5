"""
Certified Root Isolation

Truncated Newton iteration in exact arithmetic plus the separation
certificate: if n^2 |P(x_i)|^2 < eps_i^2 |P'(x_i)|^2 for every i, where eps_i
is half the distance from x_i to its nearest neighbour, then each closed disk
D(x_i, eps_i) holds exactly one root of the degree-n polynomial P.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from config.settings import (
    CERTIFY_BUDGET_FACTOR,
    CERTIFY_OVERSAMPLING,
    NEWTON_GUARD_DIGITS,
    RANDOM_SEED,
)
from src.numerics.gaussian import (
    GaussianRational,
    floor_log10,
    gauss_norm,
    max_component,
    truncate_decimal,
)
from src.polynomials import univariate
from src.polynomials.multipoly import MultiPoly
from src.utils.errors import CertificationError, PreconditionError
from src.utils.logger import logger

PolyLike = Union[MultiPoly, Sequence[GaussianRational]]

_PI = Fraction(355, 113)
_UNIT_DIGITS = 6


@dataclass(frozen=True)
class CertifiedConfiguration:
    """
    Approximate roots of a squarefree univariate polynomial with certified radii.

    Attributes:
        poly: Dense coefficients of P, lowest degree first
        points: One approximation per root
        radii2: Squared radii eps_i^2 (None for a single root: the disk is unbounded)
    """

    poly: Tuple[GaussianRational, ...]
    points: Tuple[GaussianRational, ...]
    radii2: Tuple[Optional[Fraction], ...]

    @property
    def degree(self) -> int:
        return len(self.points)

    def contains(self, i: int, z: GaussianRational) -> bool:
        """True when z lies in the closed disk D(x_i, eps_i)."""
        radius2 = self.radii2[i]
        return radius2 is None or gauss_norm(z - self.points[i]) <= radius2


def as_dense(p: PolyLike) -> List[GaussianRational]:
    """Dense Gaussian coefficients of a univariate MultiPoly or coefficient list."""
    if isinstance(p, MultiPoly):
        used = p.used_variables()
        if len(used) > 1:
            raise PreconditionError(f"expected a univariate polynomial, got variables {used}")
        var = used[0] if used else p.variables[0]
        return p.to_dense(var)
    return univariate.to_gaussian(univariate.trim(p))


def newton_step(p: PolyLike, z: GaussianRational, guard: int = NEWTON_GUARD_DIGITS) -> GaussianRational:
    """
    One truncated Newton step z - P(z)/P'(z).

    The result is rounded to multiples of 10^k with k = floor_log10(step) - guard,
    where the step surrogate is max(|re|, |im|) of P(z)/P'(z).

    Raises:
        PreconditionError: If P'(z) = 0 (critical point)
    """
    dense = as_dense(p)
    value, slope = univariate.eval_with_derivative(dense, z)
    if not slope:
        raise PreconditionError(f"critical point: P'({z}) = 0")
    step = value / slope
    size = max_component(step)
    if size == 0:
        return z
    return truncate_decimal(z - step, floor_log10(size) - guard)


def separation_radii(points: Sequence[GaussianRational]) -> List[Optional[Fraction]]:
    """eps_i^2 = min_{j != i} |x_i - x_j|^2 / 4 (None when there is a single point)."""
    radii2: List[Optional[Fraction]] = []
    for i, x in enumerate(points):
        distances = [gauss_norm(x - y) for j, y in enumerate(points) if j != i]
        radii2.append(min(distances) / 4 if distances else None)
    return radii2


def separation_test(p: PolyLike, points: Sequence[GaussianRational]) -> Tuple[bool, List[Optional[Fraction]]]:
    """
    Check the separation certificate for a full set of root approximations.

    Args:
        p: Squarefree polynomial of degree n
        points: n pairwise distinct points

    Returns:
        (passed, squared radii)

    Raises:
        PreconditionError: If the point count differs from the degree or points repeat
    """
    dense = as_dense(p)
    n = len(dense) - 1
    if len(points) != n:
        raise PreconditionError(f"{len(points)} points for a polynomial of degree {n}")
    if len(set(points)) != len(points):
        raise PreconditionError("separation test needs pairwise distinct points")
    radii2 = separation_radii(points)
    for x, radius2 in zip(points, radii2):
        value, slope = univariate.eval_with_derivative(dense, x)
        if not slope:
            logger.debug(f"Separation test failed: P' vanishes at {x}")
            return False, radii2
        if radius2 is None:
            continue
        if n * n * gauss_norm(value) >= radius2 * gauss_norm(slope):
            return False, radii2
    return True, radii2


def cauchy_bound(dense: Sequence[GaussianRational]) -> Fraction:
    """Rational upper bound 1 + max |a_i / a_n| on the moduli of all roots."""
    lead = dense[-1]
    ratios = [c / lead for c in dense[:-1]]
    return 1 + max((abs(r.re) + abs(r.im) for r in ratios), default=Fraction(0))


def _unit_point(turn: Fraction) -> GaussianRational:
    """Rational approximation of exp(2*pi*i*turn), exact to about six digits."""
    theta = 2 * _PI * (turn - (turn // 1)) - _PI
    cos_value, sin_value = Fraction(0), Fraction(0)
    term = Fraction(1)
    k = 0
    while abs(term) > Fraction(1, 10 ** (_UNIT_DIGITS + 2)) or k < 2:
        if k % 2 == 0:
            cos_value += term if (k // 2) % 2 == 0 else -term
        else:
            sin_value += term if (k // 2) % 2 == 0 else -term
        k += 1
        term = term * theta / k
    # theta was shifted by -pi
    return truncate_decimal(GaussianRational(-cos_value, -sin_value), -_UNIT_DIGITS)


def _lemma_radius2(dense: Sequence[GaussianRational], z: GaussianRational) -> Optional[Fraction]:
    """Squared radius n^2 |P(z)/P'(z)|^2 of a disk around z holding at least one root."""
    value, slope = univariate.eval_with_derivative(dense, z)
    if not slope:
        return None
    n = len(dense) - 1
    return n * n * gauss_norm(value) / gauss_norm(slope)


def _lemma_scores(dense, swarm) -> Dict[int, Fraction]:
    """Lemma radius of every swarm point that is not critical, by index."""
    scores: Dict[int, Fraction] = {}
    for index, z in enumerate(swarm):
        radius2 = _lemma_radius2(dense, z)
        if radius2 is not None:
            scores[index] = radius2
    return scores


def _select_disjoint(swarm, scores: Dict[int, Fraction]) -> List[int]:
    """Greedy pick of swarm points whose lemma disks are pairwise disjoint."""
    scored = sorted((radius2, swarm[index].sort_key(), index) for index, radius2 in scores.items())
    chosen: List[Tuple[Fraction, int]] = []
    for radius2, _, index in scored:
        z = swarm[index]
        if all(gauss_norm(z - swarm[j]) > 16 * max(radius2, r2) for r2, j in chosen):
            chosen.append((radius2, index))
    return [index for _, index in chosen]


def _settled_points(swarm, scores: Dict[int, Fraction], selection: Sequence[int],
                    scale2: Fraction, guard: int) -> Set[int]:
    """
    Swarm points that skip the next Newton sweep.

    A selected point is settled once its lemma disk is 10^(guard+1) times
    smaller than its distance to the other selected points (to the start
    circle when it is alone). Any point that close to a settled point is
    settled with it. Settled selected points pass their part of the
    separation test.
    """
    factor = Fraction(10) ** (2 * guard + 2)
    anchors: List[Tuple[int, Fraction]] = []
    for i in selection:
        d2 = min((gauss_norm(swarm[i] - swarm[j]) for j in selection if j != i), default=scale2)
        if scores[i] * factor < d2:
            anchors.append((i, d2 / factor))
    settled = {i for i, _ in anchors}
    for index, w in enumerate(swarm):
        if index not in settled and any(gauss_norm(w - swarm[i]) < reach2 for i, reach2 in anchors):
            settled.add(index)
    return settled


def _linear_configuration(dense) -> CertifiedConfiguration:
    root = -dense[0] / dense[1]
    return CertifiedConfiguration(tuple(dense), (root,), (None,))


def certify_roots(p: PolyLike, seed: int = RANDOM_SEED, guard: int = NEWTON_GUARD_DIGITS,
                  budget_factor: int = CERTIFY_BUDGET_FACTOR,
                  oversampling: int = CERTIFY_OVERSAMPLING) -> CertifiedConfiguration:
    """
    Certified approximations of all roots of a squarefree polynomial.

    A swarm of start points on a circle outside the Cauchy bound is driven by
    truncated Newton steps. Whenever the lemma disks of n swarm points are
    pairwise disjoint, each holds exactly one root; those points are tested
    against the separation certificate. Escaped or critical points restart at
    seeded random angles.
    Settled points (see _settled_points) keep their position, so their digit
    count stays bounded while slower roots converge.

    Args:
        p: Squarefree univariate polynomial of degree >= 1
        seed: Seed of the restart generator
        guard: Newton truncation guard digits
        budget_factor: Newton sweeps allowed per squared degree
        oversampling: Swarm points per root

    Returns:
        CertifiedConfiguration passing separation_test

    Raises:
        PreconditionError: If p is constant
        CertificationError: If the sweep budget runs out (carries the best configuration)
    """
    dense = as_dense(p)
    n = len(dense) - 1
    if n < 1:
        raise PreconditionError("cannot certify the roots of a constant polynomial")
    if n == 1:
        return _linear_configuration(dense)

    rng = random.Random(seed)
    bound = cauchy_bound(dense)
    start_radius = bound + 1
    escape2 = 4 * start_radius * start_radius
    size = oversampling * n
    swarm = [_unit_point(Fraction(j, size)) * start_radius for j in range(size)]

    def restart_point() -> GaussianRational:
        turn = Fraction(rng.randrange(10 ** 6), 10 ** 6)
        stretch = 1 + Fraction(rng.randrange(1, 1000), 1000)
        return _unit_point(turn) * (start_radius * stretch)

    budget = budget_factor * n * n
    best: List[GaussianRational] = []
    stalled = 0
    logger.debug(f"Certifying {n} roots, Cauchy bound {bound}, swarm of {size}")

    for sweep in range(budget):
        scores = _lemma_scores(dense, swarm)
        selection = _select_disjoint(swarm, scores)
        settled = _settled_points(swarm, scores, selection, escape2, guard)
        if len(selection) > len(best):
            best = [swarm[i] for i in selection]
            stalled = 0
        else:
            stalled += 1
        if len(selection) == n:
            points = sorted((swarm[i] for i in selection), key=GaussianRational.sort_key)
            passed, radii2 = separation_test(dense, points)
            if passed:
                logger.debug(f"Certified {n} roots after {sweep} sweeps")
                return CertifiedConfiguration(tuple(dense), tuple(points), tuple(radii2))
        if stalled > 4 * n:
            chosen = set(selection)
            swarm = [z if i in chosen else restart_point() for i, z in enumerate(swarm)]
            settled &= chosen
            stalled = 0
            logger.debug(f"Sweep {sweep}: restarting {size - len(chosen)} swarm points")
        next_swarm = []
        for i, z in enumerate(swarm):
            if i in settled:
                next_swarm.append(z)
                continue
            try:
                moved = newton_step(dense, z, guard)
            except PreconditionError:
                moved = restart_point()
            if gauss_norm(moved) > escape2:
                moved = restart_point()
            next_swarm.append(moved)
        swarm = next_swarm

    raise CertificationError(
        f"root certification exhausted {budget} Newton sweeps for degree {n}",
        best=tuple(sorted(best, key=GaussianRational.sort_key)),
    )
