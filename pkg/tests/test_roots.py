"""
Tests for truncated Newton steps, the separation certificate and root certification
"""
import random
from fractions import Fraction

import pytest

from src.numerics.gaussian import I, GaussianRational, gauss_norm
from src.polynomials import univariate
from src.polynomials.multipoly import parse_poly
from src.roots.certification import (
    cauchy_bound,
    certify_roots,
    newton_step,
    separation_test,
)
from src.utils.errors import CertificationError, PreconditionError


def X(text):
    return parse_poly(text, ("X",))


def g(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def planted(roots):
    dense = [g(1)]
    for r in roots:
        dense = univariate.mul(dense, [-r, g(1)])
    return dense


def assert_one_root_per_disk(configuration, roots):
    for i in range(configuration.degree):
        inside = [r for r in roots if configuration.contains(i, r)]
        assert len(inside) == 1


def test_newton_step_examples():
    assert newton_step(X("X^2 - 1"), g(2), guard=10) == g(Fraction(5, 4))
    assert newton_step(X("X^2 - 1"), g(1)) == g(1)
    with pytest.raises(PreconditionError):
        newton_step(X("X^2"), g(0))


def test_newton_step_truncates_relative_to_step():
    z = newton_step(X("X^2 - 2"), g(1), guard=2)
    # step -1/2: quantum 10^(-1-2)
    assert z == g(Fraction(3, 2))
    z = newton_step(X("X^2 - 2"), g(Fraction(3, 2)), guard=2)
    assert z.re * 10 ** 4 == int(z.re * 10 ** 4)
    assert abs(z.re - Fraction(17, 12)) <= Fraction(1, 2 * 10 ** 4)


def test_separation_test_examples():
    passed, radii2 = separation_test(X("X^2 - 1"), [g(1), g(-1)])
    assert passed
    assert radii2 == [1, 1]

    passed, radii2 = separation_test(X("X^2 - 1"), [g(Fraction(9, 10)), g(-1)])
    assert passed
    assert radii2[0] == Fraction(361, 400)

    passed, _ = separation_test(X("X^2 - 1"), [g(Fraction(1, 10)), g(Fraction(-1, 10))])
    assert not passed


def test_separation_test_fails_at_critical_point():
    passed, _ = separation_test(X("X^2 - 1"), [g(0), g(1)])
    assert not passed


def test_separation_test_preconditions():
    with pytest.raises(PreconditionError):
        separation_test(X("X^2 - 1"), [g(1)])
    with pytest.raises(PreconditionError):
        separation_test(X("X^2 - 1"), [g(1), g(1)])


def test_certify_linear_is_exact():
    configuration = certify_roots(X("X - (2 + 3*I)"))
    assert configuration.points == (g(2, 3),)


def test_certify_gaussian_roots():
    configuration = certify_roots(X("X^2 + 1"), seed=1)
    assert configuration.degree == 2
    assert_one_root_per_disk(configuration, [I, -I])


def test_certify_integer_roots():
    configuration = certify_roots(X("(X - 1)*(X - 2)*(X - 3)"), seed=1)
    assert_one_root_per_disk(configuration, [g(1), g(2), g(3)])
    passed, radii2 = separation_test(X("(X - 1)*(X - 2)*(X - 3)"), configuration.points)
    assert passed
    assert list(configuration.radii2) == radii2


def test_certified_disks_are_disjoint():
    configuration = certify_roots(planted([g(0), g(1, 1), g(-2, 1), g(3, -2)]), seed=5)
    points, radii2 = configuration.points, configuration.radii2
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            assert gauss_norm(points[i] - points[j]) / 4 >= max(radii2[i], radii2[j])


def test_certify_is_deterministic():
    p = planted([g(1, 2), g(-3), g(0, -1), g(2, 2)])
    assert certify_roots(p, seed=11) == certify_roots(p, seed=11)


def test_certified_points_within_cauchy_bound():
    p = planted([g(5, 5), g(-7), g(0, 9)])
    configuration = certify_roots(p, seed=2)
    bound = cauchy_bound(p)
    assert all(gauss_norm(x) <= bound * bound for x in configuration.points)


def test_converged_points_keep_short_digits():
    # the far roots converge long before the close pair separates
    roots = [g(0), g(Fraction(1, 100)), g(6), g(-6, 1)]
    configuration = certify_roots(planted(roots), seed=4)
    assert_one_root_per_disk(configuration, roots)
    for x in configuration.points:
        assert max(x.re.denominator.bit_length(), x.im.denominator.bit_length()) < 1000


def test_certify_rejects_constants():
    with pytest.raises(PreconditionError):
        certify_roots([g(3)])


def test_certify_budget_exhaustion():
    with pytest.raises(CertificationError) as info:
        certify_roots(planted([g(1), g(2), g(3)]), budget_factor=0)
    assert info.value.best == ()


def _planted_recovery(cases, seed):
    rng = random.Random(seed)
    for case in range(cases):
        degree = rng.randint(1, 8)
        roots = set()
        while len(roots) < degree:
            z = g(rng.randint(-7, 7), rng.randint(-7, 7))
            if gauss_norm(z) <= 100:
                roots.add(z)
        roots = sorted(roots, key=GaussianRational.sort_key)
        configuration = certify_roots(planted(roots), seed=case)
        if degree == 1:
            assert configuration.points == tuple(roots)
        else:
            assert_one_root_per_disk(configuration, roots)


def test_planted_root_recovery():
    _planted_recovery(20, seed=13)


@pytest.mark.slow
def test_planted_root_recovery_full():
    _planted_recovery(200, seed=17)
