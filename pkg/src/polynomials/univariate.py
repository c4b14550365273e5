"""
Dense univariate polynomial helpers.

Coefficient lists are stored lowest degree first. Lists of GaussianRational
serve the root certification and monodromy code; lists of Fraction carry the
real safety polynomials and their Sturm and Descartes tests.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.numerics.gaussian import ZERO, GaussianRational

Dense = List[GaussianRational]
RealDense = List[Fraction]


def trim(p: Sequence) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def horner(p: Sequence, z):
    """Evaluate p at z (works for Gaussian or real coefficient lists)."""
    result = ZERO if isinstance(z, GaussianRational) else Fraction(0)
    for c in reversed(p):
        result = result * z + c
    return result


def eval_with_derivative(p: Sequence, z) -> Tuple[object, object]:
    """Return (p(z), p'(z)) in one Horner pass."""
    value = ZERO if isinstance(z, GaussianRational) else Fraction(0)
    slope = value
    for c in reversed(p):
        slope = slope * z + value
        value = value * z + c
    return value, slope


def derivative(p: Sequence) -> list:
    return [c * k for k, c in enumerate(p)][1:]


def add(p: Sequence, q: Sequence) -> list:
    if len(p) < len(q):
        p, q = q, p
    result = list(p)
    for k, c in enumerate(q):
        result[k] = result[k] + c
    return trim(result)


def sub(p: Sequence, q: Sequence) -> list:
    return add(p, [-c for c in q])


def mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    zero = p[0] * 0
    result = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            result[i + j] = result[i + j] + a * b
    return trim(result)


def scale(p: Sequence, factor) -> list:
    return trim([c * factor for c in p])


def divmod_dense(a: Sequence, b: Sequence) -> Tuple[list, list]:
    """Polynomial long division over a field."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    remainder = trim(a)
    if len(remainder) < len(b):
        return [], remainder
    lead_inv = 1 / b[-1]
    quotient = [b[-1] * 0] * (len(remainder) - len(b) + 1)
    while len(remainder) >= len(b) and remainder:
        shift = len(remainder) - len(b)
        factor = remainder[-1] * lead_inv
        quotient[shift] = factor
        for k, c in enumerate(b):
            remainder[shift + k] = remainder[shift + k] - c * factor
        remainder = trim(remainder)
    return trim(quotient), remainder


def monic(p: Sequence) -> list:
    p = trim(p)
    if not p:
        return p
    lead_inv = 1 / p[-1]
    return [c * lead_inv for c in p]


def gcd(a: Sequence, b: Sequence) -> list:
    """Monic greatest common divisor by the Euclidean algorithm."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_dense(a, b)[1]
    return monic(a)


def exact_quotient(a: Sequence, b: Sequence) -> list:
    quotient, remainder = divmod_dense(a, b)
    if remainder:
        raise ArithmeticError("polynomial division is not exact")
    return quotient


def squarefree(p: Sequence) -> list:
    """p / gcd(p, p'); keeps the leading coefficient of p."""
    p = trim(p)
    if len(p) <= 1:
        return p
    return exact_quotient(p, gcd(p, derivative(p)))


def is_squarefree(p: Sequence) -> bool:
    return len(gcd(p, derivative(p))) <= 1


def compose_affine(p: Sequence, a, b) -> list:
    """Coefficients of p(a + b*t) in t."""
    result: list = []
    for c in reversed(p):
        # result <- result * (a + b*t) + c
        shifted = [x * a for x in result] + ([result[-1] * 0] if result else [])
        for k, x in enumerate(result):
            shifted[k + 1] = shifted[k + 1] + x * b
        result = add(shifted, [c])
    return result


def real_imag_parts(p: Sequence[GaussianRational]) -> Tuple[RealDense, RealDense]:
    """Split a Gaussian coefficient list into its real and imaginary coefficient lists."""
    return trim([c.re for c in p]), trim([c.im for c in p])


def to_gaussian(p: Sequence) -> Dense:
    return [GaussianRational.coerce(c) for c in p]


# Real polynomials: positivity certificates


def descartes_transform(q: RealDense, t0: Fraction) -> RealDense:
    """
    Coefficients of (1+s)^d * q(t0*s/(1+s)).

    s in [0, inf) maps onto t in [0, t0); the value at s = inf is q(t0).
    """
    q = trim(q)
    d = len(q) - 1
    if d < 0:
        return []
    result = [Fraction(0)] * (d + 1)
    binomials = [[Fraction(1)]]
    for m in range(1, d + 1):
        prev = binomials[-1]
        binomials.append([Fraction(1)] + [prev[j - 1] + prev[j] for j in range(1, m)] + [Fraction(1)])
    power = Fraction(1)
    for k, c in enumerate(q):
        if c:
            row = binomials[d - k]
            for j, b in enumerate(row):
                result[k + j] += c * power * b
        power *= t0
    return result


def positive_by_descartes(q: RealDense, t0: Fraction) -> bool:
    """True when the transform certifies q > 0 on the closed interval [0, t0]."""
    coefficients = descartes_transform(q, t0)
    if not coefficients:
        return False
    if coefficients[0] <= 0 or coefficients[-1] <= 0:
        return False
    return all(c >= 0 for c in coefficients)


def sturm_sequence(p: RealDense) -> List[RealDense]:
    p = trim(p)
    sequence = [p, trim(derivative(p))]
    while sequence[-1]:
        remainder = divmod_dense(sequence[-2], sequence[-1])[1]
        sequence.append([-c for c in remainder])
    return [s for s in sequence if s]


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: RealDense, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    p = trim(p)
    if len(p) <= 1:
        return 0
    sequence = sturm_sequence(p)
    return (_sign_changes([horner(s, Fraction(lo)) for s in sequence])
            - _sign_changes([horner(s, Fraction(hi)) for s in sequence]))


def positive_by_sturm(q: RealDense, t0: Fraction) -> bool:
    """Exact check that q > 0 on [0, t0] via a Sturm root count."""
    q = trim(q)
    if not q or horner(q, Fraction(0)) <= 0:
        return False
    return count_real_roots(q, Fraction(0), Fraction(t0)) == 0
