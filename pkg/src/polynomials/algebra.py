"""
Polynomial Algebra

Resultants, discriminants, squarefree parts, substitution, Hessians and
weighted degrees for MultiPoly values.
"""
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Union

import sympy
from sympy.polys.domains import QQ, QQ_I

from src.numerics.gaussian import GaussianRational
from src.polynomials import univariate
from src.polynomials.matrix import PolyMatrix, det_bareiss
from src.polynomials.multipoly import MultiPoly
from src.utils.errors import PreconditionError
from src.utils.logger import logger


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> PolyMatrix:
    """
    Sylvester matrix of p and q in var.

    Rows hold shifted coefficient vectors, highest power first: deg q rows of
    p followed by deg p rows of q.
    """
    m, n = p.degree(var), q.degree(var)
    zero = MultiPoly(p.variables)
    p_coeffs = p.coefficients_in(var)
    q_coeffs = q.coefficients_in(var)
    size = m + n
    rows = []
    for shift in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[shift + (m - k)] = p_coeffs.get(k, zero)
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[shift + (n - k)] = q_coeffs.get(k, zero)
        rows.append(row)
    return PolyMatrix(rows)


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """
    Resultant of p and q with respect to var.

    Normalised so that Res(X - a, X - b) = a - b; the result does not involve var.

    Raises:
        PreconditionError: If either input is zero or constant in var
    """
    if p.is_zero() or q.is_zero():
        raise PreconditionError("resultant of a zero polynomial")
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise PreconditionError(f"resultant needs positive degree in {var!r}")
    return det_bareiss(sylvester_matrix(p, q, var))


def discriminant(p: MultiPoly, var: str) -> MultiPoly:
    """
    Discriminant (-1)^(d(d-1)/2) * Res(p, dp/dvar) / lc_var(p).

    Raises:
        PreconditionError: If p is zero or constant in var
    """
    if p.is_zero():
        raise PreconditionError("discriminant of the zero polynomial")
    d = p.degree(var)
    if d < 1:
        raise PreconditionError(f"discriminant needs positive degree in {var!r}")
    if d == 1:
        return MultiPoly.constant(1, p.variables)
    res = resultant(p, p.derivative(var), var)
    if (d * (d - 1) // 2) % 2:
        res = -res
    return res.divide_exact(p.leading_coefficient(var))


def _to_sympy(p: MultiPoly, var: str):
    generators = [var] + [v for v in p.variables if v != var]
    symbols = sympy.symbols(generators)
    order = [p.variables.index(v) for v in generators]
    gaussian = any(c.im for c in p.terms.values())
    data = {}
    for exponent, c in p.terms.items():
        value = sympy.Rational(c.re.numerator, c.re.denominator)
        if gaussian:
            value += sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
        data[tuple(exponent[i] for i in order)] = value
    return sympy.Poly.from_dict(data, *symbols, domain=QQ_I if gaussian else QQ), generators


def _from_sympy(poly, generators: Sequence[str], variables: Sequence[str]) -> MultiPoly:
    positions = [generators.index(v) for v in variables]
    terms = {}
    for monomial, coefficient in poly.terms():
        re_part, im_part = sympy.sympify(coefficient).as_real_imag()
        re_part, im_part = sympy.Rational(re_part), sympy.Rational(im_part)
        terms[tuple(monomial[p] for p in positions)] = GaussianRational(
            Fraction(int(re_part.p), int(re_part.q)), Fraction(int(im_part.p), int(im_part.q))
        )
    return MultiPoly(variables, terms)


def _normalize_in(p: MultiPoly, var: str) -> MultiPoly:
    lead = p.leading_coefficient(var)
    if lead.is_constant() and not lead.is_zero():
        return p.scale(lead.constant_term().inverse())
    return p


def squarefree_part(p: MultiPoly, var: str) -> MultiPoly:
    """
    Reduced polynomial: same roots as p, each with multiplicity one.

    Univariate inputs use exact Euclidean gcds; multivariate inputs are reduced
    with sympy over QQ or QQ<I>. When the leading coefficient in var is a
    constant it is normalised to 1.

    Raises:
        PreconditionError: If p is zero
    """
    if p.is_zero():
        raise PreconditionError("squarefree part of the zero polynomial")
    others = [v for v in p.used_variables() if v != var]
    if not others:
        dense = univariate.squarefree(p.to_dense(var))
        return _normalize_in(MultiPoly.from_dense(dense, var, p.variables), var)
    poly, generators = _to_sympy(p, var)
    logger.debug(f"Multivariate squarefree part over {poly.domain} in {len(generators)} variables")
    return _normalize_in(_from_sympy(poly.sqf_part(), generators, p.variables), var)


def is_squarefree(p: MultiPoly, var: str) -> bool:
    """True when p has no repeated factor depending on var (its discriminant is nonzero)."""
    if p.degree(var) < 1:
        return True
    return not discriminant(p, var).is_zero()


def substitute(p: MultiPoly, bindings: Mapping[str, MultiPoly],
               variables: Optional[Sequence[str]] = None) -> MultiPoly:
    """
    Simultaneous substitution var -> polynomial, fully expanded.

    Args:
        p: Polynomial to substitute into
        bindings: Images of (some of) p's variables, all over the target variable list
        variables: Target variable list (defaults to the bindings' list, else p's)

    Returns:
        Substituted polynomial over the target variables; unbound variables map to
        the target variable of the same name
    """
    if variables is None:
        images = list(bindings.values())
        variables = images[0].variables if images else p.variables
    variables = tuple(variables)
    images: List[MultiPoly] = []
    for name in p.variables:
        if name in bindings:
            image = bindings[name]
            if image.variables != variables:
                image = image.with_variables(variables)
            images.append(image)
        elif name in variables:
            images.append(MultiPoly.variable(name, variables))
        elif p.degree(name) > 0:
            raise PreconditionError(f"no binding for variable {name!r}")
        else:
            images.append(MultiPoly.constant(0, variables))
    power_cache: Dict[tuple, MultiPoly] = {}

    def power(i: int, k: int) -> MultiPoly:
        key = (i, k)
        if key not in power_cache:
            power_cache[key] = images[i] if k == 1 else power(i, k - 1) * images[i]
        return power_cache[key]

    result = MultiPoly(variables)
    for exponent, coefficient in p.terms.items():
        term = MultiPoly.constant(coefficient, variables)
        for i, k in enumerate(exponent):
            if k:
                term = term * power(i, k)
        result = result + term
    return result


def hessian_matrix(f: MultiPoly, variables: Sequence[str]) -> PolyMatrix:
    firsts = [f.derivative(v) for v in variables]
    return PolyMatrix([[first.derivative(v) for v in variables] for first in firsts])


def hessian_det(f: MultiPoly, variables: Sequence[str] = None) -> MultiPoly:
    """Determinant of the matrix of second partial derivatives of f."""
    return det_bareiss(hessian_matrix(f, variables or f.variables))


def weighted_degree(p: MultiPoly, weights: Union[Mapping[str, int], Sequence[int]]) -> Optional[int]:
    """
    Common weighted degree of all monomials of p.

    Args:
        p: Nonzero polynomial
        weights: Per-variable positive weights (mapping or aligned sequence)

    Returns:
        The weighted degree, or None when p is not quasi-homogeneous

    Raises:
        PreconditionError: If p is zero
    """
    if p.is_zero():
        raise PreconditionError("weighted degree of the zero polynomial")
    if isinstance(weights, Mapping):
        weights = [weights.get(v, 0) for v in p.variables]
    weights = list(weights)
    degrees = {sum(w * k for w, k in zip(weights, exponent)) for exponent in p.terms}
    return degrees.pop() if len(degrees) == 1 else None
