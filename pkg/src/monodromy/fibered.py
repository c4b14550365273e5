"""
Curves viewed as families of univariate polynomials.

A FiberedCurve stores P(X, Y) as coefficient lists c_k(Y) of X^k so that
the fiber P(., y) and the restrictions t -> P(x, y0 + t*(y1 - y0)) are cheap
dense computations.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.numerics.gaussian import GaussianRational
from src.polynomials import univariate
from src.polynomials.multipoly import MultiPoly
from src.utils.errors import PreconditionError

Coefficients = Tuple[Tuple[GaussianRational, ...], ...]


def _horner_in_x(coefficients: Coefficients, x: GaussianRational) -> List[GaussianRational]:
    result: List[GaussianRational] = []
    for c in reversed(coefficients):
        result = univariate.add(univariate.scale(result, x), c)
    return result


@dataclass(frozen=True)
class FiberedCurve:
    """P(X, Y) = sum_k c_k(Y) X^k with dense c_k (lowest degree first)."""

    fiber_var: str
    base_var: str
    coefficients: Coefficients
    derivative_coefficients: Coefficients

    @classmethod
    def from_poly(cls, p: MultiPoly, fiber_var: str, base_var: Optional[str] = None) -> "FiberedCurve":
        """
        Split a bivariate polynomial along its fiber variable.

        Raises:
            PreconditionError: If p involves variables other than the two named
        """
        if base_var is None:
            others = [v for v in p.variables if v != fiber_var]
            if len(others) != 1:
                raise PreconditionError(f"cannot infer the base variable from {p.variables}")
            base_var = others[0]
        extra = [v for v in p.used_variables() if v not in (fiber_var, base_var)]
        if extra:
            raise PreconditionError(f"curve involves variables {extra} besides {fiber_var}, {base_var}")
        parts = p.coefficients_in(fiber_var)
        n = p.degree(fiber_var)
        zero = MultiPoly(p.variables)
        coefficients = tuple(
            tuple(parts.get(k, zero).to_dense(base_var)) for k in range(n + 1)
        )
        derivative = tuple(
            tuple(univariate.scale(coefficients[k], k)) for k in range(1, n + 1)
        )
        return cls(fiber_var, base_var, coefficients, derivative)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def fiber(self, y: GaussianRational) -> List[GaussianRational]:
        """Dense coefficients in X of P(X, y)."""
        return [univariate.horner(c, y) for c in self.coefficients]

    def along(self, x: GaussianRational, y0: GaussianRational, y1: GaussianRational) -> List[GaussianRational]:
        """Dense coefficients in t of P(x, y0 + t*(y1 - y0))."""
        return univariate.compose_affine(_horner_in_x(self.coefficients, x), y0, y1 - y0)

    def derivative_along(self, x: GaussianRational, y0: GaussianRational,
                         y1: GaussianRational) -> List[GaussianRational]:
        """Dense coefficients in t of dP/dX(x, y0 + t*(y1 - y0))."""
        return univariate.compose_affine(_horner_in_x(self.derivative_coefficients, x), y0, y1 - y0)
