"""
Polynomial Matrices

Square matrices of MultiPoly entries over a shared variable list, with the
fraction-free (Bareiss) determinant used for discriminant matrices,
Sylvester matrices and Hessians.
"""
from typing import List, Sequence

from src.polynomials.multipoly import MultiPoly, parse_poly
from src.utils.errors import PreconditionError


class PolyMatrix:
    """Square matrix of polynomials over one variable list."""

    def __init__(self, rows: Sequence[Sequence[MultiPoly]]):
        self.rows: List[List[MultiPoly]] = [list(row) for row in rows]
        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise PreconditionError("PolyMatrix must be square")
        variables = {entry.variables for row in self.rows for entry in row}
        if len(variables) > 1:
            raise PreconditionError(f"PolyMatrix entries use different variable lists: {variables}")
        self.variables = variables.pop() if variables else ()

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.rows[i][j]

    def scaled(self, factor) -> "PolyMatrix":
        return PolyMatrix([[entry.scale(factor) for entry in row] for row in self.rows])

    @classmethod
    def from_text(cls, rows: Sequence[Sequence[str]], variables: Sequence[str], prefactor=1) -> "PolyMatrix":
        """Parse a matrix from rows of polynomial strings, scaling every entry by prefactor."""
        return cls([[parse_poly(text, variables).scale(prefactor) for text in row] for row in rows])

    def determinant(self) -> MultiPoly:
        return det_bareiss(self)

    def __repr__(self):
        return f"PolyMatrix(size={self.size}, variables={self.variables})"


def det_bareiss(matrix: PolyMatrix) -> MultiPoly:
    """
    Exact determinant by fraction-free Gaussian elimination.

    Every intermediate division is exact (Sylvester's identity), so entries
    stay polynomial. A zero pivot is replaced by swapping in a lower row.

    Args:
        matrix: Square polynomial matrix

    Returns:
        Determinant as a MultiPoly over the matrix variables
    """
    n = matrix.size
    if n == 0:
        return MultiPoly.constant(1, ())
    a = [list(row) for row in matrix.rows]
    sign = 1
    previous = None
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly(matrix.variables)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = value if previous is None else value.divide_exact(previous)
            a[i][k] = MultiPoly(matrix.variables)
        previous = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det
