"""
Smith Normal Form and Abelianization

Integer matrices are handled as numpy object arrays so entries stay exact
Python ints. Rows and columns are cleared with unimodular 2x2 steps from the
extended Euclidean algorithm; the resulting diagonal is then normalized into
the divisibility chain.
"""
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np

from src.groups import words
from src.groups.presentation import Presentation


def exgcd(a: int, b: int) -> np.ndarray:
    """
    2x2 integer matrix M of determinant 1 with M @ [a, b] = [gcd(a, b), 0].
    """
    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    a, b = a * a_sign, b * b_sign
    M = np.array([[b, 0, 1], [a, 1, 0]], dtype=object)
    while M[1, 0] != 0:
        q = M[0, 0] // M[1, 0]
        M[0] -= q * M[1]
        M = M[::-1]
    g = M[0, 0]
    M = M[:, 1:] * np.array([a_sign, b_sign], dtype=object)
    if g != 0:
        M[1] = [-b_sign * b // g, a_sign * a // g]
    return M


def _diagonalize(A: np.ndarray) -> np.ndarray:
    D = np.array(A, dtype=object)
    if D.size == 0:
        return D

    def clear_row(i: int) -> bool:
        if (D[i, i + 1:] == 0).all():
            return False
        for j in range(i + 1, D.shape[1]):
            M = exgcd(D[i, i], D[i, j]).T
            D[:, [i, j]] = D[:, [i, j]] @ M
        return True

    def clear_col(i: int) -> bool:
        if (D[i + 1:, i] == 0).all():
            return False
        for j in range(i + 1, D.shape[0]):
            M = exgcd(D[i, i], D[j, i])
            D[[i, j]] = M @ D[[i, j]]
        return True

    for i in range(min(D.shape)):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass
    return D


def smith_normal_form(A) -> Tuple[int, ...]:
    """
    Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix.

    Args:
        A: Integer matrix (nested lists or array)

    Returns:
        Positive invariants in divisibility order; zero matrices give ()
    """
    D = _diagonalize(np.array(A, dtype=object))
    if D.ndim != 2:
        return ()
    diagonal: List[int] = [abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0]
    # gcd/lcm exchanges keep the product and enforce divisibility
    for i in range(len(diagonal)):
        for j in range(i + 1, len(diagonal)):
            a, b = diagonal[i], diagonal[j]
            g = gcd(a, b)
            diagonal[i], diagonal[j] = g, a * b // g
    return tuple(diagonal)


def relation_matrix(p: Presentation) -> List[List[int]]:
    """Exponent-sum row of every relator."""
    return [words.exponent_sums(r, p.rank) for r in p.relators]


def abelianization(p: Presentation) -> Tuple[Tuple[int, ...], int]:
    """
    Cyclic decomposition of the abelianized group.

    Returns:
        (orders of the finite cyclic factors > 1, free rank)
    """
    rows = relation_matrix(p)
    invariants = smith_normal_form(rows) if rows and p.rank else ()
    torsion = tuple(d for d in invariants if d > 1)
    return torsion, p.rank - len(invariants)


def format_abelianization(torsion: Sequence[int], free_rank: int) -> str:
    factors = [f"Z/{d}" for d in torsion]
    if free_rank == 1:
        factors.append("Z")
    elif free_rank > 1:
        factors.append(f"Z^{free_rank}")
    return " x ".join(factors) if factors else "1"
