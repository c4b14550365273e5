"""
Tests for the Smith normal form and abelianizations
"""
import random

import numpy as np

from src.groups.abelian import abelianization, exgcd, format_abelianization, smith_normal_form
from src.groups.presentation import parse_presentation


def test_exgcd():
    for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (-3, -9)]:
        M = exgcd(a, b)
        g = M @ np.array([a, b], dtype=object)
        assert abs(g[0]) == np.gcd(a, b)
        assert g[1] == 0
        assert M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] == 1


def test_smith_normal_form_examples():
    assert smith_normal_form([[3, 0], [0, 5]]) == (1, 15)
    assert smith_normal_form([[2, 4], [6, 8]]) == (2, 4)
    assert smith_normal_form([[0, 0], [0, 0]]) == ()
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == (2, 6, 12)


def test_smith_normal_form_invariants():
    rng = random.Random(31)
    for _ in range(50):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        A = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        diagonal = smith_normal_form(A)
        for a, b in zip(diagonal, diagonal[1:]):
            assert b % a == 0
        assert len(diagonal) == np.linalg.matrix_rank(np.array(A, dtype=float))
        if rows == cols:
            product = 1
            for d in diagonal:
                product *= d
            det = round(abs(np.linalg.det(np.array(A, dtype=float))))
            assert product == det or (det == 0 and len(diagonal) < rows)


def test_abelianization_examples():
    assert abelianization(parse_presentation("gens: a b\naba = bab\n")) == ((), 1)
    assert abelianization(parse_presentation("gens: a b\n")) == ((), 2)
    assert abelianization(parse_presentation("gens: a b\naa\nbbbb\n")) == ((2, 4), 0)
    assert abelianization(parse_presentation("gens: s t\nss\ntt\nststst\n")) == ((2,), 0)


def test_format_abelianization():
    assert format_abelianization((2,), 1) == "Z/2 x Z"
    assert format_abelianization((), 3) == "Z^3"
    assert format_abelianization((), 0) == "1"
    assert format_abelianization((2, 6), 0) == "Z/2 x Z/6"
