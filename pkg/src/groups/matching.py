"""
Presentation comparison up to generator renaming.

A decidable sufficient condition for isomorphism, used for regression checks
against known presentations.
"""
from collections import Counter
from itertools import permutations

from src.groups import words
from src.groups.presentation import Presentation


def _relator_multiset(relators, images) -> Counter:
    return Counter(words.canonical_cyclic(words.substitute(r, images)) for r in relators)


def presentations_match(p: Presentation, q: Presentation) -> bool:
    """
    True iff some bijection of generators, possibly composed with inverting
    every generator, maps p's relators onto q's up to rotation, free
    reduction and inversion of single relators.
    """
    if p.rank != q.rank:
        return False
    target = Counter(words.canonical_cyclic(r) for r in q.relators)
    lengths = sorted(len(words.canonical_cyclic(r)) for r in p.relators)
    if lengths != sorted(len(r) for r in target.elements()):
        return False
    for perm in permutations(range(1, q.rank + 1)):
        for sign in (1, -1):
            images = {g: (sign * perm[g - 1],) for g in range(1, p.rank + 1)}
            if _relator_multiset(p.relators, images) == target:
                return True
    return False
