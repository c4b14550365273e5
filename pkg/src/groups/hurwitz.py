"""
Hurwitz action of braids on tuples of free-group words, and the Van Kampen
presentation built from loop braids.
"""
import string
from typing import List, Sequence, Tuple

from src.groups import words
from src.groups.presentation import Presentation
from src.groups.words import FreeWord
from src.monodromy.braid import BraidWord
from src.utils.errors import PreconditionError
from src.utils.logger import logger


def hurwitz_act(braid: BraidWord, tuple_of_words: Sequence[FreeWord]) -> Tuple[FreeWord, ...]:
    """
    Apply a braid to an n-tuple of words, letters left to right.

    sigma_i sends (w_i, w_(i+1)) to (w_i w_(i+1) w_i^-1, w_i); sigma_i^-1 sends
    (u, v) to (v, v^-1 u v).

    Raises:
        PreconditionError: If the tuple length differs from the string count
    """
    if len(tuple_of_words) != braid.strands:
        raise PreconditionError(
            f"braid on {braid.strands} strings cannot act on {len(tuple_of_words)} words"
        )
    current: List[FreeWord] = [words.free_reduce(w) for w in tuple_of_words]
    for letter in braid.letters:
        i = abs(letter) - 1
        u, v = current[i], current[i + 1]
        if letter > 0:
            current[i], current[i + 1] = words.conjugate(v, u), u
        else:
            current[i], current[i + 1] = v, words.conjugate(u, words.inverse(v))
    return tuple(current)


def default_generator_names(n: int) -> Tuple[str, ...]:
    letters = string.ascii_lowercase
    if n <= len(letters):
        return tuple(letters[:n])
    return tuple(f"x{k}" for k in range(1, n + 1))


def vankampen(n: int, loop_braids: Sequence[BraidWord]) -> Presentation:
    """
    Presentation of the complement from the braids of the meridian loops.

    Generators are the fiber meridians x_1..x_n; each loop braid beta
    contributes x_j^-1 * beta(x_j) for every j, with trivial relators dropped.
    """
    generators = tuple((k,) for k in range(1, n + 1))
    relators: List[FreeWord] = []
    seen = set()
    for braid in loop_braids:
        if braid.strands != max(n, 1):
            raise PreconditionError(f"loop braid on {braid.strands} strings, expected {n}")
        if n == 0:
            continue
        images = hurwitz_act(braid, generators)
        for j, image in enumerate(images):
            relator = words.cyclic_reduce(words.multiply(words.inverse(generators[j]), image))
            if not relator:
                continue
            key = words.canonical_cyclic(relator)
            if key in seen:
                continue
            seen.add(key)
            relators.append(relator)
    logger.debug(f"Van Kampen presentation: {n} generators, {len(relators)} relators")
    return Presentation(default_generator_names(n), tuple(relators))
