"""
Tietze Simplification

Seeded heuristic search over Tietze transformations. Three moves are used:
eliminating a generator that occurs exactly once in some relator, shortening
a relator by a long cyclic subword of another, and replacing a generator by
its conjugate by another generator. Conjugation moves are accepted only when
they do not increase the total relator length; runs of equal-length moves
are bounded by the plateau tolerance.
"""
import random
from typing import Dict, List, Optional, Sequence, Set, Tuple

from config.settings import RANDOM_SEED, SIMPLIFY_BUDGET, SIMPLIFY_PLATEAU
from src.groups import words
from src.groups.presentation import Presentation
from src.groups.words import FreeWord
from src.utils.logger import logger

State = Tuple[Tuple[str, ...], Tuple[FreeWord, ...]]


def _normalize(relators: Sequence[FreeWord]) -> Tuple[FreeWord, ...]:
    """Cyclically reduce, drop trivial relators and duplicates up to rotation and inversion."""
    unique = {words.canonical_cyclic(r) for r in relators}
    unique.discard(words.IDENTITY)
    return tuple(sorted(unique, key=lambda r: (len(r), r)))


def _length(relators: Sequence[FreeWord]) -> int:
    return sum(len(r) for r in relators)


def _find_elimination(relators: Sequence[FreeWord]) -> Optional[Tuple[int, int]]:
    """(relator index, generator) for the shortest relator with a generator occurring once."""
    for index, relator in sorted(enumerate(relators), key=lambda item: (len(item[1]), item[0])):
        once = [g for g in {abs(letter) for letter in relator} if words.occurrences(relator, g) == 1]
        if once:
            return index, max(once)
    return None


def _eliminate(names: Tuple[str, ...], relators: Tuple[FreeWord, ...],
               index: int, generator: int) -> State:
    relator = relators[index]
    position = next(k for k, letter in enumerate(relator) if abs(letter) == generator)
    rotated = relator[position:] + relator[:position]
    rest = rotated[1:]
    # g^e * rest = 1
    image = words.inverse(rest) if rotated[0] > 0 else rest
    remaining = [words.substitute(r, {generator: image})
                 for k, r in enumerate(relators) if k != index]
    renumber = {g: ((g - 1 if g > generator else g),) for g in range(1, len(names) + 1) if g != generator}
    remaining = [words.substitute(r, renumber) for r in remaining]
    new_names = names[:generator - 1] + names[generator:]
    return new_names, _normalize(remaining)


def _reduce_by(s: FreeWord, r: FreeWord) -> Optional[FreeWord]:
    """Shorten the cyclic word s using the relator r, if a long piece of r occurs in s."""
    m, n = len(r), len(s)
    if not m or not n:
        return None
    doubled = s + s
    for candidate in words.rotations(r) + words.rotations(words.inverse(r)):
        for size in range(min(m, n), m // 2, -1):
            piece = candidate[:size]
            for start in range(n):
                if doubled[start:start + size] == piece:
                    rotated = doubled[start:start + n]
                    # piece = (rest of candidate)^-1
                    return words.cyclic_reduce(words.inverse(candidate[size:]) + rotated[size:])
    return None


def _shorten(relators: Tuple[FreeWord, ...]) -> Tuple[FreeWord, ...]:
    current = list(relators)
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            for j in range(len(current)):
                if i == j or not current[i] or not current[j]:
                    continue
                reduced = _reduce_by(current[j], current[i])
                if reduced is not None and len(reduced) < len(current[j]):
                    current[j] = reduced
                    changed = True
    return _normalize(current)


def _eliminate_all(names: Tuple[str, ...], relators: Tuple[FreeWord, ...]) -> State:
    while True:
        relators = _shorten(relators)
        found = _find_elimination(relators)
        if found is None:
            return names, relators
        names, relators = _eliminate(names, relators, *found)


def _conjugation_moves(state: State) -> List[State]:
    names, relators = state
    rank = len(names)
    candidates = []
    for g in range(1, rank + 1):
        for h in range(1, rank + 1):
            if h == g:
                continue
            for sign in (1, -1):
                image = (sign * h, g, -sign * h)
                moved = _normalize([words.substitute(r, {g: image}) for r in relators])
                candidates.append(_eliminate_all(names, moved))
    return candidates


def tietze_simplify(p: Presentation, seed: int = RANDOM_SEED, budget: int = SIMPLIFY_BUDGET,
                    plateau: int = SIMPLIFY_PLATEAU) -> Presentation:
    """
    Simplify a presentation by Tietze transformations.

    Args:
        p: Presentation to simplify
        seed: Seed for tie-breaking among equally good conjugation moves
        budget: Maximum number of conjugation moves tried
        plateau: Maximum number of consecutive length-preserving moves

    Returns:
        Shortest presentation reached, the earliest one on ties; isomorphic to
        the input and deterministic given the seed
    """
    rng = random.Random(seed)
    state = _eliminate_all(p.generators, _normalize(p.relators))
    seen: Set[State] = {state}
    best_state = state
    flat = 0
    for _ in range(budget):
        if len(state[0]) < 2 or not state[1]:
            break
        current = (_length(state[1]), len(state[0]))
        options: Dict[Tuple[int, int], List[State]] = {}
        for candidate in _conjugation_moves(state):
            if candidate in seen:
                continue
            options.setdefault((_length(candidate[1]), len(candidate[0])), []).append(candidate)
        if not options:
            break
        best = min(options)
        if best > current or (best == current and flat >= plateau):
            break
        choices = options[best]
        chosen = choices[rng.randrange(len(choices))]
        flat = flat + 1 if best == current else 0
        state = chosen
        seen.add(state)
        if best < (_length(best_state[1]), len(best_state[0])):
            best_state = state
    names, relators = best_state
    logger.debug(
        f"Tietze: {p.rank} generators / {_length(p.relators)} letters -> "
        f"{len(names)} generators / {_length(relators)} letters"
    )
    return Presentation(names, relators)
