"""
Free Group Words

A FreeWord is a tuple of nonzero integers: k stands for the k-th generator
(1-based) and -k for its inverse. All operations return freely reduced words.
"""
import re
from typing import Dict, List, Sequence, Tuple

from src.utils.errors import ParseError

FreeWord = Tuple[int, ...]

IDENTITY: FreeWord = ()

_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)('*)|(\S)")


def free_reduce(word: Sequence[int]) -> FreeWord:
    """Cancel adjacent x x^-1 pairs until none remain."""
    stack: List[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def inverse(word: Sequence[int]) -> FreeWord:
    return tuple(-letter for letter in reversed(word))


def multiply(*words: Sequence[int]) -> FreeWord:
    result: List[int] = []
    for word in words:
        result.extend(word)
    return free_reduce(result)


def power(word: Sequence[int], k: int) -> FreeWord:
    if k < 0:
        return power(inverse(word), -k)
    return free_reduce(tuple(word) * k)


def conjugate(word: Sequence[int], by: Sequence[int]) -> FreeWord:
    """by * word * by^-1"""
    return multiply(by, word, inverse(by))


def cyclic_reduce(word: Sequence[int]) -> FreeWord:
    word = free_reduce(word)
    start, end = 0, len(word)
    while end - start > 1 and word[start] == -word[end - 1]:
        start += 1
        end -= 1
    return word[start:end]


def rotations(word: Sequence[int]) -> List[FreeWord]:
    word = tuple(word)
    return [word[k:] + word[:k] for k in range(max(len(word), 1))]


def canonical_cyclic(word: Sequence[int]) -> FreeWord:
    """
    Representative of the word up to rotation and inversion.

    Two relators define the same normal closure contribution when their
    canonical forms agree.
    """
    word = cyclic_reduce(word)
    if not word:
        return IDENTITY
    return min(rotations(word) + rotations(inverse(word)))


def substitute(word: Sequence[int], images: Dict[int, Sequence[int]]) -> FreeWord:
    """Replace each generator k by images[k] (generators without an image are kept)."""
    result: List[int] = []
    for letter in word:
        image = images.get(abs(letter))
        if image is None:
            result.append(letter)
        else:
            result.extend(image if letter > 0 else inverse(image))
    return free_reduce(result)


def exponent_sums(word: Sequence[int], rank: int) -> List[int]:
    sums = [0] * rank
    for letter in word:
        sums[abs(letter) - 1] += 1 if letter > 0 else -1
    return sums


def occurrences(word: Sequence[int], generator: int) -> int:
    return sum(1 for letter in word if abs(letter) == generator)


def parse_word(text: str, names: Sequence[str]) -> FreeWord:
    """
    Parse a word in the given generator names, `'` marking an inverse.

    Tokens may be separated by spaces (`s t s' t'`). When every generator name
    is a single character, concatenated text such as `stst'` is read letter by
    letter. `1` and `e` denote the identity.

    Raises:
        ParseError: On an unknown generator name
    """
    text = text.strip()
    if text in ("", "1", "e") and "e" not in names:
        return IDENTITY
    index = {name: k + 1 for k, name in enumerate(names)}
    single = all(len(name) == 1 for name in names)
    letters: List[int] = []
    for match in _TOKEN.finditer(text):
        name, primes, other = match.groups()
        if other is not None:
            if other == "1":
                continue
            raise ParseError(f"unexpected character {other!r} in word {text!r}")
        pieces = list(name) if single and name not in index else [name]
        for k, piece in enumerate(pieces):
            if piece not in index:
                raise ParseError(f"unknown generator {piece!r} in word {text!r}")
            sign = -1 if k == len(pieces) - 1 and len(primes) % 2 else 1
            letters.append(sign * index[piece])
    return free_reduce(letters)


def format_word(word: Sequence[int], names: Sequence[str]) -> str:
    if not word:
        return "1"
    return " ".join(names[abs(letter) - 1] + ("'" if letter < 0 else "") for letter in word)
