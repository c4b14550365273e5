"""
Artin Braid Words

Braid words on n strings are tuples of nonzero integers: k stands for the
generator sigma_k exchanging the strings at positions k and k+1 (counted from
the left in real projection), -k for its inverse. Text form is the
space-separated integers, e.g. `1 -2 1`.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.numerics.gaussian import GaussianRational
from src.utils.errors import InternalAssertionError, ParseError, PreconditionError


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators of the braid group on `strands` strings."""

    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise PreconditionError(
                    f"braid letter {letter} out of range for {self.strands} strings"
                )

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise PreconditionError("cannot concatenate braids on different string counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-letter for letter in reversed(self.letters)))

    def permutation(self) -> Tuple[int, ...]:
        return braid_permutation(self.letters, self.strands)

    def __str__(self):
        return format_braid(self)


def braid_permutation(letters: Sequence[int], n: int) -> Tuple[int, ...]:
    """Map start position -> end position of each string under the braid."""
    at_position = list(range(n))
    for letter in letters:
        k = abs(letter)
        at_position[k - 1], at_position[k] = at_position[k], at_position[k - 1]
    final = [0] * n
    for position, string in enumerate(at_position):
        final[string] = position
    return tuple(final)


def format_braid(word: BraidWord) -> str:
    return " ".join(str(letter) for letter in word.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    try:
        letters = tuple(int(token) for token in text.split())
    except ValueError as exc:
        raise ParseError(f"malformed braid word {text!r}") from exc
    return BraidWord(strands, letters)


def format_braid_file(words: Sequence[BraidWord], strands: int) -> str:
    """Braid file: a `strings: n` header, then one loop braid per line (`e` for the empty braid)."""
    lines = [f"strings: {strands}"]
    lines += [format_braid(word) or "e" for word in words]
    return "\n".join(lines) + "\n"


def parse_braid_file(text: str) -> Tuple[int, List[BraidWord]]:
    """
    Parse a braid file; `#` starts a comment, blank lines are skipped and `e`
    denotes the empty braid.

    Raises:
        ParseError: On a missing header or malformed words, with the line number
    """
    strands = None
    words: List[BraidWord] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if strands is None:
            if not line:
                continue
            if not line.startswith("strings:"):
                raise ParseError("expected a 'strings: n' header", line=number)
            try:
                strands = int(line.split(":", 1)[1])
            except ValueError:
                raise ParseError("malformed string count", line=number) from None
            continue
        if not line:
            continue
        try:
            words.append(parse_braid("" if line == "e" else line, strands))
        except (ParseError, PreconditionError) as exc:
            raise ParseError(str(exc), line=number) from exc
    if strands is None:
        raise ParseError("empty braid file")
    return strands, words


def _position(a: GaussianRational, b: GaussianRational, t: Fraction) -> GaussianRational:
    return a + (b - a) * t


def lin_braid(before: Sequence[GaussianRational], after: Sequence[GaussianRational]) -> BraidWord:
    """
    Braid traced by strings moving linearly from before[i] to after[i].

    Strings are ordered by (re, im). Every pair whose order differs at the two
    ends crosses once in real projection; crossings are processed by time and,
    within one instant, by bubbling adjacent pairs from the left. The letter is
    positive iff the string coming from the left has strictly smaller imaginary
    part at the crossing.

    Raises:
        PreconditionError: If the point lists differ in length or repeat points
        InternalAssertionError: If two strings collide
    """
    n = len(before)
    if len(after) != n:
        raise PreconditionError("lin_braid needs the same number of points before and after")
    if len(set(before)) != n or len(set(after)) != n:
        raise PreconditionError("lin_braid needs pairwise distinct points")
    if n < 2:
        return BraidWord(max(n, 1))

    start_order = sorted(range(n), key=lambda i: before[i].sort_key())
    end_rank = {i: r for r, i in enumerate(sorted(range(n), key=lambda i: after[i].sort_key()))}
    start_rank = {i: r for r, i in enumerate(start_order)}

    events: Dict[Fraction, set] = {}
    for i in range(n):
        for j in range(i + 1, n):
            if (start_rank[i] < start_rank[j]) == (end_rank[i] < end_rank[j]):
                continue
            velocity = (after[i].re - before[i].re) - (after[j].re - before[j].re)
            if velocity == 0:
                raise InternalAssertionError(f"strings {i} and {j} collide")
            t = (before[j].re - before[i].re) / velocity
            events.setdefault(t, set()).add(frozenset((i, j)))

    order = list(start_order)
    letters: List[int] = []
    for t in sorted(events):
        pending = events[t]
        swapped = True
        while pending and swapped:
            swapped = False
            for k in range(n - 1):
                left, right = order[k], order[k + 1]
                pair = frozenset((left, right))
                if pair not in pending:
                    continue
                im_left = _position(before[left], after[left], t).im
                im_right = _position(before[right], after[right], t).im
                if im_left == im_right:
                    raise InternalAssertionError(f"strings {left} and {right} collide at t={t}")
                letters.append(k + 1 if im_left < im_right else -(k + 1))
                order[k], order[k + 1] = right, left
                pending.discard(pair)
                swapped = True
        if pending:
            raise InternalAssertionError(f"inconsistent crossing schedule at t={t}")
    return BraidWord(n, tuple(letters))
