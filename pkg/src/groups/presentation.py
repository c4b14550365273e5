"""
Finite Group Presentations

Text format: a `gens: s t u` line, then one relator per line. A line may also
be a relation chain `lhs = rhs = ...`, which contributes lhs*rhs^-1 for each
consecutive pair. `#` starts a comment.
"""
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from src.groups import words
from src.groups.words import FreeWord
from src.utils.errors import ParseError, PreconditionError


@dataclass(frozen=True)
class Presentation:
    """Generators and cyclically reduced, nonempty relators."""

    generators: Tuple[str, ...]
    relators: Tuple[FreeWord, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(set(self.generators)) != len(self.generators):
            raise PreconditionError(f"duplicate generator names in {self.generators}")
        reduced = []
        for relator in self.relators:
            relator = words.cyclic_reduce(relator)
            if not relator:
                continue
            if any(abs(letter) > len(self.generators) for letter in relator):
                raise PreconditionError(f"relator {relator} uses an undeclared generator")
            reduced.append(relator)
        object.__setattr__(self, "relators", tuple(reduced))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> FreeWord:
        return words.parse_word(text, self.generators)

    def format_word(self, word: Sequence[int]) -> str:
        return words.format_word(word, self.generators)

    def with_relators(self, extra: Iterable[Sequence[int]]) -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(tuple(r) for r in extra))

    def __str__(self):
        return format_presentation(self)


def total_length(p: Presentation) -> int:
    return sum(len(relator) for relator in p.relators)


def with_quadratic_relators(p: Presentation) -> Presentation:
    """Add g^2 for every generator g."""
    return p.with_relators((k, k) for k in range(1, p.rank + 1))


def _parse_relation(line: str, names: Sequence[str], number: int) -> List[FreeWord]:
    sides = [side.strip() for side in line.split("=")]
    if any(not side for side in sides):
        raise ParseError(f"empty side in relation {line!r}", line=number)
    try:
        members = [words.parse_word(side, names) for side in sides]
    except ParseError as exc:
        raise ParseError(str(exc), line=number) from exc
    if len(members) == 1:
        return members
    return [words.multiply(a, words.inverse(b)) for a, b in zip(members, members[1:])]


def parse_presentation(text: str) -> Presentation:
    """
    Parse the presentation text format.

    Raises:
        ParseError: On a missing `gens:` header or malformed words, with the line number
    """
    generators = None
    relators: List[FreeWord] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if generators is None:
            if not line.startswith("gens:"):
                raise ParseError("expected a 'gens:' header", line=number)
            generators = tuple(line[len("gens:"):].split())
            if len(set(generators)) != len(generators):
                raise ParseError("duplicate generator names", line=number)
            continue
        relators.extend(_parse_relation(line, generators, number))
    if generators is None:
        raise ParseError("empty presentation")
    return Presentation(generators, tuple(relators))


def format_presentation(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.generators)]
    lines += [p.format_word(relator) for relator in p.relators]
    return "\n".join(lines) + "\n"
