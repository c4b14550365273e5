"""
Todd-Coxeter Coset Enumeration

HLT-style enumeration on a Schreier graph kept as a union-find structure:
`labels[c] <= c` points towards the representative of a coset, `neighbors[c]`
holds one entry per table column with SENTINEL for undefined edges, and
coincidences are merged with an explicit work stack.

Every generator owns a column and, unless a relator g^2 makes it an
involution, so does its inverse. Defining an edge always defines the reverse
edge as well.
"""
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import MAX_COSETS
from src.groups import words
from src.groups.presentation import Presentation
from src.groups.words import FreeWord
from src.utils.errors import CosetOverflowError, InternalAssertionError, PreconditionError
from src.utils.logger import logger

SENTINEL = -1

STRATEGIES = ("hlt", "hlt+lookahead")


@dataclass
class CosetTable:
    """Complete coset table: row c, column of letter l holds the coset c*l."""

    table: np.ndarray
    columns: Dict[int, int]

    @property
    def count(self) -> int:
        return int(self.table.shape[0])

    def act(self, coset: int, word: Sequence[int]) -> int:
        for letter in word:
            coset = int(self.table[coset, self.columns[letter]])
        return coset

    def permutation(self, word: Sequence[int]) -> np.ndarray:
        """Image of every coset under right multiplication by the word."""
        image = np.arange(self.count)
        for letter in word:
            image = self.table[image, self.columns[letter]]
        return image


def _column_layout(p: Presentation) -> Tuple[Dict[int, int], List[int]]:
    """Letter -> column, and column -> inverse column."""
    involutions = {abs(r[0]) for r in p.relators if len(r) == 2 and r[0] == r[1]}
    columns: Dict[int, int] = {}
    inverse_column: List[int] = []
    for g in range(1, p.rank + 1):
        columns[g] = len(inverse_column)
        if g in involutions:
            columns[-g] = columns[g]
            inverse_column.append(columns[g])
        else:
            columns[-g] = columns[g] + 1
            inverse_column.extend([columns[g] + 1, columns[g]])
    return columns, inverse_column


class _Schreier:
    """Partial coset table under construction."""

    def __init__(self, columns: Dict[int, int], inverse_column: List[int]):
        self.columns = columns
        self.inverse_column = inverse_column
        self.ncols = len(inverse_column)
        self.labels: List[int] = []
        self.neighbors: List[List[int]] = []
        self.live = 0
        self.start = self.add_vertex()

    def get_label(self, c: int) -> int:
        labels = self.labels
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def add_vertex(self) -> int:
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append([SENTINEL] * self.ncols)
        self.live += 1
        return c

    def define(self, c: int, column: int, target: int) -> None:
        self.neighbors[c][column] = target
        back = self.inverse_column[column]
        if self.neighbors[target][back] == SENTINEL:
            self.neighbors[target][back] = c
        else:
            self.unify(self.neighbors[target][back], c)

    def unify(self, c1: int, c2: int) -> None:
        labels = self.labels
        neighbors = self.neighbors
        to_unify = [(c1, c2)]
        while to_unify:
            c1, c2 = to_unify.pop()
            c1 = self.get_label(c1)
            c2 = self.get_label(c2)
            if c1 == c2:
                continue
            c1, c2 = min(c1, c2), max(c1, c2)
            labels[c2] = c1
            self.live -= 1
            row1, row2 = neighbors[c1], neighbors[c2]
            for d in range(self.ncols):
                n1, n2 = row1[d], row2[d]
                if n1 == SENTINEL:
                    row1[d] = n2
                elif n2 != SENTINEL:
                    to_unify.append((n1, n2))

    def follow_step(self, c: int, column: int) -> int:
        c = self.get_label(c)
        target = self.neighbors[c][column]
        if target == SENTINEL:
            target = self.add_vertex()
            self.define(c, column, target)
        return self.get_label(target)

    def follow_path(self, c: int, word: Sequence[int]) -> int:
        c = self.get_label(c)
        for letter in word:
            c = self.follow_step(c, self.columns[letter])
        return c

    def scan(self, c: int, word: Sequence[int]) -> None:
        """Trace word from c without defining cosets; close a gap of one letter or merge."""
        columns, neighbors = self.columns, self.neighbors
        f, i = self.get_label(c), 0
        b, j = f, len(word) - 1
        while i <= j:
            nxt = neighbors[f][columns[word[i]]]
            if nxt == SENTINEL:
                break
            f, i = self.get_label(nxt), i + 1
        if i > j:
            if f != b:
                self.unify(f, b)
            return
        while j >= i:
            prev = neighbors[b][columns[-word[j]]]
            if prev == SENTINEL:
                break
            b, j = self.get_label(prev), j - 1
        if j < i:
            self.unify(f, b)
        elif i == j:
            self.define(f, columns[word[i]], b)

    def lookahead(self, relators: Sequence[FreeWord]) -> None:
        before = self.live
        for c in range(len(self.labels)):
            if self.labels[c] != c:
                continue
            for relator in relators:
                if self.labels[c] != c:
                    break
                self.scan(c, relator)
        logger.debug(f"Lookahead: {before} -> {self.live} live cosets")

    def compress(self, columns: Dict[int, int]) -> CosetTable:
        lookup: Dict[int, int] = {}
        for c in range(len(self.labels)):
            if self.get_label(c) == c:
                lookup[c] = len(lookup)
        table = np.empty((len(lookup), self.ncols), dtype=np.int64)
        for c, row in lookup.items():
            for d, n in enumerate(self.neighbors[c]):
                if n == SENTINEL:
                    raise InternalAssertionError(f"coset {row} has an undefined entry")
                table[row, d] = lookup[self.get_label(n)]
        return CosetTable(table, dict(columns))


def todd_coxeter(p: Presentation, subgroup_gens: Sequence[FreeWord] = (),
                 max_cosets: int = MAX_COSETS, strategy: str = "hlt+lookahead",
                 seed: Optional[int] = None) -> Tuple[int, CosetTable]:
    """
    Enumerate the cosets of the subgroup generated by subgroup_gens.

    Args:
        p: Presentation of the group
        subgroup_gens: Generators of the subgroup (empty for the trivial subgroup)
        max_cosets: Limit on simultaneously live cosets
        strategy: "hlt" or "hlt+lookahead"
        seed: When given, relators are processed in a seeded random order

    Returns:
        (index, complete CosetTable); coset 0 is the subgroup itself

    Raises:
        CosetOverflowError: If the limit is exceeded
    """
    if strategy not in STRATEGIES:
        raise PreconditionError(f"unknown coset enumeration strategy {strategy!r}")
    columns, inverse_column = _column_layout(p)
    relators = [r for r in p.relators
                if not (len(r) == 2 and r[0] == r[1] and columns[r[0]] == columns[-r[0]])]
    relators.sort(key=len)
    if seed is not None:
        random.Random(seed).shuffle(relators)
    graph = _Schreier(columns, inverse_column)

    for h in subgroup_gens:
        graph.unify(graph.follow_path(graph.start, words.free_reduce(h)), graph.start)

    to_visit = 0
    while to_visit < len(graph.labels):
        c = graph.get_label(to_visit)
        if c == to_visit:
            for relator in relators:
                graph.unify(graph.follow_path(c, relator), c)
                c = graph.get_label(c)
            for d in range(graph.ncols):
                graph.follow_step(c, d)
                c = graph.get_label(c)
        to_visit += 1
        if graph.live > max_cosets:
            if strategy == "hlt+lookahead":
                graph.lookahead(relators)
            if graph.live > max_cosets:
                raise CosetOverflowError(max_cosets)

    table = graph.compress(columns)
    for relator in relators:
        if not np.array_equal(table.permutation(relator), np.arange(table.count)):
            raise InternalAssertionError("relator acts nontrivially on the final coset table")
    logger.debug(f"Coset enumeration: index {table.count}, {len(graph.labels)} cosets defined")
    return table.count, table


def group_order(p: Presentation, max_cosets: int = MAX_COSETS, strategy: str = "hlt+lookahead",
                seed: Optional[int] = None) -> int:
    index, _ = todd_coxeter(p, (), max_cosets, strategy, seed)
    return index


def central_in_quotient(p: Presentation, extra_relators: Sequence[FreeWord], w: FreeWord,
                        max_cosets: int = MAX_COSETS, table: Optional[CosetTable] = None) -> bool:
    """
    Whether w maps to a central element of the finite group p + extra_relators.

    The regular representation on the cosets of the trivial subgroup is
    faithful, so w is central iff its permutation commutes with every
    generator's permutation. A table already enumerated for the trivial
    subgroup of the same group may be passed in.
    """
    if table is None:
        _, table = todd_coxeter(p.with_relators(extra_relators), (), max_cosets)
    image = table.permutation(w)
    for g in range(1, p.rank + 1):
        generator = table.permutation((g,))
        if not np.array_equal(generator[image], image[generator]):
            return False
    return True
