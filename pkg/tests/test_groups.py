"""
Tests for free-group words, presentations, the Hurwitz action, Tietze
simplification and presentation matching
"""
import random

import pytest

from src.groups import words
from src.groups.abelian import abelianization
from src.groups.hurwitz import hurwitz_act, vankampen
from src.groups.matching import presentations_match
from src.groups.presentation import (
    Presentation,
    format_presentation,
    parse_presentation,
    total_length,
    with_quadratic_relators,
)
from src.groups.tietze import tietze_simplify
from src.monodromy.braid import BraidWord
from src.utils.errors import ParseError, PreconditionError

TREFOIL = parse_presentation("gens: a b\naba = bab\n")


def random_word(rng, rank, length):
    return words.free_reduce([rng.choice([1, -1]) * rng.randint(1, rank) for _ in range(length)])


# Words


def test_free_reduce():
    assert words.free_reduce((1, -1, 2)) == (2,)
    assert words.free_reduce((1, 2, -2, -1)) == ()
    assert words.free_reduce((1, 2, -1)) == (1, 2, -1)


def test_cyclic_reduce_and_canonical_form():
    assert words.cyclic_reduce((-1, 2, 1)) == (2,)
    assert words.canonical_cyclic((2, 1)) == words.canonical_cyclic((1, 2))
    assert words.canonical_cyclic((1, 2)) == words.canonical_cyclic((-2, -1))
    assert words.canonical_cyclic((1, -1)) == words.IDENTITY


def test_substitute_and_power():
    assert words.substitute((1, 2, -1), {1: (2, 2)}) == (2,)
    assert words.power((1, 2), 2) == (1, 2, 1, 2)
    assert words.power((1, 2), -1) == (-2, -1)
    assert words.exponent_sums((1, 2, -1, 1, 1), 2) == [2, 1]


def test_parse_word():
    names = ("s", "t")
    assert words.parse_word("stst'", names) == (1, 2, 1, -2)
    assert words.parse_word("s t s' t'", names) == (1, 2, -1, -2)
    assert words.parse_word("s''", names) == (1,)
    assert words.parse_word("1", names) == ()
    assert words.parse_word("x1 x2'", ("x1", "x2")) == (1, -2)
    with pytest.raises(ParseError):
        words.parse_word("sv", names)


def test_format_word():
    assert words.format_word((1, -2), ("a", "b")) == "a b'"
    assert words.format_word((), ("a", "b")) == "1"


# Presentations


def test_parse_presentation():
    assert TREFOIL.generators == ("a", "b")
    assert TREFOIL.relators == ((1, 2, 1, -2, -1, -2),)


def test_parse_presentation_chains_and_comments():
    p = parse_presentation("# G\ngens: s t u\n\nstu = tus = ust  # chain\nss\n")
    assert p.rank == 3
    assert len(p.relators) == 3
    assert p.relators[-1] == (1, 1)


def test_parse_presentation_errors():
    with pytest.raises(ParseError) as info:
        parse_presentation("gens: a\nab\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_presentation("aba = bab\n")
    with pytest.raises(ParseError):
        parse_presentation("gens: a a\n")
    with pytest.raises(ParseError):
        parse_presentation("gens: a b\na = \n")
    with pytest.raises(ParseError):
        parse_presentation("")


def test_presentation_validation():
    with pytest.raises(PreconditionError):
        Presentation(("a", "a"))
    with pytest.raises(PreconditionError):
        Presentation(("a",), ((2,),))
    assert Presentation(("a",), ((1, -1),)).relators == ()


def test_format_presentation_round_trip():
    p = parse_presentation("gens: s t u\nstst = tsts\ntut = utu\n")
    assert parse_presentation(format_presentation(p)) == p


def test_with_quadratic_relators():
    q = with_quadratic_relators(TREFOIL)
    assert q.relators[-2:] == ((1, 1), (2, 2))
    assert total_length(q) == 10


# Hurwitz action


def test_hurwitz_generator_action():
    a, b = (1,), (2,)
    assert hurwitz_act(BraidWord(2, (1,)), (a, b)) == ((1, 2, -1), (1,))
    assert hurwitz_act(BraidWord(2, (1, -1)), (a, b)) == (a, b)
    assert hurwitz_act(BraidWord(2, (-1, 1)), (a, b)) == (a, b)


def test_hurwitz_braid_relations():
    rng = random.Random(21)
    for _ in range(100):
        tuple4 = tuple(random_word(rng, 3, rng.randint(0, 6)) for _ in range(4))
        assert hurwitz_act(BraidWord(4, (1, 2, 1)), tuple4) == hurwitz_act(BraidWord(4, (2, 1, 2)), tuple4)
        assert hurwitz_act(BraidWord(4, (1, 3)), tuple4) == hurwitz_act(BraidWord(4, (3, 1)), tuple4)


def test_hurwitz_preserves_product():
    rng = random.Random(22)
    for _ in range(50):
        tuple3 = tuple(random_word(rng, 3, rng.randint(1, 5)) for _ in range(3))
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, 2) for _ in range(rng.randint(0, 8)))
        image = hurwitz_act(BraidWord(3, letters), tuple3)
        assert words.multiply(*image) == words.multiply(*tuple3)


def test_hurwitz_length_mismatch():
    with pytest.raises(PreconditionError):
        hurwitz_act(BraidWord(3, (1,)), ((1,), (2,)))


def test_vankampen_trefoil():
    p = vankampen(2, [BraidWord(2, (1, 1, 1))])
    assert p.rank == 2
    assert [len(r) for r in p.relators] == [6]
    assert presentations_match(p, TREFOIL)


def test_vankampen_node_and_trivial_braid():
    node = vankampen(2, [BraidWord(2, (1, 1))])
    assert presentations_match(node, parse_presentation("gens: a b\nab = ba\n"))
    free = vankampen(2, [BraidWord(2)])
    assert free.relators == ()


def test_vankampen_rejects_strand_mismatch():
    with pytest.raises(PreconditionError):
        vankampen(3, [BraidWord(2, (1,))])


# Tietze simplification


def test_tietze_eliminates_generator():
    p = tietze_simplify(parse_presentation("gens: a b\nb = a\n"))
    assert p.rank == 1
    assert p.relators == ()


def test_tietze_eliminates_chain():
    p = tietze_simplify(parse_presentation("gens: a b c\nb = a\nc = ab\naaa\n"))
    assert p.rank == 1
    assert [len(r) for r in p.relators] == [3]


def test_tietze_keeps_trefoil():
    raw = vankampen(2, [BraidWord(2, (1, 1, 1))])
    p = tietze_simplify(raw, seed=3)
    assert presentations_match(p, TREFOIL)


def test_tietze_is_deterministic():
    raw = vankampen(3, [BraidWord(3, (1, 1, 1)), BraidWord(3, (2, 2, 2)), BraidWord(3, (1, 2, -1))])
    assert tietze_simplify(raw, seed=5) == tietze_simplify(raw, seed=5)


def test_tietze_preserves_abelianization():
    rng = random.Random(23)
    for _ in range(20):
        relators = [random_word(rng, 3, rng.randint(2, 8)) for _ in range(3)]
        p = Presentation(("a", "b", "c"), tuple(relators))
        q = tietze_simplify(p, seed=1)
        assert q.rank <= p.rank
        assert abelianization(q) == abelianization(p)


# Matching


def test_presentations_match_up_to_renaming_and_inversion():
    p = parse_presentation("gens: a b\naba = bab\n")
    assert presentations_match(p, parse_presentation("gens: x y\nyxy = xyx\n"))
    assert presentations_match(p, parse_presentation("gens: x y\nx'y'x' = y'x'y'\n"))
    assert not presentations_match(p, parse_presentation("gens: x y\nxy = yx\n"))
    assert not presentations_match(p, parse_presentation("gens: x y z\nxyx = yxy\n"))
