"""Parser and serializer for the twist-word text format."""

import random

import pytest

from lefschetz.families import fibre_sum, genus1_word, hyperelliptic_word, word_A, word_B, word_C, word_power
from lefschetz.monodromy import Separating, Word
from lefschetz.word_dsl import ParseError, parse, serialize

from helpers import random_word

B_DOC = "genus: 2\nword: (c1 c2 c3 c4 c5)^6\n"


def test_parse_family_b():
    assert parse(B_DOC) == word_B()


def test_parse_shorthand_names():
    assert parse("genus: 2\nword: A") == word_A()
    assert parse("genus: 2\nword: B") == word_B()
    assert parse("genus: 2\nword: C") == word_C()
    assert parse("genus: 3\nword: H(3)") == hyperelliptic_word(3)
    assert parse("genus: 1\nword: E(2)") == genus1_word(2)


def test_parse_vectors_and_separating():
    w = parse("genus: 2\nword: v[1,0,0,0] s1 v[1,0,0,0]")
    assert w.genus == 2
    assert len(w.twists) == 3
    assert w.twists[1] == Separating(1)
    assert w.twists[0].cls == (1, 0, 0, 0)


def test_parse_concatenation_and_power():
    doc = "genus: 2\nword: A^2 B"
    assert parse(doc).twists == word_power(word_A(), 2).twists + word_B().twists
    nested = parse("genus: 2\nword: ((c1 c2)^2 c3)^3")
    assert len(nested.twists) == 15


def test_parse_comments_and_whitespace():
    doc = "# header comment\ngenus: 2   # inline\n\nword:  (c1   c2)^2  # tail\n"
    w = parse(doc)
    assert len(w.twists) == 4


def test_parse_error_positions():
    with pytest.raises(ParseError) as exc:
        parse("genus: 2\nword: c6")
    assert exc.value.line == 2 and exc.value.col == 7
    assert "c6" in str(exc.value) or "chain index" in str(exc.value)

    with pytest.raises(ParseError) as exc:
        parse("genus: 2\nword: c1 ^")
    assert exc.value.line == 2

    with pytest.raises(ParseError) as exc:
        parse("genus: x\nword: c1")
    assert exc.value.line == 1


def test_parse_rejects_bad_vectors():
    with pytest.raises(ParseError):
        parse("genus: 2\nword: v[2,4,6,8]")  # imprimitive
    with pytest.raises(ParseError):
        parse("genus: 2\nword: v[1,0]")  # wrong length


def test_zero_vector_means_separating():
    w = parse("genus: 2\nword: v[0,0,0,0]")
    assert w.twists == (Separating(1),)


def test_parse_rejects_bad_powers():
    with pytest.raises(ParseError):
        parse("genus: 2\nword: c1^0")
    with pytest.raises(ParseError):
        parse("genus: 2\nword: c1^-3")


def test_parse_separating_rules():
    with pytest.raises(ParseError):
        parse("genus: 1\nword: s1")  # torus has no separating curves
    with pytest.raises(ParseError):
        parse("genus: 2\nword: s2")  # type must be at most g // 2
    assert parse("genus: 4\nword: s2").twists == (Separating(2),)


def test_parse_family_genus_guards():
    with pytest.raises(ParseError):
        parse("genus: 3\nword: A")
    with pytest.raises(ParseError):
        parse("genus: 2\nword: H(3)")
    with pytest.raises(ParseError):
        parse("genus: 2\nword: E(1)")
    with pytest.raises(ParseError):
        parse("genus: 3\nword: H(2)")


def test_expansion_cap():
    with pytest.raises(ParseError):
        parse("genus: 2\nword: (c1 c2)^600000")
    with pytest.raises(ParseError):
        parse("genus: 1\nword: E(100000)")


def test_parse_requires_nonempty_word():
    with pytest.raises(ParseError):
        parse("genus: 2\nword:")
    with pytest.raises(ParseError):
        parse("genus: 2")


def test_serialize_canonical_form():
    assert serialize(word_B()) == "genus: 2\nword: c1 c2 c3 c4 c5" + " c1 c2 c3 c4 c5" * 5 + "\n"
    w = Word(2, (Separating(1),))
    assert serialize(w) == "genus: 2\nword: s1\n"


def test_serialize_uses_chain_names_and_vectors():
    w = parse("genus: 2\nword: c1 v[1,1,0,0] s1")
    text = serialize(w)
    assert "c1" in text
    assert "v[1,1,0,0]" in text
    assert "s1" in text


def test_round_trip_random_words():
    rng = random.Random(24601)
    for _ in range(60):
        w = random_word(rng, rng.choice((1, 2, 3)), rng.randint(1, 8))
        assert parse(serialize(w)) == w


def test_serialize_parse_idempotent():
    for w in (word_A(), fibre_sum(word_B(), word_C()), hyperelliptic_word(3)):
        text = serialize(w)
        assert serialize(parse(text)) == text


def test_fuzz_never_crashes():
    """Garbage input must either parse to a Word or raise ParseError, nothing else."""
    rng = random.Random(515253)
    alphabet = "gceword:nsv[]()^#,-0123456789 \n\t"
    for _ in range(200):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 60)))
        try:
            result = parse(text)
        except ParseError:
            continue
        assert isinstance(result, Word)
