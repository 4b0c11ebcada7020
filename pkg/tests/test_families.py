"""Built-in word families and the word-level combination operators."""

import pytest

from lefschetz.families import (
    fibre_sum,
    genus1_word,
    hyperelliptic_word,
    word_A,
    word_B,
    word_C,
    word_power,
)
from lefschetz.monodromy import check_global_relation
from lefschetz.moduli_invariants import word_stats
from lefschetz.surface import chain_curve_class


def test_family_lengths_and_genus():
    assert word_A().genus == 2 and len(word_A().twists) == 20
    assert word_B().genus == 2 and len(word_B().twists) == 30
    assert word_C().genus == 2 and len(word_C().twists) == 40
    assert len(hyperelliptic_word(3).twists) == 7 * 8
    assert len(genus1_word(2).twists) == 24


def test_family_letters():
    # C avoids the last chain curve entirely
    allowed = {chain_curve_class(2, k) for k in range(1, 5)}
    assert {t.cls for t in word_C().twists} <= allowed
    # B is the hyperelliptic construction at genus 2
    assert word_B() == hyperelliptic_word(2)
    # A walks up then down the chain
    up_down = word_A().twists[:10]
    assert [t.cls for t in up_down[:5]] == [chain_curve_class(2, k) for k in range(1, 6)]
    assert [t.cls for t in up_down[5:]] == [chain_curve_class(2, k) for k in range(5, 0, -1)]


@pytest.mark.parametrize(
    "w",
    [word_A(), word_B(), word_C(), hyperelliptic_word(3), hyperelliptic_word(4), genus1_word(2)],
    ids=["A", "B", "C", "H3", "H4", "E2"],
)
def test_families_satisfy_relation(w):
    assert check_global_relation(w).passed


def test_hyperelliptic_rejects_torus():
    with pytest.raises(ValueError):
        hyperelliptic_word(1)


def test_genus1_word_validation():
    with pytest.raises(ValueError):
        genus1_word(0)


def test_fibre_sum():
    w = fibre_sum(word_A(), word_B())
    assert w.genus == 2
    assert w.twists == word_A().twists + word_B().twists
    with pytest.raises(ValueError):
        fibre_sum(word_A(), hyperelliptic_word(3))


def test_word_power():
    w = word_power(word_A(), 3)
    assert len(w.twists) == 60
    assert w.twists[:20] == word_A().twists
    assert word_power(word_B(), 1) == word_B()
    with pytest.raises(ValueError):
        word_power(word_A(), 0)


def test_mixed_family_cover_parity():
    # the parity of the double cover base for A^m B^n tracks 2m + 3n
    for m in range(3):
        for n in range(3):
            if m == n == 0:
                continue
            parts = [word_A()] * m + [word_B()] * n
            w = parts[0]
            for p in parts[1:]:
                w = fibre_sum(w, p)
            param = word_stats(w).cover_parameter
            assert param == 2 * m + 3 * n
            assert param % 2 == (2 * m + 3 * n) % 2
