"""Named fixture words and the two ways of combining words.

The three classical genus-2 words are spelled over the chain classes
c1..c5; the general chain word generalizes the middle one to any genus.
"""

from __future__ import annotations

from .monodromy import Nonseparating, Twist, Word
from .surface import chain_curve_class


def _chain_twists(g: int, indices) -> tuple[Twist, ...]:
    return tuple(Nonseparating(chain_curve_class(g, k)) for k in indices)


def word_A() -> Word:
    """(c1 c2 c3 c4 c5 c5 c4 c3 c2 c1)^2, genus 2, 20 twists."""
    half = [1, 2, 3, 4, 5, 5, 4, 3, 2, 1]
    return Word(2, _chain_twists(2, half * 2))


def word_B() -> Word:
    """(c1 c2 c3 c4 c5)^6, genus 2, 30 twists."""
    return Word(2, _chain_twists(2, [1, 2, 3, 4, 5] * 6))


def word_C() -> Word:
    """(c1 c2 c3 c4)^10, genus 2, 40 twists."""
    return Word(2, _chain_twists(2, [1, 2, 3, 4] * 10))


def hyperelliptic_word(g: int) -> Word:
    """(c1 ... c_{2g+1})^(2g+2): the full-chain word, (2g+1)(2g+2) twists.

    At g = 2 this is exactly word_B.
    """
    if g < 2:
        raise ValueError(f"chain word needs genus >= 2, got {g}")
    cycle = list(range(1, 2 * g + 2))
    return Word(g, _chain_twists(g, cycle * (2 * g + 2)))


def genus1_word(k: int) -> Word:
    """12k twists alternating the two torus generators; an elliptic fibration with 12k fibres."""
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    a, b = (1, 0), (0, 1)
    pair = (Nonseparating(a), Nonseparating(b))
    return Word(1, pair * (6 * k))


def fibre_sum(w1: Word, w2: Word) -> Word:
    """Concatenate two words of the same genus."""
    if w1.genus != w2.genus:
        raise ValueError(f"genus mismatch: {w1.genus} vs {w2.genus}")
    return Word(w1.genus, w1.twists + w2.twists)


def word_power(w: Word, k: int) -> Word:
    """k-fold self-concatenation."""
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    return Word(w.genus, w.twists * k)
