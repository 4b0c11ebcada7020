"""Shared builders for randomized tests."""

from __future__ import annotations

from math import gcd

from lefschetz.matrices import Matrix, identity, mat_mul
from lefschetz.monodromy import (
    Nonseparating,
    Separating,
    Word,
    conjugate_word,
    hurwitz_move,
    rotate_word,
    transvection_matrix,
)


# documented JSON schema: analyze output must carry exactly these keys, in order
REPORT_KEYS = [
    "genus",
    "twist_count",
    "nonseparating",
    "separating",
    "separating_by_type",
    "cover_parameter",
    "relation_passed",
    "chi",
    "sigma",
    "betti",
    "torsion_h1",
    "torsion_h2",
    "section_assumed",
    "b_plus",
    "b_minus",
    "c1_squared",
    "chi_h",
    "hodge_degree",
    "wp_pairing",
    "double_cover_base",
    "word_signature",
    "cocycle_terms",
    "verdicts",
]


def random_primitive(rng, g: int, bound: int = 10) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(2 * g))
        d = 0
        for x in v:
            d = gcd(d, x)
        if d == 1:
            return v
        if d > 1:
            return tuple(x // d for x in v)
        # all zero: retry


def random_symplectic(rng, g: int, twists: int = 8, bound: int = 2) -> Matrix:
    """Product of a few random transvections; small entries keep arithmetic quick."""
    m = identity(2 * g)
    for _ in range(rng.randint(1, twists)):
        m = mat_mul(transvection_matrix(random_primitive(rng, g, bound)), m)
    return m


def random_word(rng, g: int, max_len: int = 12) -> Word:
    """Arbitrary word (no relation constraint), mixing twist kinds."""
    twists = []
    for _ in range(rng.randint(1, max_len)):
        if g >= 2 and rng.random() < 0.25:
            twists.append(Separating(rng.randint(1, g // 2)))
        else:
            twists.append(Nonseparating(random_primitive(rng, g, 3)))
    return Word(g, tuple(twists))


def perturb_word(rng, w: Word, moves: int = 3) -> Word:
    """Random composition of the three invariant-preserving word moves."""
    for _ in range(moves):
        kind = rng.choice(("hurwitz", "conjugate", "rotate"))
        if kind == "hurwitz" and len(w.twists) >= 2:
            i = rng.randrange(len(w.twists) - 1)
            w = hurwitz_move(w, i, rng.choice(("left", "right")))
        elif kind == "conjugate":
            w = conjugate_word(w, random_primitive(rng, w.genus, 2), rng.choice((1, -1)))
        else:
            w = rotate_word(w, rng.randrange(len(w.twists)))
    return w
