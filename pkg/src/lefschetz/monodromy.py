"""Words of positive Dehn twists and their homological monodromy.

A word is an ordered tuple of twists (t_1, ..., t_r); t_1 acts first.  On
homology a twist about a class d is the transvection x -> x + <x, d> d, so
the word as a whole acts by the product M_r ... M_1.  A word presents a
fibration over the sphere exactly when that product is the identity; the
check here is homological, hence a necessary condition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import (
    Matrix,
    Vector,
    identity,
    is_symplectic,
    mat_mul,
    zero_vector,
)
from .surface import CycleKind, intersection, validate_cycle_class


class RelationError(ValueError):
    """Raised when an operation requires the trivial-monodromy relation and it fails."""


@dataclass(frozen=True)
class Nonseparating:
    """Twist about a nonseparating curve, recorded by its primitive class."""

    cls: Vector

    def __post_init__(self) -> None:
        if validate_cycle_class(self.cls) is not CycleKind.NONSEPARATING:
            raise ValueError("nonseparating twist requires a nonzero class")


@dataclass(frozen=True)
class Separating:
    """Twist about a separating curve splitting off a genus-h piece (class is zero)."""

    h: int

    def __post_init__(self) -> None:
        if self.h < 1:
            raise ValueError(f"separating type must be >= 1, got {self.h}")


Twist = Nonseparating | Separating


@dataclass(frozen=True)
class Word:
    """Nonempty positive twist word on a genus-g surface."""

    genus: int
    twists: tuple[Twist, ...]

    def __post_init__(self) -> None:
        g = self.genus
        if g < 1:
            raise ValueError(f"genus must be >= 1, got {g}")
        if not self.twists:
            raise ValueError("word must contain at least one twist")
        for t in self.twists:
            if isinstance(t, Nonseparating):
                if len(t.cls) != 2 * g:
                    raise ValueError(
                        f"class length {len(t.cls)} does not match genus {g}"
                    )
            elif not 1 <= t.h <= g // 2:
                raise ValueError(
                    f"separating type {t.h} out of range 1..{g // 2} at genus {g}"
                )

    def __len__(self) -> int:
        return len(self.twists)


def twist_class(t: Twist, g: int) -> Vector:
    """Homology class of a twist curve; zero for separating twists."""
    if isinstance(t, Nonseparating):
        return t.cls
    return zero_vector(2 * g)


def apply_twist(delta: Vector, a: Vector, sign: int = 1) -> Vector:
    """Transvection x -> x + sign * <x, delta> delta (sign -1 gives the inverse twist)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    c = sign * intersection(a, delta)
    return tuple(x + c * d for x, d in zip(a, delta))


def transvection_matrix(delta: Vector) -> Matrix:
    """Matrix of the twist about delta, acting on column vectors."""
    n = len(delta)
    if n % 2 != 0 or n == 0:
        raise ValueError(f"class length must be positive even, got {n}")
    cols = [apply_twist(delta, e) for e in _unit_vectors(n)]
    return tuple(zip(*cols))


def _unit_vectors(n: int):
    for j in range(n):
        yield tuple(1 if i == j else 0 for i in range(n))


def word_monodromy(w: Word) -> Matrix:
    """Total homological action M_r ... M_1 of the word."""
    acc = identity(2 * w.genus)
    for t in w.twists:
        if isinstance(t, Nonseparating):
            acc = mat_mul(transvection_matrix(t.cls), acc)
        # separating twists act trivially on homology
    return acc


@dataclass(frozen=True)
class RelationCheck:
    passed: bool
    product: Matrix


def check_global_relation(w: Word) -> RelationCheck:
    """Does the word multiply to the identity on homology?"""
    product = word_monodromy(w)
    return RelationCheck(passed=product == identity(2 * w.genus), product=product)


def require_trivial_monodromy(w: Word) -> None:
    if not check_global_relation(w).passed:
        raise RelationError("word does not multiply to the identity on homology")


def rotate_word(w: Word, k: int) -> Word:
    """Cyclic rotation; for a trivial-monodromy word this is a conjugate relator."""
    r = len(w.twists)
    k %= r
    return Word(w.genus, w.twists[k:] + w.twists[:k])


def conjugate_word(w: Word, delta: Vector, sign: int = 1) -> Word:
    """Conjugate every twist by the (sign-power) twist about delta.

    Nonseparating classes map through the transvection; separating twists are
    untouched since conjugation preserves their type.
    """
    if len(delta) != 2 * w.genus:
        raise ValueError(f"class length {len(delta)} does not match genus {w.genus}")
    new: list[Twist] = []
    for t in w.twists:
        if isinstance(t, Nonseparating):
            new.append(Nonseparating(apply_twist(delta, t.cls, sign)))
        else:
            new.append(t)
    return Word(w.genus, tuple(new))


def hurwitz_move(w: Word, i: int, direction: str) -> Word:
    """Elementary braid move on adjacent twists at positions i, i+1 (0-based).

    Right replaces (x, y) by (y, T_y(x)); Left is its inverse, replacing
    (x, y) by (T_x^{-1}(y), x).  Both leave the total monodromy unchanged.
    """
    if not 0 <= i < len(w.twists) - 1:
        raise ValueError(f"move position {i} out of range 0..{len(w.twists) - 2}")
    x, y = w.twists[i], w.twists[i + 1]
    if direction == "right":
        moved = _push_through(x, y, sign=1)
        pair = (y, moved)
    elif direction == "left":
        moved = _push_through(y, x, sign=-1)
        pair = (moved, x)
    else:
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    return Word(w.genus, w.twists[:i] + pair + w.twists[i + 2 :])


def _push_through(t: Twist, by: Twist, sign: int) -> Twist:
    """Image of twist t under the (sign-power) twist about the curve of `by`."""
    if isinstance(t, Separating) or isinstance(by, Separating):
        # zero class or identity transvection: nothing moves
        return t
    return Nonseparating(apply_twist(by.cls, t.cls, sign))
