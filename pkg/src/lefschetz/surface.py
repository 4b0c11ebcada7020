"""Homological model of a closed oriented genus-g surface.

First homology is Z^(2g) with the ordered basis (a1, b1, ..., ag, bg) and the
skew intersection pairing <a_i, b_i> = 1.  Curves on the surface enter only
through their classes: a nonseparating curve carries a primitive class, a
separating curve carries the zero class.
"""

from __future__ import annotations

import enum
from math import gcd

from .matrices import Matrix, Vector, symplectic_form


class CycleKind(enum.Enum):
    NONSEPARATING = "nonseparating"
    SEPARATING = "separating"


def intersection_matrix(g: int) -> Matrix:
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    return symplectic_form(g)


def standard_basis(g: int) -> list[Vector]:
    """The 2g unit vectors, in the order a1, b1, ..., ag, bg."""
    n = 2 * g
    return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]


def intersection(u: Vector, v: Vector) -> int:
    """Algebraic intersection number u^T J v."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    if len(u) % 2 != 0 or not u:
        raise ValueError(f"vectors must have positive even length, got {len(u)}")
    total = 0
    for i in range(0, len(u), 2):
        total += u[i] * v[i + 1] - u[i + 1] * v[i]
    return total


def is_primitive(v: Vector) -> bool:
    """A nonzero vector is primitive when its entries have gcd 1."""
    d = 0
    for x in v:
        d = gcd(d, x)
    return d == 1


def validate_cycle_class(v: Vector) -> CycleKind:
    """Classify a homology class as a curve class.

    Zero is the class of a separating curve.  A nonzero class must be
    primitive to be realized by an embedded nonseparating curve; an
    imprimitive vector is rejected.
    """
    if not v or len(v) % 2 != 0:
        raise ValueError(f"vectors must have positive even length, got {len(v)}")
    if all(x == 0 for x in v):
        return CycleKind.SEPARATING
    if not is_primitive(v):
        raise ValueError(f"imprimitive class {v} is not represented by an embedded curve")
    return CycleKind.NONSEPARATING


def chain_curve_class(g: int, k: int) -> Vector:
    """Class of the k-th curve in the standard length-(2g+1) chain.

    Consecutive chain curves meet once, non-consecutive ones are disjoint.
    In the standard basis: c1 = b1, c_{2i} = a_i, c_{2i+1} = b_i + b_{i+1},
    and the final odd one degenerates to c_{2g+1} = b_g.
    """
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if not 1 <= k <= 2 * g + 1:
        raise ValueError(f"chain index {k} out of range 1..{2 * g + 1} at genus {g}")
    n = 2 * g
    vec = [0] * n
    if k % 2 == 0:
        i = k // 2
        vec[2 * (i - 1)] = 1
    else:
        i = (k - 1) // 2
        if i >= 1:
            vec[2 * (i - 1) + 1] = 1
        if i < g:
            vec[2 * i + 1] = 1
    return tuple(vec)
