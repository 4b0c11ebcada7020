"""Small exact integer-matrix toolkit.

Matrices are immutable tuples of row tuples, vectors are flat tuples.
Everything runs on Python ints, so entries can grow without overflow.
"""

from __future__ import annotations

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_vector(n: int) -> Vector:
    return (0,) * n


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    if m and len(m[0]) != len(v):
        raise ValueError(f"shape mismatch: {len(m)}x{len(m[0])} times vector of length {len(v)}")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def symplectic_form(g: int) -> Matrix:
    """Block-diagonal form with g blocks ((0, 1), (-1, 0)) in the (a_i, b_i) ordering."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return tuple(tuple(r) for r in rows)


def is_symplectic(m: Matrix) -> bool:
    """True when m^T J m == J for the standard form of matching size."""
    n = len(m)
    if n % 2 != 0 or any(len(row) != n for row in m):
        return False
    j = symplectic_form(n // 2)
    return mat_mul(mat_mul(transpose(m), j), m) == j


def symplectic_inverse(m: Matrix) -> Matrix:
    """Inverse of a symplectic matrix, computed as J^T m^T J (no division)."""
    n = len(m)
    j = symplectic_form(n // 2)
    return mat_mul(mat_mul(transpose(j), transpose(m)), j)
