"""Integral homology of the total space from the twist data.

The two maps that matter are assembled from the word alone: psi sends the
i-th handle generator to the i-th vanishing class, phi pairs a surface class
against each vanishing class after transporting it past the earlier twists.
For a trivial-monodromy word psi . phi = 0 and the middle homology is
ker psi / im phi plus the section and fibre classes.

All integer linear algebra goes through a deterministic Smith normal form so
that bases, and therefore torsion readouts, are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import Matrix, identity, mat_mul, mat_vec, transpose
from .monodromy import (
    Nonseparating,
    Word,
    require_trivial_monodromy,
    transvection_matrix,
    twist_class,
)
from .surface import intersection_matrix


@dataclass(frozen=True)
class SmithDecomposition:
    """d = u . m . v with u, v unimodular, d diagonal, entries >= 0, each dividing the next.

    v_inv is carried along because quotient computations need coordinates of
    vectors in the column basis picked by v.
    """

    u: Matrix
    d: Matrix
    v: Matrix
    v_inv: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i][i] for i in range(min(len(self.d), len(self.d[0]))))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_normal_form(m: Matrix) -> SmithDecomposition:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Pivoting is deterministic: smallest absolute value in the working
    submatrix, ties broken topmost then leftmost.  Row reductions use floor
    division, so repeated passes act as a Euclidean descent and terminate.
    """
    if not m or not m[0]:
        raise ValueError("matrix must have at least one row and one column")
    rows, cols = len(m), len(m[0])
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]
    vi = [list(r) for r in identity(cols)]

    def row_add(i, j, c):  # R_i += c R_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def col_add(j, i, c):  # C_j += c C_i, v_inv picks up the inverse row op
        for r in range(rows):
            a[r][j] += c * a[r][i]
        for r in range(cols):
            v[r][j] += c * v[r][i]
        vi[i] = [x - c * y for x, y in zip(vi[i], vi[j])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]
        vi[i], vi[j] = vi[j], vi[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def find_pivot(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        piv = find_pivot(t)
        if piv is None:
            break
        while True:
            i0, j0 = piv
            if i0 != t:
                row_swap(t, i0)
            if j0 != t:
                col_swap(t, j0)
            if a[t][t] < 0:
                row_negate(t)
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    row_add(i, t, -(a[i][t] // a[t][t]))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    col_add(j, t, -(a[t][j] // a[t][t]))
                    dirty = dirty or a[t][j] != 0
            if not dirty:
                bad = next(
                    (
                        (i, j)
                        for i in range(t + 1, rows)
                        for j in range(t + 1, cols)
                        if a[i][j] % a[t][t] != 0
                    ),
                    None,
                )
                if bad is None:
                    break
                # fold the offending row in so the pivot shrinks to a divisor
                row_add(t, bad[0], 1)
            piv = find_pivot(t)
        t += 1

    def freeze(rs):
        return tuple(tuple(r) for r in rs)

    return SmithDecomposition(freeze(u), freeze(a), freeze(v), freeze(vi))


def invariant_factors(m: Matrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith form, in divisibility order."""
    return tuple(x for x in smith_normal_form(m).diagonal if x != 0)


def matrix_rank(m: Matrix) -> int:
    return len(invariant_factors(m))


@dataclass(frozen=True)
class ZariskiComplex:
    """The pair of integer matrices whose (co)kernels carry the 4-manifold homology.

    phi has one row per twist: row i is the pairing functional
    x -> <(M_{i-1}...M_1) x, delta_i>.  psi has one column per twist, the
    class delta_i itself.  Separating twists contribute zero rows/columns.
    """

    word: Word
    phi: Matrix  # r x 2g
    psi: Matrix  # 2g x r


def build_complex(w: Word) -> ZariskiComplex:
    """Assemble phi and psi.  The word must multiply to the identity."""
    require_trivial_monodromy(w)
    g = w.genus
    j = intersection_matrix(g)
    prefix = identity(2 * g)
    phi_rows = []
    for t in w.twists:
        d = twist_class(t, g)
        phi_rows.append(mat_vec(transpose(prefix), mat_vec(j, d)))
        if isinstance(t, Nonseparating):
            prefix = mat_mul(transvection_matrix(d), prefix)
    psi = transpose(tuple(twist_class(t, g) for t in w.twists))
    return ZariskiComplex(word=w, phi=tuple(phi_rows), psi=psi)


@dataclass(frozen=True)
class HomologyReport:
    betti: tuple[int, int, int, int, int]
    torsion_h1: tuple[int, ...]
    torsion_h2: tuple[int, ...]
    section_assumed: bool = True

    def __post_init__(self) -> None:
        b = self.betti
        if b[0] != 1 or b[4] != 1 or b[1] != b[3]:
            raise ValueError(f"betti vector {b} violates closed-4-manifold symmetry")

    @property
    def euler_characteristic(self) -> int:
        b = self.betti
        return b[0] - b[1] + b[2] - b[3] + b[4]


def homology_report(w: Word) -> HomologyReport:
    """Betti numbers and torsion of the total space, section assumed.

    H_1 = coker psi.  H_3 = ker phi (transposed reading), free.  H_2 is
    ker psi / im phi plus two: the section and fibre classes survive and are
    independent because the section meets the fibre once.
    """
    cx = build_complex(w)
    g, r = w.genus, len(w.twists)

    dec = smith_normal_form(cx.psi)
    rank_psi = dec.rank
    torsion_h1 = tuple(x for x in dec.diagonal if x > 1)
    b1 = 2 * g - rank_psi

    rank_phi = matrix_rank(cx.phi)
    b3 = 2 * g - rank_phi
    if b1 != b3:
        raise AssertionError(f"rank(phi)={rank_phi} != rank(psi)={rank_psi}; model inconsistency")

    # coordinates of im phi inside ker psi: rows of v_inv past the rank give
    # the kernel basis, so push each phi column through v_inv and slice
    vi_phi = mat_mul(dec.v_inv, cx.phi)
    for i in range(rank_psi):
        if any(x != 0 for x in vi_phi[i]):
            raise AssertionError("im phi escaped ker psi; complex not a complex")
    kernel_dim = r - rank_psi
    quotient_rows = vi_phi[rank_psi:]
    if kernel_dim == 0 or all(all(x == 0 for x in row) for row in quotient_rows):
        rank_w, torsion_h2 = 0, ()
        if rank_phi != 0 and kernel_dim == 0:
            raise AssertionError("phi nonzero but ker psi trivial")
    else:
        dec_w = smith_normal_form(quotient_rows)
        rank_w = dec_w.rank
        torsion_h2 = tuple(x for x in dec_w.diagonal if x > 1)
    if rank_w != rank_phi:
        raise AssertionError("rank of phi changed under change of basis")
    b2 = kernel_dim - rank_w + 2

    return HomologyReport(
        betti=(1, b1, b2, b3, 1),
        torsion_h1=torsion_h1,
        torsion_h2=torsion_h2,
        section_assumed=True,
    )
