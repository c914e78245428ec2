"""Dense vectors and matrices over GF(4) with the Hermitian pairing.

Vectors are plain tuples of field elements.  Matrices are immutable
``Mat`` values holding a tuple of row tuples plus an explicit column
count (so zero-row matrices keep their width); every operation returns a
new matrix.

The Hermitian inner product of u and v is sum_i u_i * conj(v_i).  It is
conjugate-symmetric, and a vector x is Hermitian-orthogonal to all rows
of G exactly when x lies in the ordinary right null space of the
entrywise conjugate of G; ``kernel_basis`` relies on that reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from . import gf4

Vec = Tuple[int, ...]


@dataclass(frozen=True)
class Mat:
    """Immutable k x n matrix over GF(4), row major."""

    rows: tuple[Vec, ...]
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> Vec:
        return self.rows[i]

    def __iter__(self) -> Iterator[Vec]:
        return iter(self.rows)

    def column(self, j: int) -> Vec:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[Vec]:
        return [self.column(j) for j in range(self.ncols)]

    def __str__(self) -> str:
        return format_matrix(self)


def mat(rows: Iterable[Sequence[int]], ncols: int | None = None) -> Mat:
    """Build a Mat, validating shape and entry range.

    ``ncols`` is required when ``rows`` is empty and must otherwise agree
    with the row length.
    """
    tup = tuple(tuple(r) for r in rows)
    if tup:
        width = len(tup[0])
        if any(len(r) != width for r in tup):
            raise ValueError("ragged rows in matrix")
        if ncols is not None and ncols != width:
            raise ValueError(f"ncols={ncols} does not match row length {width}")
        ncols = width
    elif ncols is None:
        raise ValueError("ncols is required for a matrix with no rows")
    for r in tup:
        for e in r:
            if e not in (0, 1, 2, 3):
                raise ValueError(f"not a GF(4) element: {e!r}")
    return Mat(tup, ncols)


def identity(k: int) -> Mat:
    return Mat(tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)), k)


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(x ^ y for x, y in zip(u, v))


def vec_scale(c: int, u: Vec) -> Vec:
    row = gf4.MUL[c]
    return tuple(row[x] for x in u)


def hermitian_inner(u: Vec, v: Vec) -> int:
    """(u, v)_h = sum_i u_i * conj(v_i)."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    acc = 0
    for x, y in zip(u, v):
        acc ^= gf4.MUL[x][gf4.CONJ[y]]
    return acc


def conj_entries(m: Mat) -> Mat:
    return Mat(tuple(tuple(gf4.CONJ[e] for e in row) for row in m.rows), m.ncols)


def conj_transpose(m: Mat) -> Mat:
    """Entrywise conjugate of the transpose; result[i][j] = conj(m[j][i])."""
    return Mat(
        tuple(tuple(gf4.CONJ[m.rows[i][j]] for i in range(m.nrows)) for j in range(m.ncols)),
        m.nrows,
    )


def matmul(a: Mat, b: Mat) -> Mat:
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch: {a.nrows}x{a.ncols} @ {b.nrows}x{b.ncols}")
    out = []
    for i in range(a.nrows):
        row = []
        for j in range(b.ncols):
            acc = 0
            for t in range(a.ncols):
                acc ^= gf4.MUL[a.rows[i][t]][b.rows[t][j]]
            row.append(acc)
        out.append(tuple(row))
    return Mat(tuple(out), b.ncols)


def gram(m: Mat) -> Mat:
    """Hermitian Gram matrix G * conj(G)^T (k x k)."""
    k = m.nrows
    return Mat(
        tuple(
            tuple(hermitian_inner(m.rows[i], m.rows[j]) for j in range(k))
            for i in range(k)
        ),
        k,
    )


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns.

    Pivots are chosen as the first nonzero entry scanning columns left to
    right, rows top to bottom, so the result is identical on every
    platform.
    """
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        s = gf4.INV[rows[r][c]]
        rows[r] = [gf4.MUL[s][e] for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                frow = gf4.MUL[f]
                rows[i] = [e ^ frow[p] for e, p in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return Mat(tuple(tuple(row) for row in rows), m.ncols), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def det(m: Mat) -> int:
    """Determinant of a square matrix via elimination.

    In characteristic 2 row swaps do not change the determinant, so the
    result is simply the product of the pivots (0 if elimination stalls).
    """
    if m.nrows != m.ncols:
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    k = m.nrows
    rows = [list(r) for r in m.rows]
    result = 1
    for c in range(k):
        pivot_row = None
        for i in range(c, k):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            return 0
        rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
        result = gf4.MUL[result][rows[c][c]]
        inv_p = gf4.INV[rows[c][c]]
        for i in range(c + 1, k):
            if rows[i][c]:
                f = gf4.MUL[rows[i][c]][inv_p]
                frow = gf4.MUL[f]
                rows[i] = [e ^ frow[p] for e, p in zip(rows[i], rows[c])]
    return result


def kernel_basis(m: Mat) -> Mat:
    """Basis of { x : (x, g)_h = 0 for every row g of m }, in RREF.

    Solving sum_i x_i * conj(g_i) = 0 means taking the ordinary right
    null space of the entrywise conjugate of m.  The returned matrix has
    n - rank(m) rows of length n.
    """
    n = m.ncols
    reduced, pivots = rref(conj_entries(m))
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free_cols:
        x = [0] * n
        x[f] = 1
        for i, p in enumerate(pivots):
            x[p] = reduced.rows[i][f]
        basis.append(tuple(x))
    out, _ = rref(Mat(tuple(basis), n))
    return out


def format_matrix(m: Mat) -> str:
    """Rows joined by ';', entries by ',': e.g. "1,0,1;0,1,w"."""
    return ";".join(",".join(gf4.format_element(e) for e in row) for row in m.rows)


def parse_matrix(text: str) -> Mat:
    """Inverse of format_matrix; raises ValueError on malformed input."""
    rows = []
    for part in text.strip().split(";"):
        entries = [gf4.parse_element(tok) for tok in part.split(",")]
        rows.append(tuple(entries))
    if not rows:
        raise ValueError("empty matrix text")
    return mat(rows)
