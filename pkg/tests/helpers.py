"""Shared brute-force oracles for the test suite.

Everything here recomputes from first principles (full codeword
enumeration, exhaustive search over row transforms) so the library's
closed-form and vectorised paths are checked against an independent
route, not against themselves.
"""

from __future__ import annotations

import itertools
import random

from lcd2 import gf4
from lcd2.code import LinearCode
from lcd2.linalg import Mat, mat, matmul


def brute_codewords(gen: Mat) -> list[tuple[int, ...]]:
    """All GF(4)-combinations of the rows, expanded coefficient by coefficient."""
    words = []
    for msg in itertools.product(range(4), repeat=gen.nrows):
        word = [0] * gen.ncols
        for coeff, row in zip(msg, gen.rows):
            for j, e in enumerate(row):
                word[j] ^= gf4.MUL[coeff][e]
        words.append(tuple(word))
    return words


def brute_weight_enumerator(gen: Mat) -> dict[int, int]:
    counts: dict[int, int] = {}
    for w in brute_codewords(gen):
        wt = sum(1 for e in w if e)
        counts[wt] = counts.get(wt, 0) + 1
    return counts


def brute_min_weight(gen: Mat) -> int:
    return min(sum(1 for e in w if e) for w in brute_codewords(gen) if any(w))


def _brute_inner(u, v) -> int:
    acc = 0
    for x, y in zip(u, v):
        acc ^= gf4.MUL[x][gf4.CONJ[y]]
    return acc


def brute_hull_dimension(c: LinearCode) -> int:
    """log4 of |C intersect C_dual|, testing dual membership word by word.

    A word lies in the Hermitian dual iff it pairs to zero with every
    generator row, so the intersection is counted without ever forming
    the dual code.
    """
    size = sum(
        1
        for w in brute_codewords(c.gen)
        if all(_brute_inner(w, row) == 0 for row in c.gen.rows)
    )
    dim = 0
    while 4**dim < size:
        dim += 1
    assert 4**dim == size, "hull is not a subspace?"
    return dim


def all_invertible_2x2() -> list[Mat]:
    out = []
    for a, b, c, d in itertools.product(range(4), repeat=4):
        if gf4.MUL[a][d] ^ gf4.MUL[b][c]:
            out.append(mat([(a, b), (c, d)]))
    return out


ALL_GL2 = all_invertible_2x2()


def normalized_column_multiset(gen: Mat) -> tuple:
    cols = []
    for j in range(gen.ncols):
        x, y = gen.rows[0][j], gen.rows[1][j]
        if x:
            s = gf4.INV[x]
        elif y:
            s = gf4.INV[y]
        else:
            cols.append((0, 0))
            continue
        cols.append((gf4.MUL[s][x], gf4.MUL[s][y]))
    return tuple(sorted(cols))


def equivalent_by_search(c1: LinearCode, c2: LinearCode) -> bool:
    """Monomial equivalence by trying all 180 row transforms of c1."""
    if c1.n != c2.n or c1.k != c2.k:
        return False
    target = normalized_column_multiset(c2.gen)
    return any(
        normalized_column_multiset(matmul(t, c1.gen)) == target for t in ALL_GL2
    )


def random_rank2_matrix(rng: random.Random, n: int) -> Mat:
    """Uniform-ish random 2 x n matrix with two independent columns."""
    while True:
        rows = [tuple(rng.randrange(4) for _ in range(n)) for _ in range(2)]
        has_minor = any(
            gf4.MUL[rows[0][i]][rows[1][j]] ^ gf4.MUL[rows[0][j]][rows[1][i]]
            for i in range(n)
            for j in range(i + 1, n)
        )
        if has_minor:
            return mat(rows)


def random_monomial_image(rng: random.Random, gen: Mat) -> Mat:
    """Permute columns and scale each by a random nonzero element."""
    perm = list(range(gen.ncols))
    rng.shuffle(perm)
    scales = [rng.choice((1, 2, 3)) for _ in range(gen.ncols)]
    rows = tuple(
        tuple(gf4.MUL[scales[j]][row[perm[j]]] for j in range(gen.ncols))
        for row in gen.rows
    )
    return Mat(rows, gen.ncols)


def random_equivalent_image(rng: random.Random, gen: Mat) -> Mat:
    """Random row transform followed by a random monomial map."""
    return random_monomial_image(rng, matmul(rng.choice(ALL_GL2), gen))
