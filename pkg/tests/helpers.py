"""Shared test utilities: independent linear-algebra oracles and word generators.

The oracles deliberately avoid the engine's Smith normal form: free ranks
come from Gaussian elimination over the rationals (fractions.Fraction) and
torsion cross-checks come from sympy's Smith normal form.
"""

from fractions import Fraction
from random import Random

import khlab as K
from khlab.homology import GradedMatrix, differential_matrices


def rational_rank(mat: GradedMatrix) -> int:
    """Rank over Q by dense fraction Gaussian elimination."""
    rows = [[Fraction(0)] * mat.cols for _ in range(mat.rows)]
    for (r, c), v in mat.entries.items():
        rows[r][c] = Fraction(v)
    rank = 0
    col = 0
    while rank < mat.rows and col < mat.cols:
        pivot = next((r for r in range(rank, mat.rows) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, mat.rows):
            if rows[r][col]:
                f = rows[r][col] / pv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def sympy_snf_diagonal(mat: GradedMatrix):
    from sympy import Matrix
    from sympy.matrices.normalforms import smith_normal_form

    if mat.rows == 0 or mat.cols == 0:
        return ()
    m = Matrix.zeros(mat.rows, mat.cols)
    for (r, c), v in mat.entries.items():
        m[r, c] = v
    s = smith_normal_form(m)
    diag = [abs(s[k, k]) for k in range(min(mat.rows, mat.cols))]
    return tuple(d for d in diag if d)


def oracle_free_ranks(c) -> dict:
    """Rational homology ranks per (i, unnormalized j), without the engine's SNF."""
    mats = differential_matrices(c)
    rank_cache: dict[tuple[int, int], int] = {}

    def rk(i, j):
        if not 0 <= i < c.m:
            return 0
        if (i, j) not in rank_cache:
            rank_cache[(i, j)] = rational_rank(mats[i].restrict(j))
        return rank_cache[(i, j)]

    out = {}
    for i in range(c.m + 1):
        for j in sorted(set(c.q_unnorm[i])):
            dim = sum(1 for q in c.q_unnorm[i] if q == j)
            free = dim - rk(i, j) - rk(i - 1, j)
            if free:
                out[(i, j)] = free
    return out


def table_of(text: str, cap: int = 20) -> K.BigradedGroup:
    word = K.parse_braid(text)
    return K.homology_table(K.build_complex(K.braid_closure(word), cap=cap))


def random_word(rng: Random, max_len: int = 10, max_strands: int = 4,
                positive: bool = False) -> K.BraidWord:
    p = rng.randint(2, max_strands)
    n = rng.randint(1, max_len)
    letters = []
    for _ in range(n):
        g = rng.randint(1, p - 1)
        s = 1 if positive or rng.random() < 0.5 else -1
        letters.append(g * s)
    return K.parse_braid(f"p={p}; " + " ".join(map(str, letters)))


def conjugate(w: K.BraidWord, k: int) -> K.BraidWord:
    body = " ".join(str(g * s) for g, s in w.letters)
    return K.parse_braid(f"p={w.strands}; {k} {body} {-k}")


CORPUS = [
    "1 1 1",
    "1 1 1 1 1",
    "1 2 1 2",
    "1 2 1 2 1 2",
    "1 1 2 2",
    "1 2 2 1",
    "p=4; 1 3 1 3",
    "p=4; 1 2 3 1 2 3",
]
