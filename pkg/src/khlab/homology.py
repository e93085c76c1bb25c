"""Exact integer linear algebra: Smith normal form and the homology table.

Smith normal form is computed in two phases: a sparse pass that eliminates
+-1 pivots (the bulk of a cube differential), then a classic dense
reduction with minimal-absolute-value pivoting on the small remainder.
All arithmetic is on Python ints, so there is no overflow.

The per-(i, j) blocking is structural: differentials preserve the q-degree,
so each d^i splits into independent blocks and the full matrix is never
reduced as one piece.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class GradedMatrix:
    """Sparse integer matrix with q-degree tags on rows and columns."""

    rows: int
    cols: int
    entries: dict  # {(row, col): nonzero int}
    row_q: tuple[int, ...]
    col_q: tuple[int, ...]

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if v and self.row_q[r] != self.col_q[c]:
                raise AssertionError(
                    f"entry at ({r},{c}) connects q={self.col_q[c]} to q={self.row_q[r]}"
                )

    def restrict(self, q: int) -> "GradedMatrix":
        """Submatrix of rows and columns tagged with q-degree q."""
        rsel = [r for r in range(self.rows) if self.row_q[r] == q]
        csel = [c for c in range(self.cols) if self.col_q[c] == q]
        rmap = {r: k for k, r in enumerate(rsel)}
        cmap = {c: k for k, c in enumerate(csel)}
        sub = {
            (rmap[r], cmap[c]): v
            for (r, c), v in self.entries.items()
            if r in rmap and c in cmap
        }
        return GradedMatrix(
            rows=len(rsel),
            cols=len(csel),
            entries=sub,
            row_q=tuple(q for _ in rsel),
            col_q=tuple(q for _ in csel),
        )

    def compose_is_zero(self, inner: "GradedMatrix") -> bool:
        """Whether self . inner vanishes (self applied after inner)."""
        inner_rows: dict[int, list] = {}
        for (r, c), v in inner.entries.items():
            inner_rows.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in inner_rows.get(k, ()):
                key = (r, c)
                acc[key] = acc.get(key, 0) + v * w
        return all(v == 0 for v in acc.values())


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[int, ...]  # d1 | d2 | ..., all positive
    rank: int

    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def _as_entries(matrix) -> tuple[dict, int, int]:
    if isinstance(matrix, GradedMatrix):
        return dict(matrix.entries), matrix.rows, matrix.cols
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    entries = {
        (r, c): v
        for r, row in enumerate(matrix)
        for c, v in enumerate(row)
        if v
    }
    return entries, rows, cols


def _divisibility_chain(diag: list[int]) -> tuple[int, ...]:
    diag = [abs(d) for d in diag if d]
    changed = True
    while changed:
        changed = False
        for k in range(len(diag) - 1):
            a, b = diag[k], diag[k + 1]
            if b % a:
                g = gcd(a, b)
                diag[k], diag[k + 1] = g, a * b // g
                changed = True
    return tuple(diag)


def _dense_snf(mat: list[list[int]], right: list[list[int]] | None = None):
    """In-place SNF of a dense matrix; tracks column operations in `right`.

    Returns the list of diagonal entries (before the divisibility fixup).
    When `right` is the identity on entry, on exit mat_orig @ right has the
    reduced matrix as its image description, so the columns of `right`
    beyond the rank span the integer kernel of the original matrix.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0

    def col_swap(c1, c2):
        for r in range(rows):
            mat[r][c1], mat[r][c2] = mat[r][c2], mat[r][c1]
        if right is not None:
            for r in range(cols):
                right[r][c1], right[r][c2] = right[r][c2], right[r][c1]

    def col_addmul(dst, src, q):
        for r in range(rows):
            mat[r][dst] -= q * mat[r][src]
        if right is not None:
            for r in range(cols):
                right[r][dst] -= q * right[r][src]

    diag = []
    s = 0
    while s < rows and s < cols:
        # Minimal-absolute-value pivot in the trailing submatrix.
        pivot = None
        best = 0
        for r in range(s, rows):
            for c in range(s, cols):
                v = abs(mat[r][c])
                if v and (best == 0 or v < best):
                    best, pivot = v, (r, c)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        r0, c0 = pivot
        if r0 != s:
            mat[s], mat[r0] = mat[r0], mat[s]
        if c0 != s:
            col_swap(s, c0)
        while True:
            p = mat[s][s]
            dirty = False
            for r in range(s + 1, rows):
                if mat[r][s]:
                    q = mat[r][s] // p
                    if q:
                        for c in range(s, cols):
                            mat[r][c] -= q * mat[s][c]
                    if mat[r][s]:
                        mat[s], mat[r] = mat[r], mat[s]
                        dirty = True
                        break
            if dirty:
                continue
            for c in range(s + 1, cols):
                if mat[s][c]:
                    q = mat[s][c] // p
                    if q:
                        col_addmul(c, s, q)
                    if mat[s][c]:
                        col_swap(s, c)
                        dirty = True
                        break
            if not dirty:
                break
        diag.append(abs(mat[s][s]))
        s += 1
    return diag


def _sparse_unit_phase(entries: dict):
    """Eliminate +-1 pivots sparsely; return (#unit pivots, remainder entries).

    Pivots are chosen by minimal Markowitz cost (|row|-1)*(|col|-1), which
    keeps fill-in low on cube differentials; candidates sit in a lazy heap
    and are revalidated on pop.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), v in entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)
    heap: list[tuple[int, int, int]] = []
    for (r, c), v in entries.items():
        if abs(v) == 1:
            heap.append(((len(rows[r]) - 1) * (len(cols[c]) - 1), r, c))
    heapq.heapify(heap)
    ones = 0
    while heap:
        score, r0, c0 = heapq.heappop(heap)
        v = rows.get(r0, {}).get(c0, 0)
        if abs(v) != 1:
            continue
        cost = (len(rows[r0]) - 1) * (len(cols[c0]) - 1)
        if cost > score:
            heapq.heappush(heap, (cost, r0, c0))
            continue
        pivot_row = rows.pop(r0)
        for c in pivot_row:
            cols[c].discard(r0)
        for r in list(cols.get(c0, ())):
            row = rows[r]
            q = row[c0] * v  # exact quotient, v is +-1
            for c, pv in pivot_row.items():
                nv = row.get(c, 0) - q * pv
                if nv:
                    was = row.get(c, 0)
                    row[c] = nv
                    cols.setdefault(c, set()).add(r)
                    if abs(nv) == 1 and abs(was) != 1:
                        heapq.heappush(
                            heap,
                            ((len(row) - 1) * (len(cols[c]) - 1), r, c),
                        )
                else:
                    row.pop(c, None)
                    cols[c].discard(r)
            if not row:
                del rows[r]
        cols.pop(c0, None)
        ones += 1
    rest = {
        (r, c): v for r, row in rows.items() for c, v in row.items()
    }
    return ones, rest


def smith_normal_form(matrix) -> SmithForm:
    """SNF of an integer matrix (GradedMatrix or list of rows)."""
    entries, _, _ = _as_entries(matrix)
    ones, rest = _sparse_unit_phase(entries)
    diag = [1] * ones
    if rest:
        rsel = sorted({r for r, _ in rest})
        csel = sorted({c for _, c in rest})
        rmap = {r: k for k, r in enumerate(rsel)}
        cmap = {c: k for k, c in enumerate(csel)}
        dense = [[0] * len(csel) for _ in rsel]
        for (r, c), v in rest.items():
            dense[rmap[r]][cmap[c]] = v
        diag.extend(_dense_snf(dense))
    chained = _divisibility_chain(diag)
    return SmithForm(diagonal=chained, rank=len(chained))


def kernel_basis(matrix) -> list[tuple[int, ...]]:
    """Integer basis of the right kernel, from SNF column transforms."""
    entries, rows, cols = _as_entries(matrix)
    dense = [[0] * cols for _ in range(rows)]
    for (r, c), v in entries.items():
        dense[r][c] = v
    right = [[int(i == j) for j in range(cols)] for i in range(cols)]
    diag = _dense_snf(dense, right=right)
    rank = sum(1 for d in diag if d)
    return [tuple(right[r][c] for r in range(cols)) for c in range(rank, cols)]


def homology_block(d_in: GradedMatrix, d_out: GradedMatrix):
    """Free rank and torsion of one (i, j) block: ker(d_out) / im(d_in)."""
    if d_in.cols and d_in.rows != d_out.cols:
        raise ValueError(
            f"block mismatch: d_in maps into dim {d_in.rows}, d_out maps from {d_out.cols}"
        )
    if not d_out.compose_is_zero(d_in):
        raise ValueError("d_out . d_in != 0 on this block; the complex is broken")
    snf_in = smith_normal_form(d_in)
    snf_out = smith_normal_form(d_out)
    free = d_out.cols - snf_out.rank - snf_in.rank
    return free, snf_in.torsion()


@dataclass(frozen=True)
class BigradedGroup:
    """Homology table: (i, j) -> (free rank, torsion orders)."""

    table: dict

    def __post_init__(self):
        object.__setattr__(
            self,
            "table",
            {
                key: (rank, tuple(sorted(tors)))
                for key, (rank, tors) in self.table.items()
                if rank or tors
            },
        )

    def entries(self):
        return sorted(self.table.items())

    def entry(self, i: int, j: int):
        return self.table.get((i, j), (0, ()))

    def __eq__(self, other):
        return isinstance(other, BigradedGroup) and self.table == other.table

    def shifted(self, di: int, dj: int) -> "BigradedGroup":
        return BigradedGroup(
            {(i + di, j + dj): v for (i, j), v in self.table.items()}
        )


def differential_matrices(c) -> list[GradedMatrix]:
    """The complex's differentials wrapped as graded matrices (unnormalized q)."""
    out = []
    for i, entries in enumerate(c.diffs):
        out.append(
            GradedMatrix(
                rows=len(c.bases[i + 1]),
                cols=len(c.bases[i]),
                entries=dict(entries),
                row_q=tuple(c.q_unnorm[i + 1]),
                col_q=tuple(c.q_unnorm[i]),
            )
        )
    return out


def homology_table(c, normalized: bool = True) -> BigradedGroup:
    """Full bigraded homology of a built chain complex.

    Works blockwise per (homological degree, q-degree); each block's SNF is
    computed once and reused as outgoing and incoming differential.  The
    normalized table applies the homological shift by -n_minus (the q-shift
    n_plus - 2n_minus is a constant offset on the unnormalized q-degrees).
    """
    m = c.m
    mats = differential_matrices(c)
    snf_cache: dict[tuple[int, int], SmithForm] = {}

    def snf_at(i: int, j: int) -> SmithForm:
        if not 0 <= i < m:
            return SmithForm(diagonal=(), rank=0)
        key = (i, j)
        if key not in snf_cache:
            snf_cache[key] = smith_normal_form(mats[i].restrict(j))
        return snf_cache[key]

    table: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}
    for i in range(m + 1):
        qs = sorted(set(c.q_unnorm[i]))
        for j in qs:
            dim = sum(1 for q in c.q_unnorm[i] if q == j)
            free = dim - snf_at(i, j).rank - snf_at(i - 1, j).rank
            tors = snf_at(i - 1, j).torsion()
            if free or tors:
                table[(i, j)] = (free, tors)
    group = BigradedGroup(table)
    if normalized:
        d = c.diagram
        group = group.shifted(-d.n_minus, d.n_plus - 2 * d.n_minus)
    return group
