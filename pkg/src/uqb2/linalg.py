"""Small exact linear algebra helpers over a cyclotomic field context.

Matrices are plain lists of lists of field scalars.  Everything here is
elimination-based and exact; sparse dict vectors are used where the callers
(module simplicity certification, intertwiner solving) produce mostly-zero
data.
"""

from __future__ import annotations


def zero_matrix(ctx, n):
    z = ctx.zero
    return [[z] * n for _ in range(n)]


def identity(ctx, n):
    out = zero_matrix(ctx, n)
    for i in range(n):
        out[i][i] = ctx.one
    return out


def scalar_matrix(ctx, n, c):
    out = zero_matrix(ctx, n)
    for i in range(n):
        out[i][i] = c
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_mul(a, b):
    n, mid, m = len(a), len(b), len(b[0])
    zero = a[0][0].ctx.zero if n else None
    out = []
    for i in range(n):
        row = [zero] * m
        arow = a[i]
        for k in range(mid):
            c = arow[k]
            if not c:
                continue
            brow = b[k]
            for j in range(m):
                if brow[j]:
                    row[j] = row[j] + c * brow[j]
        out.append(row)
    return out


def mat_pow(ctx, a, n):
    out = identity(ctx, len(a))
    for _ in range(n):
        out = mat_mul(out, a)
    return out


def is_zero_matrix(a):
    return all(not x for row in a for x in row)


def scalar_of(a):
    """The scalar c with a == c * I, or None if a is not a scalar matrix."""
    n = len(a)
    c = a[0][0]
    for i in range(n):
        for j in range(n):
            if i == j:
                if a[i][j] != c:
                    return None
            elif a[i][j]:
                return None
    return c


def mat_rank(a):
    """Rank by exact Gaussian elimination (the input is not modified)."""
    rows = [list(r) for r in a]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].invert()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_invertible(a):
    return mat_rank(a) == len(a)


class SparseEchelon:
    """Incremental reduced row echelon form over sparse dict vectors.

    ``insert`` reduces a vector against the current basis and, when a nonzero
    remainder survives, normalizes it, back-substitutes into the stored rows
    and records the new pivot.  Used to track the span of vectorized matrices.
    """

    def __init__(self):
        self.rows = {}  # pivot column -> dict vector with that pivot == 1

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        vec = dict(vec)
        for col in list(vec):
            if not vec.get(col):
                continue
            row = self.rows.get(col)
            if row is None:
                continue
            c = vec[col]
            for j, v in row.items():
                acc = vec.get(j)
                s = -c * v if acc is None else acc - c * v
                if s:
                    vec[j] = s
                elif acc is not None:
                    del vec[j]
        return {k: v for k, v in vec.items() if v}

    def insert(self, vec):
        """Add vec to the span; returns True if it enlarged the span."""
        rem = self.reduce(vec)
        if not rem:
            return False
        pivot = min(rem)
        inv = rem[pivot].invert()
        rem = {k: v * inv for k, v in rem.items()}
        for col, row in self.rows.items():
            c = row.get(pivot)
            if c:
                for j, v in rem.items():
                    acc = row.get(j)
                    s = -c * v if acc is None else acc - c * v
                    if s:
                        row[j] = s
                    elif acc is not None:
                        del row[j]
        self.rows[pivot] = rem
        return True


def nullspace(rows, ncols, ctx):
    """Basis of the solution space of a sparse homogeneous system.

    ``rows`` is a list of dict vectors {column: coefficient}; returns a list
    of dense solution vectors.
    """
    ech = SparseEchelon()
    for row in rows:
        ech.insert(row)
    pivots = ech.rows
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [ctx.zero] * ncols
        vec[fc] = ctx.one
        for pcol, row in pivots.items():
            c = row.get(fc)
            if c:
                vec[pcol] = -c
        basis.append(vec)
    return basis
