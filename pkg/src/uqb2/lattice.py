"""Integer matrix toolkit: Smith normal form, PI degree, kernel lattices.

Everything here is exact integer arithmetic on small (typically 4x4)
matrices, so the algorithms favour simplicity: elementary row/column
operations with smallest-pivot selection for the Smith form, and bounded
brute-force enumeration for the nonnegative kernel semigroup.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

# Built-in commutation matrices exposed through the command-line interface.
# "uqb2" / "balg" are the 4x4 integral matrices whose invariant factors give
# the polynomial-identity degree of the full algebra and of the e1/e3/z/zt
# subalgebra; "qaspace" is the q^2-weighted matrix of the associated
# quasipolynomial algebra whose kernel describes its center.
NAMED_MATRICES = {
    "uqb2": ((0, 2, -2, 0), (-2, 0, 2, 0), (2, -2, 0, 0), (0, 0, 0, 0)),
    "balg": ((0, 0, 0, 0), (0, 0, 2, -2), (0, -2, 0, 0), (0, 2, 0, 0)),
    "qaspace": ((0, 1, -1, 0), (-1, 0, 1, 0), (1, -1, 0, 0), (0, 0, 0, 0)),
}


@dataclass(frozen=True)
class SNFDecomposition:
    """U * H * V = D with unimodular U, V and divisibility chain on diag."""

    U: tuple
    D: tuple
    V: tuple
    diag: tuple


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(H):
    """Smith normal form of a square integer matrix.

    Returns U, D, V with U*H*V = D diagonal, U and V of determinant +-1, and
    the diagonal entries nonnegative with d1 | d2 | ... .
    """
    A = [list(map(int, row)) for row in H]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    U = _identity(n)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    for t in range(n):
        while True:
            pivot = None
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    v = abs(A[i][j])
                    if v and (best is None or v < best):
                        best, pivot = v, (i, j)
            if pivot is None:
                break
            if pivot != (t, t):
                swap_rows(t, pivot[0])
                swap_cols(t, pivot[1])
            dirty = False
            for i in range(t + 1, n):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        dirty = True
            if dirty:
                continue
            # enforce the divisibility chain before moving on
            d = A[t][t]
            culprit = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if A[i][j] % d:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(t, culprit, 1)

    for i in range(n):
        if A[i][i] < 0:
            negate_row(i)

    diag = tuple(A[i][i] for i in range(n))
    freeze = lambda M: tuple(tuple(row) for row in M)
    return SNFDecomposition(U=freeze(U), D=freeze(A), V=freeze(V), diag=diag)


def determinant(M):
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def invariant_factors(H):
    return smith_normal_form(H).diag


def pi_degree(H, m):
    """Polynomial-identity degree from the invariant factors of H.

    The nonzero invariant factors of an antisymmetric integer matrix come in
    equal pairs (h, h); the degree is the product, over one representative h
    of each pair, of the multiplicative order of q^h in the field with a
    primitive m-th root q.  This pairing formula reproduces every instance
    this package needs; other antisymmetric matrices are computed with the
    same rule.
    """
    n = len(H)
    for a in range(n):
        for b in range(n):
            if H[a][b] != -H[b][a]:
                raise ValueError("PI degree needs an antisymmetric matrix")
    nonzero = [d for d in smith_normal_form(H).diag if d]
    if len(nonzero) % 2:
        raise ArithmeticError(
            "antisymmetric matrix produced an odd number of nonzero invariant factors"
        )
    for h1, h2 in zip(nonzero[0::2], nonzero[1::2]):
        if h1 != h2:
            raise ArithmeticError("nonzero invariant factors failed to pair up")
    deg = 1
    for h in nonzero[0::2]:
        deg *= m // math.gcd(m, h % m)
    return deg


def kernel_mod(H, l):
    """Z-basis of the lattice {v : H v == 0 (mod l)}.

    Diagonalize H = U^-1 D V^-1; in the coordinates u = V^-1 v the condition
    is d_i u_i == 0 (mod l), so u_i runs over multiples of l / gcd(d_i, l).
    """
    if l < 1:
        raise ValueError("modulus must be >= 1")
    snf = smith_normal_form(H)
    n = len(snf.diag)
    basis = []
    for i in range(n):
        t = l // math.gcd(snf.diag[i], l)
        basis.append(tuple(t * snf.V[r][i] for r in range(n)))
    return basis


def _kernel_points(H, l, bound):
    n = len(H)
    pts = set()
    for v in itertools.product(range(bound + 1), repeat=n):
        if not any(v):
            continue
        if all(sum(H[r][c] * v[c] for c in range(n)) % l == 0 for r in range(n)):
            pts.add(v)
    return pts


def nonneg_hilbert_basis(H, l, bound):
    """Minimal generators of the nonnegative kernel points within [0, bound]^n.

    Brute-force enumeration: a point is a generator when it is not the sum of
    two nonzero kernel points.  Any decomposition of an enumerated point has
    both summands inside the box, so the result is complete for the semigroup
    restricted to the box; choosing bound >= l covers the instances used for
    the center computation.
    """
    pts = _kernel_points(H, l, bound)
    minimal = []
    for s in pts:
        decomposable = False
        for a in pts:
            if a == s or any(x > y for x, y in zip(a, s)):
                continue
            rest = tuple(y - x for x, y in zip(a, s))
            if any(rest) and rest in pts:
                decomposable = True
                break
        if not decomposable:
            minimal.append(s)
    return sorted(minimal)
