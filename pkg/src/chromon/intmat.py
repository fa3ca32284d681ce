"""Exact integer matrix routines: rank over Q and invariant factors over Z.

Rank uses fraction-free Bareiss elimination in numpy int64 with an overflow
guard; every intermediate entry of Bareiss elimination is a minor of the
input, so a magnitude bound on the working matrix certifies that the next
update cannot wrap.  Matrices that are too large, or any guard trip, fall
back to arbitrary-precision elimination in plain Python.

Invariant factors come from integer diagonalization (row and column
operations with Euclidean pivots) followed by the pairwise gcd/lcm fix-up
that sorts prime exponents along the diagonal into a divisibility chain.
Diagonalization re-selects a minimum-magnitude pivot before every clearing
pass and rounds quotients to the nearest integer, which keeps intermediate
entries from the runaway growth that floor division with a fixed pivot
produces on dense matrices.
"""

from math import gcd

import numpy as np

# Entries at most 2^30 make every Bareiss update fit int64: the update is
# piv*a - b*c with all four factors bounded by the guard, hence at most
# 2^61 in magnitude before the exact division.
_GUARD = 1 << 30
# Above this size the int64 path rarely survives the guard; go straight to
# arbitrary precision.
_I64_DIM_LIMIT = 32


class _Overflow(Exception):
    pass


def _rank_bareiss_i64(matrix):
    m = np.array(matrix, dtype=np.int64)
    if m.ndim != 2:
        raise ValueError("need a 2-d matrix")
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return 0
    if np.abs(m).max() > _GUARD:
        raise _Overflow
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr], :] = m[[pr, r], :]
        piv = int(m[r, c])
        if r + 1 < rows:
            sub = m[r + 1:, :]
            upd = (piv * sub - np.outer(sub[:, c], m[r, :])) // prev
            m[r + 1:, :] = upd
            if np.abs(upd).max() > _GUARD:
                raise _Overflow
        prev = piv
        r += 1
    return r


def _rank_bigint(matrix):
    """Exact rank by integer column elimination with Euclidean reduction.

    Row operations only subtract integer multiples of other rows, so the
    matrix stays integral and the rank is preserved.  Works at any size;
    entries grow additively, not like minors.
    """
    rows = [list(map(int, row)) for row in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        live = [i for i in range(r, m) if rows[i][c]]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda i: abs(rows[i][c]))
            base = live[0]
            bv = rows[base][c]
            brow = rows[base]
            nxt = [base]
            for i in live[1:]:
                q = rows[i][c] // bv
                rows[i] = [a - q * b for a, b in zip(rows[i], brow)]
                if rows[i][c]:
                    nxt.append(i)
            live = nxt
        i = live[0]
        rows[r], rows[i] = rows[i], rows[r]
        r += 1
    return r


def rank(matrix):
    """Exact rank of an integer matrix over the rationals."""
    if isinstance(matrix, np.ndarray):
        rows, cols = matrix.shape
    else:
        rows = len(matrix)
        cols = len(matrix[0]) if rows else 0
    if rows == 0 or cols == 0:
        return 0
    if min(rows, cols) <= _I64_DIM_LIMIT:
        try:
            return _rank_bareiss_i64(matrix)
        except _Overflow:
            pass
    return _rank_bigint(matrix)


def invariant_factors(matrix):
    """Nonzero diagonal of the integer normal form, as a divisibility chain.

    Returns a tuple (f_1, ..., f_r) with f_i > 0, f_i dividing f_{i+1} and
    r the rank of the matrix.
    """
    mat = [list(map(int, row)) for row in matrix]
    m = len(mat)
    n = len(mat[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        if not _diagonal_step(mat, t, m, n):
            break
        diag.append(abs(mat[t][t]))
        t += 1
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, (a // g) * b
                changed = True
    return tuple(diag)


def _find_pivot(mat, t, m, n):
    """Nonzero entry of least magnitude in the trailing submatrix; a unit
    entry wins immediately since it needs no Euclidean steps."""
    best = None
    for i in range(t, m):
        row = mat[i]
        for j in range(t, n):
            v = row[j]
            if v:
                a = -v if v < 0 else v
                if a == 1:
                    return (i, j)
                if best is None or a < best[0]:
                    best = (a, i, j)
    if best is None:
        return None
    return (best[1], best[2])


def _nearest_quotient(v, piv):
    """Integer quotient leaving a remainder of magnitude at most |piv| / 2."""
    q, r = divmod(v, piv)
    if 2 * abs(r) > abs(piv):
        q += 1
    return q


def _diagonal_step(mat, t, m, n):
    """Make row t and column t zero outside a single pivot entry at (t, t).

    Returns False when the trailing submatrix is entirely zero.  Each pass
    picks the smallest nonzero entry as the pivot and clears with nearest
    quotients, so any leftover remainder is at most half the pivot and the
    next pass starts from a strictly smaller one; the pass count is
    logarithmic in the least entry magnitude.
    """
    while True:
        pivot = _find_pivot(mat, t, m, n)
        if pivot is None:
            return False
        pi, pj = pivot
        if pi != t:
            mat[t], mat[pi] = mat[pi], mat[t]
        if pj != t:
            for row in mat:
                row[t], row[pj] = row[pj], row[t]
        piv = mat[t][t]
        clean = True
        for i in range(t + 1, m):
            v = mat[i][t]
            if v:
                q = _nearest_quotient(v, piv)
                if q:
                    trow = mat[t]
                    mat[i] = [a - q * b for a, b in zip(mat[i], trow)]
                if mat[i][t]:
                    clean = False
        trow = mat[t]
        for j in range(t + 1, n):
            v = trow[j]
            if v:
                q = _nearest_quotient(v, piv)
                if q:
                    for row in mat:
                        row[j] -= q * row[t]
                if trow[j]:
                    clean = False
        if clean:
            return True
