"""Shared oracles for the test suite.

Everything here is deliberately independent of the package internals:
rank via Gaussian elimination over Fractions, connectivity via a local
union-find, counts via a classical recurrence and Burnside's lemma, and
invariant factors via gcds of minors or sympy.  Tests freeze package
outputs against these.
"""

import re
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial, gcd

ACCEPTANCE_NOTES = {}


def record_criterion(number, detail):
    """Stash the measured numbers for one acceptance criterion; the
    terminal summary prints them next to its PASS/FAIL verdict."""
    ACCEPTANCE_NOTES[number] = detail


def pytest_terminal_summary(terminalreporter):
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            node = getattr(report, "nodeid", "")
            match = re.search(r"test_acceptance\.py::test_criterion_(\d+)", node)
            if match:
                number = int(match.group(1))
                if outcome != "passed":
                    verdicts[number] = "FAIL"
                else:
                    verdicts.setdefault(number, "PASS")
    if not verdicts:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(verdicts):
        detail = ACCEPTANCE_NOTES.get(number)
        line = "criterion %d: %s" % (number, verdicts[number])
        if verdicts[number] == "PASS" and detail:
            line += " (%s)" % detail
        terminalreporter.write_line(line)


def fraction_rank(rows):
    """Rank by textbook Gaussian elimination over exact rationals."""
    mat = [[Fraction(v) for v in row] for row in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    rank = 0
    for c in range(n):
        pivot = None
        for i in range(rank, m):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][c]
        for i in range(rank + 1, m):
            if mat[i][c]:
                f = mat[i][c] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def minor_gcd_factors(rows):
    """Invariant factors from determinantal divisors, for tiny matrices.

    d_k is the gcd of all k x k minors; the k-th factor is d_k / d_{k-1}.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    factors = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        dk = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                dk = gcd(dk, _det(sub))
        if dk == 0:
            break
        factors.append(dk // prev)
        prev = dk
    return tuple(factors)


def _det(mat):
    if len(mat) == 1:
        return mat[0][0]
    total = 0
    sign = 1
    for j in range(len(mat)):
        sub = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += sign * mat[0][j] * _det(sub)
        sign = -sign
    return total


def sympy_invariant_factors(rows):
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    facs = invariant_factors(Matrix([list(r) for r in rows]), domain=ZZ)
    return tuple(abs(int(f)) for f in facs if int(f) != 0)


def union_find_connected(d, n, sigma):
    """Connectivity of the colored graph by a local union-find over its n
    vertices; blacks are 0..p-1, whites p..2p-1."""
    p = n // 2
    parent = list(range(2 * p))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sig in sigma:
        for k in range(p):
            a, b = find(k), find(p + sig[k])
            if a != b:
                parent[a] = b
    root = find(0)
    return all(find(v) == root for v in range(2 * p))


def brute_labeled_tuples(d, n):
    """Every labeled tuple (sigma[0] = identity) with its connectivity."""
    p = n // 2
    idp = tuple(range(p))
    for rest in product(list(permutations(range(p))), repeat=d):
        sigma = (idp,) + rest
        yield sigma, union_find_connected(d, n, sigma)


def brute_connected_count(d, n):
    return sum(1 for _, conn in brute_labeled_tuples(d, n) if conn)


def connected_tuple_counts(d, p_max):
    """Counts of connected labeled tuples by the classical recurrence.

    With sigma[0] = identity a tuple is a d-tuple of permutations of p
    points, connected exactly when the generated group is transitive.
    Splitting off the component of point 0 gives
    (p!)^d = sum_k C(p-1, k-1) c_k ((p-k)!)^d, which determines c_p.
    """
    a = [factorial(p) ** d for p in range(p_max + 1)]
    c = [0] * (p_max + 1)
    for p in range(1, p_max + 1):
        total = a[p]
        for k in range(1, p):
            total -= comb(p - 1, k - 1) * c[k] * a[p - k]
        c[p] = total
    return c


def burnside_connected_classes(d, n):
    """Number of conjugation orbits of connected labeled tuples, by
    Burnside: average over tau of the number of connected tuples fixed by
    conjugation, i.e. with every coordinate in the centralizer of tau."""
    p = n // 2
    perms = list(permutations(range(p)))

    def conj(t, a):
        r = [0] * p
        for i, v in enumerate(a):
            r[t[i]] = t[v]
        return tuple(r)

    def transitive(rest):
        if p == 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            k = stack.pop()
            for sig in rest:
                if sig[k] not in seen:
                    seen.add(sig[k])
                    stack.append(sig[k])
        return len(seen) == p

    total = 0
    for tau in perms:
        cent = [s for s in perms if conj(tau, s) == s]
        total += sum(1 for rest in product(cent, repeat=d) if transitive(rest))
    assert total % factorial(p) == 0
    return total // factorial(p)


TORUS_TRIANGLES = tuple(
    tuple(sorted(t))
    for i in range(7)
    for t in (((i) % 7, (i + 1) % 7, (i + 3) % 7), ((i) % 7, (i + 2) % 7, (i + 3) % 7))
)

PROJECTIVE_PLANE_TRIANGLES = (
    (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 6), (1, 5, 6),
    (2, 3, 5), (2, 3, 6), (2, 4, 6), (3, 4, 5), (4, 5, 6),
)


def euler_characteristic(triangles):
    verts = set()
    edges = set()
    for tri in triangles:
        verts.update(tri)
        for a, b in combinations(sorted(tri), 2):
            edges.add((a, b))
    return len(verts) - len(edges) + len(triangles)
