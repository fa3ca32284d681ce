"""Exhaustive censuses of connected colored graphs at fixed (d, n).

The labeled universe gauge-fixes sigma[0] to the identity and lets the d
remaining colors range over all permutations of the p = n/2 black indices,
giving (p!)^d tuples; such a graph is connected exactly when the group
generated by sigma[1..d] is transitive.  Relabeling the indices acts on
tuples by simultaneous conjugation and leaves every tabulated quantity
unchanged (connectivity, face counts per pair, jacket genera, degree,
homology ranks and invariant factors).

run_census exploits that: it walks one representative per conjugation
orbit and, in labeled mode, weights it by its orbit size p!/|stabilizer|;
canonical mode weights every orbit once.  Representatives are greedy
lexicographic minima: sigma[1] least in its conjugacy class (a cycle-type
representative), sigma[2] least under the centralizer of sigma[1], and so
on down the stabilizer chain, which is exactly the least image tuple of
the orbit.  Orbit-stabilizer makes the labeled weights exact, so the
tables equal what a full per-tuple sweep would produce, at roughly the
number-of-classes cost instead of (p!)^d.

Parallel runs split the orbit walk into (sigma[1], sigma[2]) blocks and
merge the per-block tables in a fixed order, so every worker count yields
identical tables.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np

from . import intmat
from .errors import (BadDimension, BadOrder, BudgetExceeded, InternalMismatch,
                     InvariantViolation)
from .graphs import (MAX_DIMENSION, MIN_DIMENSION, ColoredGraph, format_graph)
from .homology import spanning_tree
from .jackets import adjacent_pairs, color_cycles, max_genus
from .perms import (all_perms, centralizer, conjugacy_class_reps, conjugate,
                    cycles, identity, inverse, is_full_symmetric)

DEFAULT_BUDGET = 10 ** 9


def tuple_count(d, n):
    """Size (p!)^d of the labeled universe at order n."""
    return factorial(n // 2) ** d


def _validate_order(d, n):
    if not (MIN_DIMENSION <= d <= MAX_DIMENSION):
        raise BadDimension("dimension %r outside [%d, %d]" % (d, MIN_DIMENSION, MAX_DIMENSION))
    if n < 2 or n % 2:
        raise BadOrder("order %r is not an even number >= 2" % (n,))


def check_budget(d, n, budget=None):
    if budget is None:
        budget = DEFAULT_BUDGET
    size = tuple_count(d, n)
    if size > budget:
        raise BudgetExceeded("order %d needs %d tuples, budget is %d"
                             % (n, size, budget))


def _transitive(rest, p):
    if p == 1:
        return True
    seen = [False] * p
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        k = stack.pop()
        for sig in rest:
            v = sig[k]
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == p


def enumerate_connected(d, n, mode="labeled", budget=None):
    """Stream the census universe in deterministic lexicographic order.

    labeled: every connected tuple with sigma[0] = identity.  canonical:
    only tuples that are the least image tuple of their conjugation orbit.
    """
    _validate_order(d, n)
    check_budget(d, n, budget)
    if mode not in ("labeled", "canonical"):
        raise ValueError("mode must be 'labeled' or 'canonical'")
    p = n // 2
    perms = all_perms(p)
    idp = identity(p)
    others = tuple(t for t in perms if t != idp)
    for rest in product(perms, repeat=d):
        if not _transitive(rest, p):
            continue
        if mode == "canonical":
            least = True
            for t in others:
                if tuple(conjugate(t, sig) for sig in rest) < rest:
                    least = False
                    break
            if not least:
                continue
        yield ColoredGraph(d, n, (idp,) + rest)


def _prefix_reps(stab, levels, p):
    """Greedy orbit representatives for the next `levels` coordinates.

    Yields (prefix, stabilizer) with the stabilizer of the whole prefix
    inside the given group.  When the group is all of S_p the minima per
    orbit are the cycle-type representatives and their stabilizers the
    centralizers, so no scan is needed.
    """
    if levels == 0:
        yield ((), tuple(stab))
        return
    if is_full_symmetric(stab, p):
        for rep in conjugacy_class_reps(p):
            cent = centralizer(rep)
            for suffix, rest_stab in _prefix_reps(cent, levels - 1, p):
                yield ((rep,) + suffix, rest_stab)
        return
    idp = identity(p)
    for cand in all_perms(p):
        new_stab = [idp]
        least = True
        for z in stab:
            if z == idp:
                continue
            moved = conjugate(z, cand)
            if moved < cand:
                least = False
                break
            if moved == cand:
                new_stab.append(z)
        if not least:
            continue
        for suffix, rest_stab in _prefix_reps(new_stab, levels - 1, p):
            yield ((cand,) + suffix, rest_stab)


@dataclass
class CensusTable:
    """Aggregate counts for one (d, n, mode)."""

    d: int
    n: int
    mode: str
    total_connected: int = 0
    h1q_trivial: int = 0
    h1z_trivial: int = 0
    degree_histogram: dict = field(default_factory=dict)
    min_genus_histogram: dict = field(default_factory=dict)

    @property
    def sphere_fraction(self):
        if self.total_connected == 0:
            return Fraction(0, 1)
        return Fraction(self.h1q_trivial, self.total_connected)

    def _add(self, omega, min_g, h1q, h1z, weight):
        self.total_connected += weight
        if h1q:
            self.h1q_trivial += weight
        if h1z:
            self.h1z_trivial += weight
        hist = self.degree_histogram
        hist[omega] = hist.get(omega, 0) + weight
        hist = self.min_genus_histogram
        hist[min_g] = hist.get(min_g, 0) + weight

    def merge(self, other):
        if (self.d, self.n, self.mode) != (other.d, other.n, other.mode):
            raise InternalMismatch("merging census tables of different runs")
        self.total_connected += other.total_connected
        self.h1q_trivial += other.h1q_trivial
        self.h1z_trivial += other.h1z_trivial
        for key, cnt in other.degree_histogram.items():
            self.degree_histogram[key] = self.degree_histogram.get(key, 0) + cnt
        for key, cnt in other.min_genus_histogram.items():
            self.min_genus_histogram[key] = self.min_genus_histogram.get(key, 0) + cnt

    def selfcheck(self):
        ok = (0 <= self.h1z_trivial <= self.h1q_trivial <= self.total_connected
              and sum(self.degree_histogram.values()) == self.total_connected
              and sum(self.min_genus_histogram.values()) == self.total_connected)
        if not ok:
            raise InternalMismatch("inconsistent census table at n=%d" % self.n)


class _OrderAnalyzer:
    """Per-(d, n) precomputation plus the per-class analysis loop.

    analyze() returns (degree, min_genus, h1q, h1z) for a connected class
    and None for a disconnected one, running the inline consistency checks
    (degree identity both ways, jacket genus bounds, rank gauge equality,
    and the two homology-trivial bounds) on everything it touches.
    """

    def __init__(self, d, n):
        self.d = d
        self.n = n
        self.p = p = n // 2
        self.idp = identity(p)
        self.pairs = [(i, j) for i in range(d + 1) for j in range(i + 1, d + 1)]
        pair_pos = {pair: t for t, pair in enumerate(self.pairs)}
        self.jacket_pairs = [
            tuple(pair_pos[pair] for pair in adjacent_pairs(cyc))
            for cyc in color_cycles(d)
        ]
        self.gmax = max_genus(d, n)
        self.nullity = 1 + (d - 1) * n // 2
        self.fact_dm1 = factorial(d - 1)
        self.genus_base = 4 + (d - 1) * n
        # 8 * degree == fact_dm1 * (4d + d(d-1)n - 4F)
        self.degree_base = self.fact_dm1 * (4 * d + d * (d - 1) * n)
        # homology-trivial bounds cleared of denominators:
        # min_genus * 4d <= (d-1)(4 + (d-2)n) and
        # degree * 8 <= (d-1)! (4(d-1) + (d-1)(d-2)n)
        self.lemma2_rhs = (d - 1) * (4 + (d - 2) * n)
        self.eq8_rhs = self.fact_dm1 * (4 * (d - 1) + (d - 1) * (d - 2) * n)
        self.edge_ids = [(c, k) for c in range(d + 1) for k in range(p)]
        self.cols = len(self.edge_ids)

    def _violation(self, message, sigma):
        graph = ColoredGraph(self.d, self.n, sigma)
        raise InvariantViolation(message, format_graph(graph))

    def analyze(self, rest):
        d, n, p = self.d, self.n, self.p
        if not _transitive(rest, p):
            return None
        sigma = (self.idp,) + rest
        inv = [self.idp] + [inverse(sig) for sig in rest]
        pair_counts = []
        face_cycles = []
        for i, j in self.pairs:
            si = sigma[i]
            ij = inv[j]
            perm = tuple(ij[si[k]] for k in range(p))
            cycs = cycles(perm)
            pair_counts.append(len(cycs))
            face_cycles.append(cycs)
        total_faces = sum(pair_counts)

        genera = []
        fj_sum = 0
        for jp in self.jacket_pairs:
            fj = 0
            for t in jp:
                fj += pair_counts[t]
            fj_sum += fj
            num = self.genus_base - 2 * fj
            if num < 0 or num % 4:
                self._violation("jacket face count %d gives no valid genus" % fj, sigma)
            g = num // 4
            if g > self.gmax:
                self._violation("jacket genus %d above the order bound %d"
                                % (g, self.gmax), sigma)
            genera.append(g)
        omega = sum(genera)
        min_g = min(genera)
        if fj_sum != self.fact_dm1 * total_faces:
            self._violation("jacket face total %d is not (d-1)! |F|" % fj_sum, sigma)
        closed8 = self.degree_base - self.fact_dm1 * 4 * total_faces
        if closed8 != 8 * omega:
            self._violation("degree %d disagrees with its closed form" % omega, sigma)

        graph = ColoredGraph(d, n, sigma)
        tree = set(spanning_tree(graph))
        full = np.zeros((total_faces, self.cols), dtype=np.int64)
        r = 0
        for t, (i, j) in enumerate(self.pairs):
            ci = i * p
            cj = j * p
            for cyc in face_cycles[t]:
                row = full[r]
                for k in cyc:
                    row[ci + k] = 1
                    row[cj + k] = -1
                r += 1
        keep = [col for col, e in enumerate(self.edge_ids) if e not in tree]
        reduced = full[:, keep]
        rank_full = intmat.rank(full)
        rank_reduced = intmat.rank(reduced)
        if rank_full != rank_reduced:
            self._violation("full rank %d but reduced rank %d"
                            % (rank_full, rank_reduced), sigma)
        h1q = rank_reduced == self.nullity
        h1z = False
        if h1q:
            factors = intmat.invariant_factors(reduced)
            if len(factors) != rank_reduced:
                self._violation("rank %d with %d invariant factors"
                                % (rank_reduced, len(factors)), sigma)
            h1z = all(f == 1 for f in factors)
            if 4 * d * min_g > self.lemma2_rhs:
                self._violation("homology-trivial graph breaks the min-genus bound", sigma)
            if 8 * omega > self.eq8_rhs:
                self._violation("homology-trivial graph breaks the degree bound", sigma)
        return (omega, min_g, h1q, h1z)


_ANALYZERS = {}


def _analyzer(d, n):
    key = (d, n)
    got = _ANALYZERS.get(key)
    if got is None:
        got = _ANALYZERS[key] = _OrderAnalyzer(d, n)
    return got


def _process_block(payload):
    """One (prefix, stabilizer) block; top level so worker processes can
    receive it."""
    d, n, mode, prefix, stab = payload
    p = n // 2
    analyzer = _analyzer(d, n)
    table = CensusTable(d, n, mode)
    order = factorial(p)
    labeled = mode == "labeled"
    for suffix, final_stab in _prefix_reps(stab, d - len(prefix), p):
        rest = prefix + suffix
        stats = analyzer.analyze(rest)
        if stats is None:
            continue
        weight = order // len(final_stab) if labeled else 1
        table._add(*stats, weight)
    return table


def census_for_order(d, n, mode="labeled", workers=1, budget=None):
    """Census table for a single order."""
    _validate_order(d, n)
    check_budget(d, n, budget)
    if mode not in ("labeled", "canonical"):
        raise ValueError("mode must be 'labeled' or 'canonical'")
    p = n // 2
    depth = min(2, d)
    payloads = [(d, n, mode, prefix, stab)
                for prefix, stab in _prefix_reps(all_perms(p), depth, p)]
    table = CensusTable(d, n, mode)
    if workers <= 1 or len(payloads) <= 1:
        for payload in payloads:
            table.merge(_process_block(payload))
    else:
        import multiprocessing

        chunk = max(1, len(payloads) // (workers * 16))
        with multiprocessing.Pool(workers) as pool:
            for part in pool.imap(_process_block, payloads, chunksize=chunk):
                table.merge(part)
    table.selfcheck()
    return table


def run_census(d, n_max, mode="labeled", parallelism=1, budget=None):
    """Tables for every even order 2..n_max, deterministic for any worker
    count.  The budget is checked for all orders up front so an oversized
    request fails before any work is done."""
    _validate_order(d, 2)
    if n_max < 2 or n_max % 2:
        raise BadOrder("order limit %r is not an even number >= 2" % (n_max,))
    orders = list(range(2, n_max + 1, 2))
    for n in orders:
        check_budget(d, n, budget)
    return [census_for_order(d, n, mode, workers=parallelism, budget=budget)
            for n in orders]


CENSUS_CSV = "census.csv"
DEGREE_CSV = "degree_histogram.csv"
MIN_GENUS_CSV = "min_genus_histogram.csv"


def write_tables(tables, out_dir):
    """Write the three CSV products; returns their paths.

    Every value is a base-10 integer; the sphere fraction is written as an
    exact reduced numerator and denominator.
    """
    os.makedirs(out_dir, exist_ok=True)
    census_path = os.path.join(out_dir, CENSUS_CSV)
    with open(census_path, "w", newline="") as fh:
        fh.write("d,n,mode,total_connected,h1q_trivial,h1z_trivial,"
                 "sphere_fraction_num,sphere_fraction_den\n")
        for t in tables:
            frac = t.sphere_fraction
            fh.write("%d,%d,%s,%d,%d,%d,%d,%d\n" % (
                t.d, t.n, t.mode, t.total_connected, t.h1q_trivial,
                t.h1z_trivial, frac.numerator, frac.denominator))
    degree_path = os.path.join(out_dir, DEGREE_CSV)
    with open(degree_path, "w", newline="") as fh:
        fh.write("d,n,degree,count\n")
        for t in tables:
            for key in sorted(t.degree_histogram):
                fh.write("%d,%d,%d,%d\n" % (t.d, t.n, key, t.degree_histogram[key]))
    genus_path = os.path.join(out_dir, MIN_GENUS_CSV)
    with open(genus_path, "w", newline="") as fh:
        fh.write("d,n,min_genus,count\n")
        for t in tables:
            for key in sorted(t.min_genus_histogram):
                fh.write("%d,%d,%d,%d\n" % (t.d, t.n, key, t.min_genus_histogram[key]))
    return [census_path, degree_path, genus_path]
