"""Jackets, genus, degree, and the minimum-genus bound.

A jacket is a cyclic order of the d+1 colors up to rotation and reversal;
there are d!/2 of them.  Keeping only the faces whose color pair is
adjacent in the cycle turns the graph into a ribbon graph whose genus
follows from the Euler relation n - |E| + F_J = 2 - 2g.  The degree of a
graph is the sum of its jacket genera.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .errors import Disconnected, InternalMismatch
from .graphs import is_connected


def color_cycles(d):
    """Canonical cyclic color orders, lexicographically sorted.

    The canonical form of a cycle is the lexicographically least of its
    rotations and reversals.  Starting at color 0 kills rotations, and for
    the two remaining directions the smaller one has its second entry
    smaller than its last, so exactly the sequences (0, r_1, ..., r_d)
    with r_1 < r_d are canonical: d!/2 of them.
    """
    return [(0,) + rest for rest in permutations(range(1, d + 1)) if rest[0] < rest[-1]]


def canonical_cycle(cycle):
    """Canonical form of an arbitrary cyclic color order."""
    k = cycle.index(0)
    forward = cycle[k:] + cycle[:k]
    rev = tuple(reversed(cycle))
    k = rev.index(0)
    backward = rev[k:] + rev[:k]
    return min(forward, backward)


def adjacent_pairs(cycle):
    """The d+1 unordered color pairs that are cyclically adjacent."""
    out = []
    for t, c in enumerate(cycle):
        nxt = cycle[(t + 1) % len(cycle)]
        out.append((c, nxt) if c < nxt else (nxt, c))
    return out


@dataclass(frozen=True)
class Jacket:
    """One jacket: canonical color cycle, kept-face count, genus."""

    cycle: tuple
    face_count: int
    genus: int


def jacket_genus(d, n, face_count):
    """Genus from the Euler relation; the count |E| = n(d+1)/2 is fixed, so
    2 - 2g = n - n(d+1)/2 + F_J, i.e. 4g = 4 + (d-1)n - 2 F_J."""
    num = 4 + (d - 1) * n - 2 * face_count
    if num < 0 or num % 4:
        raise InternalMismatch(
            "jacket face count %d gives no non-negative integer genus at d=%d n=%d"
            % (face_count, d, n))
    return num // 4


def max_genus(d, n):
    """Largest genus any jacket of an order-n graph can have,
    floor((2 + n(d-1)) / 4)."""
    return (2 + n * (d - 1)) // 4


def enumerate_jackets(graph, faces):
    """All d!/2 jackets of a connected graph, in canonical cycle order."""
    if not is_connected(graph):
        raise Disconnected("jacket genus needs a connected graph")
    d, n = graph.d, graph.n
    out = []
    for cyc in color_cycles(d):
        fj = sum(faces.count_by_pair[pair] for pair in adjacent_pairs(cyc))
        out.append(Jacket(cyc, fj, jacket_genus(d, n, fj)))
    return out


@dataclass(frozen=True)
class DegreeReport:
    """Degree of a graph together with the per-jacket genera.

    degree_sum adds the jacket genera; degree_closed_form evaluates
    (d-1)! (d/2 + d(d-1)n/8 - |F|/2).  The two must agree; degree() raises
    InternalMismatch otherwise, so a stored report is always consistent.
    min_genus_bound is the exact rational (d-1)/d (1 + (d-2)n/4) that
    min_genus cannot exceed whenever the first homology vanishes over Q.
    """

    genera: tuple
    degree_sum: int
    degree_closed_form: int
    min_genus: int
    min_genus_bound: Fraction


def degree(graph, jackets, faces):
    """Compute the degree both ways and cross-check them."""
    d, n = graph.d, graph.n
    total = sum(j.genus for j in jackets)
    closed = factorial(d - 1) * (
        Fraction(d, 2) + Fraction(d * (d - 1) * n, 8) - Fraction(faces.total, 2))
    if closed.denominator != 1 or closed != total:
        raise InternalMismatch(
            "degree mismatch: jacket sum %d vs closed form %s" % (total, closed))
    bound = Fraction(d - 1, d) * (1 + Fraction((d - 2) * n, 4))
    return DegreeReport(
        genera=tuple((j.cycle, j.genus) for j in jackets),
        degree_sum=total,
        degree_closed_form=int(closed),
        min_genus=min(j.genus for j in jackets),
        min_genus_bound=bound,
    )


def check_min_genus_bound(report, homology_trivial):
    """True unless a rationally homology-trivial graph has every jacket
    genus above the bound."""
    if not homology_trivial:
        return True
    return report.min_genus <= report.min_genus_bound


def trivial_homology_degree_bound(d, n):
    """Upper bound (d-1)! ((d-1)/2 + (d-1)(d-2)n/8) on the degree of a
    graph whose first homology vanishes over Q, as an exact rational."""
    return factorial(d - 1) * (
        Fraction(d - 1, 2) + Fraction((d - 1) * (d - 2) * n, 8))
