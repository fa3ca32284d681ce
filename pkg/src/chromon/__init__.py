"""Exact combinatorics of (d+1)-edge-colored bipartite graphs.

These graphs are dual to colored d-dimensional triangulations.  The
package computes their faces, jackets and jacket genera, the degree, the
first homology of the dual complex (both over Q and over Z), tree/cotree/
crossing splits of jacket embeddings, colored graphs of barycentric
subdivisions, and exhaustive censuses showing how rare homology-trivial
graphs are.
"""

from .census import CensusTable, enumerate_connected, run_census
from .decomposition import TreeCotreeSplit, count_by_genus, tree_cotree
from .graphs import (ColoredGraph, Face, FaceCensus, build_graph,
                     enumerate_faces, format_graph, is_connected, parse_graph)
from .homology import (HomologyReport, IncidenceMatrix, homology_report,
                       incidence_matrix, spanning_tree)
from .jackets import (DegreeReport, Jacket, check_min_genus_bound, degree,
                      enumerate_jackets, max_genus, trivial_homology_degree_bound)
from .subdivision import (SimplicialComplex, barycentric_colorize,
                          build_complex, format_complex, parse_complex)

__version__ = "0.1.0"
