"""One-stop per-graph analysis and its text/JSON renderings."""

from dataclasses import dataclass

from .graphs import enumerate_faces
from .homology import homology_report, incidence_matrix
from .jackets import check_min_genus_bound, degree, enumerate_jackets


@dataclass(frozen=True)
class GraphAnalysis:
    graph: object
    faces: object
    jackets: tuple
    degree_report: object
    homology: object
    min_genus_bound_ok: bool


def analyze_graph(graph):
    """Faces, jackets, degree, homology, and the min-genus bound check."""
    faces = enumerate_faces(graph)
    jackets = tuple(enumerate_jackets(graph, faces))
    report = degree(graph, jackets, faces)
    matrix = incidence_matrix(graph, faces)
    hom = homology_report(graph, matrix)
    bound_ok = check_min_genus_bound(report, hom.h1_rational_trivial)
    return GraphAnalysis(graph, faces, jackets, report, hom, bound_ok)


def cycle_text(cycle):
    return ",".join(str(c) for c in cycle)


def render_text(analysis):
    """The per-graph report: faces, jackets, degree and its bound, then
    the homology verdicts."""
    g = analysis.graph
    report = analysis.degree_report
    hom = analysis.homology
    lines = ["d=%d n=%d edges=%d" % (g.d, g.n, g.edge_count)]
    lines.append("faces total=%d" % analysis.faces.total)
    for (i, j) in sorted(analysis.faces.count_by_pair):
        lines.append("pair %d,%d faces=%d" % (i, j, analysis.faces.count_by_pair[(i, j)]))
    for jk in analysis.jackets:
        lines.append("jacket %s F_J=%d g=%d" % (cycle_text(jk.cycle), jk.face_count, jk.genus))
    bound = report.min_genus_bound
    lines.append("degree=%d min_genus=%d lemma2_bound=%d/%d"
                 % (report.degree_sum, report.min_genus,
                    bound.numerator, bound.denominator))
    lines.append("rank=%d L=%d F=%d h1Q=%s factors=%s h1Z=%s" % (
        hom.rank,
        g.nullity,
        analysis.faces.total,
        "trivial" if hom.h1_rational_trivial else "nontrivial",
        ",".join(str(f) for f in hom.invariant_factors),
        "trivial" if hom.h1_integral_trivial else "nontrivial",
    ))
    return "\n".join(lines) + "\n"


def render_json(analysis):
    """The same report as a plain dict ready for json.dumps."""
    g = analysis.graph
    report = analysis.degree_report
    hom = analysis.homology
    bound = report.min_genus_bound
    return {
        "d": g.d,
        "n": g.n,
        "edges": g.edge_count,
        "faces": {
            "total": analysis.faces.total,
            "by_pair": [
                {"pair": [i, j], "count": analysis.faces.count_by_pair[(i, j)]}
                for (i, j) in sorted(analysis.faces.count_by_pair)
            ],
        },
        "jackets": [
            {"cycle": list(jk.cycle), "face_count": jk.face_count, "genus": jk.genus}
            for jk in analysis.jackets
        ],
        "degree": {
            "value": report.degree_sum,
            "min_genus": report.min_genus,
            "min_genus_bound": {"num": bound.numerator, "den": bound.denominator},
            "bound_satisfied": analysis.min_genus_bound_ok,
        },
        "homology": {
            "rank": hom.rank,
            "nullity": g.nullity,
            "faces": analysis.faces.total,
            "h1_rational_trivial": hom.h1_rational_trivial,
            "invariant_factors": list(hom.invariant_factors),
            "h1_integral_trivial": hom.h1_integral_trivial,
        },
    }


def render_faces_only(graph):
    """Fallback report for a disconnected graph: faces are still defined
    even though jackets and homology are not."""
    faces = enumerate_faces(graph)
    lines = ["d=%d n=%d edges=%d" % (graph.d, graph.n, graph.edge_count)]
    lines.append("faces total=%d" % faces.total)
    for (i, j) in sorted(faces.count_by_pair):
        lines.append("pair %d,%d faces=%d" % (i, j, faces.count_by_pair[(i, j)]))
    return "\n".join(lines) + "\n"
