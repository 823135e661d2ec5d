"""``hypernet`` command line: ingestion bound to the analytics.

Exit status is 0 on success, 1 on a usage error and 2 when the data is
rejected (parse failure, unknown label, budget exceeded, ...).
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from typing import Optional, Sequence

from . import homology, simplicial, swalk
from . import io as hio
from .core import Hypergraph, HypergraphError, dual


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("input", help="hypergraph file, or - for standard input")
    common.add_argument("--format", choices=hio.FORMATS, help="input format (default: from extension)")
    common.add_argument("--output", help="write the report here instead of standard output")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="structured JSON report")
    out.add_argument("--csv", action="store_true", help="flat CSV table")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="worker threads for BFS batches and per-component homology")

    parser = _Parser(prog="hypernet", description="Hypergraph analytics.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    add("summary", "sizes, toplexes, inclusiveness, density and distributions")
    p = add("dual", "dual hypergraph")
    p.add_argument("--to", choices=hio.FORMATS, default="setsys")
    p = add("simplify", "keep only toplexes")
    p.add_argument("--to", choices=hio.FORMATS, default="setsys")
    p = add("section", "k-section (all k-vertex sets inside some edge)")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--to", choices=hio.FORMATS, default="setsys")
    add("linegraph", "line graph with intersection sizes")
    add("twosection", "2-section graph with co-membership counts")
    p = add("cliquerecon", "rebuild a hypergraph from the maximal cliques of the 2-section")
    p.add_argument("--dual", action="store_true", help="use the line graph instead")
    p.add_argument("--to", choices=hio.FORMATS, default="setsys")
    p = add("scomponents", "s-connected components")
    p.add_argument("--s", type=_positive, required=True)
    p = add("sprofile", "component count and largest component for s = 1..smax")
    p.add_argument("--smax", type=_positive, required=True)
    p = add("sdistance", "s-distance between two edges")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("source")
    p.add_argument("target")
    p = add("centrality", "per-edge s-centrality")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--measure", choices=("degree", "clustering", "closeness", "betweenness"),
                   default="closeness")
    p = add("maxdiam", "s-component with the largest s-diameter")
    p.add_argument("--s", type=_positive, required=True)
    p = add("betti", "Betti sequence over GF(2)")
    p.add_argument("--cap", type=_nonneg, default=homology.DEFAULT_CAP)
    p = add("betti-components", "Betti sequence of each s-component")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--cap", type=_nonneg, default=homology.DEFAULT_CAP)
    p = add("toplexhist", "distribution of toplex pairwise intersection sizes")
    p.add_argument("--no-zero", action="store_true", help="drop the bin of disjoint pairs")
    p = add("convert", "rewrite in another format")
    p.add_argument("--to", choices=hio.FORMATS, required=True)
    return parser


# -- rendering -----------------------------------------------------------------

def _num(x) -> str:
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return f"{x:.10g}"
    return str(x)


def _json_num(x):
    if isinstance(x, float):
        if math.isinf(x):
            return None
        return float(f"{x:.10g}")
    return x


def _table(header: Sequence[str], rows: Sequence[Sequence], style: str) -> str:
    if style == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_num(x) for x in r])
        return buf.getvalue()
    return "\t".join(header) + "\n" + "".join("\t".join(_num(x) for x in r) + "\n" for r in rows)


def _members(labels: Sequence[str]) -> str:
    return " ".join(labels)


class Report:
    """A JSON document plus a header/rows table view of the same data."""

    def __init__(self, doc, header: Sequence[str], rows: Sequence[Sequence], text: Optional[str] = None):
        self.doc, self.header, self.rows, self.text = doc, header, rows, text

    def render(self, style: str) -> str:
        if style == "json":
            return hio.dumps_json(self.doc)
        if style == "table" and self.text is not None:
            return self.text
        return _table(self.header, self.rows, style)


def _hypergraph_report(H: Hypergraph, fmt: str) -> Report:
    text = hio.serialize(H, fmt)
    doc = {
        "vertices": list(H.vertex_labels),
        "edges": [{"label": lab, "members": [H.vertex_labels[j] for j in e]}
                  for lab, e in zip(H.edge_labels, H.edges)],
    }
    rows = [(lab, _members([H.vertex_labels[j] for j in e])) for lab, e in zip(H.edge_labels, H.edges)]
    return Report(doc, ("edge", "members"), rows, text)


def _graph_report(G: simplicial.Graph) -> Report:
    doc = {"nodes": list(G.nodes),
           "links": [{"source": u, "target": v, "weight": w} for (u, v), w in zip(G.links, G.weights)]}
    rows = [(u, v, w) for (u, v), w in zip(G.links, G.weights)]
    return Report(doc, ("source", "target", "weight"), rows)


# -- commands ------------------------------------------------------------------

def _summary(H, args):
    s = hio.dataset_summary(H)
    doc = s.to_json()
    text = "".join(f"{k}\t{v}\n" for k, v in s.table())
    text += "\ndegree\tcount\n" + "".join(f"{v}\t{c}\n" for v, c in s.degree_histogram.bins)
    text += "\nedge_size\tcount\n" + "".join(f"{v}\t{c}\n" for v, c in s.edge_size_histogram.bins)
    return Report(doc, ("statistic", "value"), s.table(), text)


def _scomponents(H, args):
    comps = swalk.s_components(H, args.s)
    doc = {"s": args.s, "components": [list(c) for c in comps]}
    rows = [(k, len(c), _members(c)) for k, c in enumerate(comps)]
    return Report(doc, ("component", "size", "members"), rows)


def _sprofile(H, args):
    prof = swalk.s_component_profile(H, args.smax)
    doc = {"levels": [{"s": lv.s, "component_count": lv.component_count,
                       "largest_component_size": lv.largest_component_size}
                      for lv in prof.levels]}
    return Report(doc, ("s", "component_count", "largest_component_size"), prof.rows())


def _sdistance(H, args):
    d = swalk.s_distance(H, args.s, args.source, args.target)
    doc = {"s": args.s, "source": args.source, "target": args.target, "distance": _json_num(d)}
    return Report(doc, ("source", "target", "distance"), [(args.source, args.target, d)])


def _centrality(H, args):
    L = swalk.s_line_graph(H, args.s)
    labels = [H.edge_labels[i] for i in L.nodes]
    if args.measure == "betweenness":
        values = swalk.s_betweenness_all(H, args.s, L, threads=args.threads)
        vals = [values[e] for e in labels]
    else:
        fn = {"degree": swalk.s_degree, "clustering": swalk.s_clustering_coefficient,
              "closeness": swalk.s_closeness}[args.measure]
        vals = swalk._parallel_map(lambda e: fn(H, args.s, e, L), labels, args.threads)
    order = sorted(range(len(labels)), key=lambda k: labels[k])
    rows = [(labels[k], vals[k]) for k in order]
    doc = {"s": args.s, "measure": args.measure,
           "values": [{"edge": e, "value": _json_num(v)} for e, v in rows]}
    return Report(doc, ("edge", args.measure), rows)


def _maxdiam(H, args):
    comp, diam = swalk.max_diameter_component(H, args.s, threads=args.threads)
    doc = {"s": args.s, "diameter": diam, "component": list(comp)}
    text = f"diameter\t{diam}\nsize\t{len(comp)}\nmembers\t{_members(comp)}\n"
    return Report(doc, ("diameter", "size", "members"), [(diam, len(comp), _members(comp))], text)


def _betti(H, args):
    beta = homology.betti_sequence(H, args.cap, threads=args.threads)
    doc = {"cap": args.cap, "betti": list(beta)}
    text = "betti\t" + ",".join(map(str, beta)) + "\n"
    return Report(doc, ("dimension", "betti"), list(enumerate(beta)), text)


def _betti_components(H, args):
    result = homology.betti_per_component(H, args.s, args.cap, threads=args.threads)
    doc = {"s": args.s, "cap": args.cap,
           "components": [{"members": list(c), "betti": list(b)} for c, b in result.items()]}
    rows = [(k, ",".join(map(str, b)), _members(c)) for k, (c, b) in enumerate(result.items())]
    return Report(doc, ("component", "betti", "members"), rows)


def _toplexhist(H, args):
    hist = hio.toplex_intersection_histogram(H, include_zero=not args.no_zero)
    return Report(hist.to_json(), ("value", "count"), list(hist.bins))


def _cliquerecon(H, args):
    G = simplicial.line_graph(H) if args.dual else simplicial.two_section_graph(H)
    return _hypergraph_report(simplicial.clique_reconstruction(G), args.to)


COMMANDS = {
    "summary": _summary,
    "dual": lambda H, a: _hypergraph_report(dual(H), a.to),
    "simplify": lambda H, a: _hypergraph_report(simplicial.simplify(H), a.to),
    "section": lambda H, a: _hypergraph_report(simplicial.k_section(H, a.k), a.to),
    "linegraph": lambda H, a: _graph_report(simplicial.line_graph(H)),
    "twosection": lambda H, a: _graph_report(simplicial.two_section_graph(H)),
    "cliquerecon": _cliquerecon,
    "scomponents": _scomponents,
    "sprofile": _sprofile,
    "sdistance": _sdistance,
    "centrality": _centrality,
    "maxdiam": _maxdiam,
    "betti": _betti,
    "betti-components": _betti_components,
    "toplexhist": _toplexhist,
    "convert": lambda H, a: _hypergraph_report(H, a.to),
}


def _read(args) -> Hypergraph:
    if args.input == "-":
        return hio.parse(sys.stdin, args.format or "setsys")
    return hio.load(args.input, args.format)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return 1
    style = "json" if args.json else "csv" if args.csv else "table"
    try:
        H = _read(args)
        text = COMMANDS[args.command](H, args).render(style)
    except (HypergraphError, OSError, UnicodeDecodeError) as exc:
        sys.stderr.write(f"hypernet {args.command}: {exc}\n")
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
