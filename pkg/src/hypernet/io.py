"""Reading and writing hypergraphs, and the summary reports built on them.

Three text formats are supported:

``setsys``
    One edge per line, ``label: v1, v2, ...``.  ``#`` starts a comment.  An
    optional ``@vertices: v1, v2, ...`` line fixes the vertex order and
    declares isolated vertices.  ``label:`` alone is an empty edge.
``csv``
    The incidence matrix: first row holds a corner cell then the edge
    labels, each further row a vertex label followed by 0/1 cells.
``bipartite``
    Whitespace-separated ``edge vertex`` pairs, one per line.  Optional
    ``@edges`` and ``@vertices`` lines list labels in order, which is how
    empty edges and isolated vertices are carried.

Serialization writes labels in the hypergraph's own order, so
``parse(serialize(H, f), f) == H``; :func:`canonical` relabels into sorted
order first when a label-sorted document is wanted.
"""

from __future__ import annotations

import csv
import io as _io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import IO, Iterable, Optional, Union

import numpy as np

from .core import Hypergraph, HypergraphError, degree_sequence, edge_size_sequence, from_set_system
from .simplicial import toplexes

FORMATS = ("setsys", "csv", "bipartite")
SETSYS_HEADER = "# hypernet setsys"
CSV_CORNER = "vertex"

Source = Union[str, bytes, IO[str], IO[bytes]]


class ParseError(HypergraphError):
    def __init__(self, line: Optional[int], reason: str):
        super().__init__(reason if line is None else f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def _lines(data: Source) -> Iterable[str]:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if isinstance(data, str):
        return data.splitlines()
    return (ln.decode("utf-8") if isinstance(ln, bytes) else ln for ln in data)


def _split_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _parse_setsys(data: Source) -> Hypergraph:
    entries: list[tuple[str, list[str]]] = []
    seen: dict[str, int] = {}
    declared: Optional[list[str]] = None
    for lineno, raw in enumerate(_lines(data), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(lineno, "expected 'label: v1, v2, ...'")
        head, tail = line.split(":", 1)
        head = head.strip()
        if head == "@vertices":
            if declared is not None:
                raise ParseError(lineno, "second @vertices line")
            declared = _split_list(tail)
            continue
        if not head:
            raise ParseError(lineno, "empty edge label")
        if head in seen:
            raise ParseError(lineno, f"duplicate edge label {head!r} (first on line {seen[head]})")
        seen[head] = lineno
        entries.append((head, _split_list(tail)))
    try:
        return from_set_system(entries, declared)
    except HypergraphError as exc:
        raise ParseError(None, str(exc)) from None


def _parse_csv(data: Source) -> Hypergraph:
    reader = csv.reader(_lines(data))
    header: Optional[list[str]] = None
    vertices: list[str] = []
    members: list[list[str]] = []
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not c.strip() for c in row):
            continue
        row = [c.strip() for c in row]
        if header is None:
            header = row[1:]
            members = [[] for _ in header]
            continue
        if len(row) != len(header) + 1:
            raise ParseError(lineno, f"expected {len(header) + 1} cells as in the header, got {len(row)}")
        vertices.append(row[0])
        for i, cell in enumerate(row[1:]):
            if cell == "1":
                members[i].append(row[0])
            elif cell != "0":
                raise ParseError(lineno, f"cell {cell!r} is not 0 or 1")
    if header is None:
        return from_set_system([])
    try:
        return from_set_system(zip(header, members), vertices)
    except HypergraphError as exc:
        raise ParseError(None, str(exc)) from None


def _parse_bipartite(data: Source) -> Hypergraph:
    members: dict[str, list[str]] = {}
    vertex_order: dict[str, None] = {}
    declared_edges: Optional[list[str]] = None
    declared_vertices: Optional[list[str]] = None
    for lineno, raw in enumerate(_lines(data), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "@edges":
            declared_edges = parts[1:]
            for e in declared_edges:
                members.setdefault(e, [])
            continue
        if parts[0] == "@vertices":
            declared_vertices = parts[1:]
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'edge vertex', got {len(parts)} fields")
        e, v = parts
        members.setdefault(e, []).append(v)
        vertex_order.setdefault(v, None)
    if declared_edges is not None:
        declared = set(declared_edges)
        extra = [e for e in members if e not in declared]
        if extra:
            raise ParseError(None, f"edge {extra[0]!r} missing from @edges")
        if len(set(declared_edges)) != len(declared_edges):
            raise ParseError(None, "duplicate label in @edges")
        members = {e: members[e] for e in declared_edges}
    if declared_vertices is None:
        declared_vertices = list(vertex_order)
    try:
        return from_set_system(members.items(), declared_vertices)
    except HypergraphError as exc:
        raise ParseError(None, str(exc)) from None


_PARSERS = {"setsys": _parse_setsys, "csv": _parse_csv, "bipartite": _parse_bipartite}


def parse(data: Source, fmt: str = "setsys") -> Hypergraph:
    """Decode a hypergraph from text, bytes or an open file."""
    try:
        parser = _PARSERS[fmt]
    except KeyError:
        raise HypergraphError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None
    return parser(data)


def _check_labels(labels: Iterable[str], forbidden: str, kind: str, fmt: str) -> None:
    for lab in labels:
        if not lab or lab != lab.strip() or any(ch in lab for ch in forbidden) or "\n" in lab:
            raise HypergraphError(f"{kind} label {lab!r} cannot be written as {fmt}")


def serialize(H: Hypergraph, fmt: str = "setsys") -> str:
    if fmt == "setsys":
        _check_labels(H.edge_labels, ":#", "edge", fmt)
        _check_labels(H.vertex_labels, ",#", "vertex", fmt)
        out = [SETSYS_HEADER]
        if H.n:
            out.append("@vertices: " + ", ".join(H.vertex_labels))
        for label, e in zip(H.edge_labels, H.edges):
            if label == "@vertices":
                raise HypergraphError("edge label '@vertices' cannot be written as setsys")
            body = ", ".join(H.vertex_labels[j] for j in e)
            out.append(f"{label}: {body}" if body else f"{label}:")
        return "\n".join(out) + "\n"
    if fmt == "csv":
        _check_labels(H.edge_labels, "", "edge", fmt)
        _check_labels(H.vertex_labels, "", "vertex", fmt)
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([CSV_CORNER, *H.edge_labels])
        for j, v in enumerate(H.vertex_labels):
            row = ["0"] * H.m
            for i in H.memberships[j]:
                row[i] = "1"
            writer.writerow([v, *row])
        return buf.getvalue()
    if fmt == "bipartite":
        _check_labels(H.edge_labels, " \t#", "edge", fmt)
        _check_labels(H.vertex_labels, " \t#", "vertex", fmt)
        if any(lab.startswith("@") for lab in H.edge_labels):
            raise HypergraphError("edge labels starting with '@' cannot be written as bipartite")
        out = []
        if H.m:
            out.append("@edges " + " ".join(H.edge_labels))
        if H.n:
            out.append("@vertices " + " ".join(H.vertex_labels))
        for label, e in zip(H.edge_labels, H.edges):
            out.extend(f"{label} {H.vertex_labels[j]}" for j in e)
        return "\n".join(out) + "\n" if out else ""
    raise HypergraphError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def canonical(H: Hypergraph) -> Hypergraph:
    """The same hypergraph with vertices and edges in sorted label order."""
    vorder = sorted(range(H.n), key=lambda j: H.vertex_labels[j])
    eorder = sorted(range(H.m), key=lambda i: H.edge_labels[i])
    vpos = {j: k for k, j in enumerate(vorder)}
    return Hypergraph.from_edges(
        [H.vertex_labels[j] for j in vorder],
        [H.edge_labels[i] for i in eorder],
        [[vpos[j] for j in H.edges[i]] for i in eorder],
    )


def sniff_format(path: Union[str, Path]) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix in (".pairs", ".bip", ".tsv", ".txt"):
        return "bipartite"
    return "setsys"


def load(path: Union[str, Path], fmt: Optional[str] = None) -> Hypergraph:
    fmt = fmt or sniff_format(path)
    with open(path, encoding="utf-8") as fh:
        return parse(fh, fmt)


def dump(H: Hypergraph, path: Union[str, Path], fmt: Optional[str] = None) -> None:
    fmt = fmt or sniff_format(path)
    Path(path).write_text(serialize(H, fmt), encoding="utf-8")


# -- reports -----------------------------------------------------------------

@dataclass(frozen=True)
class Histogram:
    """Counts of non-negative integer values, bins in increasing order."""

    bins: tuple[tuple[int, int], ...]

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Histogram":
        arr = np.fromiter(values, dtype=np.int64)
        if not arr.size:
            return cls(())
        counts = np.bincount(arr)
        return cls(tuple((v, int(c)) for v, c in enumerate(counts.tolist()) if c))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.bins)

    def as_dict(self) -> dict[int, int]:
        return dict(self.bins)

    def to_json(self) -> dict:
        return {"bins": [{"value": v, "count": c} for v, c in self.bins], "total": self.total}

    def to_csv(self) -> str:
        return "value,count\n" + "".join(f"{v},{c}\n" for v, c in self.bins)


def toplex_intersection_histogram(H: Hypergraph, include_zero: bool = True) -> Histogram:
    """Histogram of ``inc(e, f)`` over unordered pairs of distinct toplexes.

    Intersecting pairs come from the sparse overlap table; the zero bin is
    ``C(t, 2)`` minus their count, never enumerated.
    """
    top = toplexes(H)
    t = len(top)
    if t < 2:
        return Histogram(())
    mask = np.zeros(H.m, dtype=bool)
    mask[top] = True
    rows, cols, counts = H.edge_overlaps
    kept = counts[mask[rows] & mask[cols]]
    hist = Histogram.from_values(kept.tolist())
    zero = comb(t, 2) - len(kept)
    if include_zero and zero:
        return Histogram(((0, zero),) + hist.bins)
    return hist


def sig6(x: float) -> float:
    """Round to 6 significant digits."""
    return float(f"{x:.6g}")


@dataclass(frozen=True)
class DatasetSummary:
    n: int
    m: int
    nnz: int
    toplex_count: int
    inclusiveness: Optional[Fraction]
    incidence_density: Optional[Fraction]
    degree_histogram: Histogram = field(repr=False)
    edge_size_histogram: Histogram = field(repr=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "nnz": self.nnz,
            "toplex_count": self.toplex_count,
            "inclusiveness": None if self.inclusiveness is None else sig6(float(self.inclusiveness)),
            "inclusiveness_exact": None if self.inclusiveness is None else str(self.inclusiveness),
            "incidence_density": None if self.incidence_density is None else sig6(float(self.incidence_density)),
            "degree_histogram": self.degree_histogram.to_json(),
            "edge_size_histogram": self.edge_size_histogram.to_json(),
        }

    def table(self) -> list[tuple[str, str]]:
        def fmt(x: Optional[Fraction]) -> str:
            return "undefined" if x is None else f"{float(x):.6g}"

        return [
            ("vertices", str(self.n)),
            ("edges", str(self.m)),
            ("incidences", str(self.nnz)),
            ("toplexes", str(self.toplex_count)),
            ("inclusiveness", fmt(self.inclusiveness)),
            ("density", fmt(self.incidence_density)),
        ]


def dataset_summary(H: Hypergraph) -> DatasetSummary:
    t = len(toplexes(H))
    nnz = H.nnz
    return DatasetSummary(
        n=H.n,
        m=H.m,
        nnz=nnz,
        toplex_count=t,
        inclusiveness=Fraction(H.m - t, H.m) if H.m else None,
        incidence_density=Fraction(nnz, H.n * H.m) if H.n * H.m else None,
        degree_histogram=Histogram.from_values(d for _, d in degree_sequence(H)),
        edge_size_histogram=Histogram.from_values(k for _, k in edge_size_sequence(H)),
    )


def dumps_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
