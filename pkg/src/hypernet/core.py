"""Hypergraph data model: construction, incidence, duality and the bicolored bridge.

Vertices and edges are identified internally by dense integer indices; labels
only appear at the API boundary.  Incidence is stored twice (edge -> vertices
and vertex -> edges) as sorted index tuples, so the incidence matrix is never
materialized unless asked for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy import sparse


class HypergraphError(ValueError):
    """Base class for rejected inputs."""


class UnknownLabelError(HypergraphError):
    pass


class DuplicateLabelError(HypergraphError):
    pass


class BudgetExceededError(HypergraphError):
    """Raised when a combinatorial expansion would exceed the simplex budget."""


@dataclass(frozen=True)
class Hypergraph:
    """An immutable hypergraph ``H = <V, E>`` with E an indexed family.

    ``edges[i]`` holds the sorted vertex indices of edge ``i`` and
    ``memberships[j]`` the sorted edge indices containing vertex ``j``.
    Equality is label-sensitive and order-sensitive.
    """

    vertex_labels: tuple[str, ...]
    edge_labels: tuple[str, ...]
    edges: tuple[tuple[int, ...], ...]
    memberships: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        if len(self.edges) != len(self.edge_labels):
            raise HypergraphError("edge label count does not match edge count")
        if len(self.memberships) != len(self.vertex_labels):
            raise HypergraphError("vertex label count does not match membership count")
        _check_unique(self.vertex_labels, "vertex")
        _check_unique(self.edge_labels, "edge")
        n = len(self.vertex_labels)
        for i, e in enumerate(self.edges):
            if any(b <= a for a, b in zip(e, e[1:])):
                raise HypergraphError(f"edge {self.edge_labels[i]!r} is not a sorted set")
            if e and not (0 <= e[0] and e[-1] < n):
                raise HypergraphError(f"edge {self.edge_labels[i]!r} has an out-of-range vertex")
        if _transpose(self.edges, n) != self.memberships:
            raise HypergraphError("vertex memberships are not the transpose of the edges")

    @classmethod
    def from_edges(
        cls,
        vertex_labels: Sequence[str],
        edge_labels: Sequence[str],
        edges: Iterable[Iterable[int]],
    ) -> "Hypergraph":
        edges = tuple(tuple(sorted(set(e))) for e in edges)
        return cls(
            tuple(vertex_labels),
            tuple(edge_labels),
            edges,
            _transpose(edges, len(vertex_labels)),
        )

    @property
    def n(self) -> int:
        return len(self.vertex_labels)

    @property
    def m(self) -> int:
        return len(self.edge_labels)

    @property
    def nnz(self) -> int:
        return sum(len(e) for e in self.edges)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: j for j, v in enumerate(self.vertex_labels)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.edge_labels)}

    @cached_property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    def vertex_id(self, label: str) -> int:
        try:
            return self.vertex_index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown vertex label {label!r}") from None

    def edge_id(self, label: str) -> int:
        try:
            return self.edge_index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown edge label {label!r}") from None

    def edge(self, label: str) -> frozenset[str]:
        """Vertex labels of the named edge."""
        return frozenset(self.vertex_labels[j] for j in self.edges[self.edge_id(label)])

    def set_system(self) -> dict[str, frozenset[str]]:
        return {lab: frozenset(self.vertex_labels[j] for j in e)
                for lab, e in zip(self.edge_labels, self.edges)}

    def max_edge_size(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def sparse_incidence(self) -> sparse.csc_matrix:
        """The n x m incidence matrix as a scipy CSC matrix of int64."""
        indptr = np.zeros(self.m + 1, dtype=np.int64)
        np.cumsum([len(e) for e in self.edges], out=indptr[1:])
        indices = np.fromiter((j for e in self.edges for j in e), dtype=np.int64, count=int(indptr[-1]))
        data = np.ones(len(indices), dtype=np.int64)
        return sparse.csc_matrix((data, indices, indptr), shape=(self.n, self.m))

    @cached_property
    def edge_overlaps(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """All pairs ``i < j`` of edges that intersect, with ``inc(i, j)``.

        Computed from the sparse product ``B^T B``; pairs come back sorted by
        ``(i, j)``.
        """
        B = self.sparse_incidence()
        gram = sparse.triu(B.T @ B, k=1).tocoo()
        order = np.lexsort((gram.col, gram.row))
        return (
            gram.row[order].astype(np.int64),
            gram.col[order].astype(np.int64),
            gram.data[order].astype(np.int64),
        )

    def edge_subhypergraph(self, edge_ids: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph on the given edges and the vertices they cover."""
        edge_ids = sorted(set(edge_ids))
        covered = sorted({j for i in edge_ids for j in self.edges[i]})
        remap = {j: k for k, j in enumerate(covered)}
        return Hypergraph.from_edges(
            [self.vertex_labels[j] for j in covered],
            [self.edge_labels[i] for i in edge_ids],
            [[remap[j] for j in self.edges[i]] for i in edge_ids],
        )

    def restrict_edges(self, edge_ids: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph on the given edges, keeping every vertex."""
        edge_ids = sorted(set(edge_ids))
        return Hypergraph.from_edges(
            self.vertex_labels,
            [self.edge_labels[i] for i in edge_ids],
            [self.edges[i] for i in edge_ids],
        )


def _check_unique(labels: Sequence[str], kind: str) -> None:
    if len(set(labels)) != len(labels):
        seen = set()
        for lab in labels:
            if lab in seen:
                raise DuplicateLabelError(f"duplicate {kind} label {lab!r}")
            seen.add(lab)


def _transpose(rows: Sequence[Sequence[int]], n_cols: int) -> tuple[tuple[int, ...], ...]:
    cols: list[list[int]] = [[] for _ in range(n_cols)]
    for i, row in enumerate(rows):
        for j in row:
            cols[j].append(i)
    return tuple(tuple(c) for c in cols)


def from_set_system(
    entries: Iterable[tuple[str, Iterable[str]]],
    vertex_labels: Optional[Sequence[str]] = None,
) -> Hypergraph:
    """Build a hypergraph from ``(edge_label, vertex_labels)`` pairs.

    Repeated vertices inside an edge collapse.  Without explicit
    ``vertex_labels`` the vertex order is order of first appearance; with
    them, every vertex named by an edge must be listed.
    """
    edge_labels: list[str] = []
    edge_members: list[list[str]] = []
    seen_edges: set[str] = set()
    for label, members in entries:
        if label in seen_edges:
            raise DuplicateLabelError(f"duplicate edge label {label!r}")
        seen_edges.add(label)
        edge_labels.append(label)
        edge_members.append(list(members))

    if vertex_labels is None:
        index: dict[str, int] = {}
        for members in edge_members:
            for v in members:
                if v not in index:
                    index[v] = len(index)
        vertex_labels = list(index)
    else:
        vertex_labels = list(vertex_labels)
        _check_unique(vertex_labels, "vertex")
        index = {v: j for j, v in enumerate(vertex_labels)}

    edges = []
    for label, members in zip(edge_labels, edge_members):
        try:
            edges.append([index[v] for v in members])
        except KeyError as exc:
            raise UnknownLabelError(
                f"edge {label!r} names undeclared vertex {exc.args[0]!r}") from None
    return Hypergraph.from_edges(vertex_labels, edge_labels, edges)


def disjoint_union(H1: Hypergraph, H2: Hypergraph,
                   prefixes: tuple[str, str] = ("0:", "1:")) -> Hypergraph:
    """Disjoint union with every label prefixed to keep namespaces apart."""
    p1, p2 = prefixes
    n1 = H1.n
    return Hypergraph.from_edges(
        [p1 + v for v in H1.vertex_labels] + [p2 + v for v in H2.vertex_labels],
        [p1 + e for e in H1.edge_labels] + [p2 + e for e in H2.edge_labels],
        list(H1.edges) + [[j + n1 for j in e] for e in H2.edges],
    )


# -- incidence matrix ---------------------------------------------------------

@dataclass(frozen=True)
class IncidenceMatrix:
    """Boolean incidence matrix as a set of ``(row, col)`` positions of ones."""

    n_rows: int
    m_cols: int
    entries: frozenset[tuple[int, int]]
    row_labels: tuple[str, ...] = ()
    col_labels: tuple[str, ...] = ()

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def density(self) -> float:
        cells = self.n_rows * self.m_cols
        return self.nnz / cells if cells else 0.0

    def transpose(self) -> "IncidenceMatrix":
        return IncidenceMatrix(
            self.m_cols, self.n_rows,
            frozenset((c, r) for r, c in self.entries),
            self.col_labels, self.row_labels,
        )

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.m_cols), dtype=np.uint8)
        for r, c in self.entries:
            out[r, c] = 1
        return out


def incidence_matrix(H: Hypergraph) -> IncidenceMatrix:
    return IncidenceMatrix(
        H.n, H.m,
        frozenset((j, i) for i, e in enumerate(H.edges) for j in e),
        H.vertex_labels, H.edge_labels,
    )


def dual(H: Hypergraph) -> Hypergraph:
    """The dual hypergraph: vertices and edges swap roles (B -> B^T)."""
    return Hypergraph(H.edge_labels, H.vertex_labels, H.memberships, H.edges)


# -- quantitative adjacency and incidence --------------------------------------

def adjacency(H: Hypergraph, U: Iterable[str]) -> int:
    """Number of edges containing every vertex of ``U``."""
    ids = {H.vertex_id(u) for u in U}
    if not ids:
        raise HypergraphError("adjacency of the empty vertex set is undefined")
    # intersect the membership lists, starting from the shortest
    lists = sorted((H.memberships[j] for j in ids), key=len)
    common = set(lists[0])
    for other in lists[1:]:
        common.intersection_update(other)
    return len(common)


def incidence(H: Hypergraph, F: Iterable[str]) -> int:
    """Size of the common intersection of the edges in ``F``."""
    ids = {H.edge_id(f) for f in F}
    if not ids:
        raise HypergraphError("incidence of the empty edge set is undefined")
    sets = sorted((H.edge_sets[i] for i in ids), key=len)
    return len(sets[0].intersection(*sets[1:]))


def degree_sequence(H: Hypergraph) -> list[tuple[str, int]]:
    return [(v, len(es)) for v, es in zip(H.vertex_labels, H.memberships)]


def edge_size_sequence(H: Hypergraph) -> list[tuple[str, int]]:
    return [(e, len(vs)) for e, vs in zip(H.edge_labels, H.edges)]


# -- bicolored graphs -----------------------------------------------------------

@dataclass(frozen=True)
class BicoloredGraph:
    """A graph with a fixed two-coloring carried alongside it.

    ``colors[k]`` is 0 for nodes playing vertices and 1 for nodes playing
    hyperedges; ``links`` are index pairs into ``node_labels``.
    """

    node_labels: tuple[str, ...]
    colors: tuple[int, ...]
    links: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.node_labels) != len(self.colors):
            raise HypergraphError("one color per node is required")
        if any(c not in (0, 1) for c in self.colors):
            raise HypergraphError("colors must be 0 or 1")

    def swap_colors(self) -> "BicoloredGraph":
        return BicoloredGraph(self.node_labels, tuple(1 - c for c in self.colors), self.links)


def to_bicolored(H: Hypergraph) -> BicoloredGraph:
    labels = H.vertex_labels + H.edge_labels
    colors = (0,) * H.n + (1,) * H.m
    links = tuple((j, H.n + i) for i, e in enumerate(H.edges) for j in e)
    return BicoloredGraph(labels, colors, links)


def from_bicolored(G: BicoloredGraph) -> Hypergraph:
    """Color-0 nodes become vertices, color-1 nodes become edges."""
    vertex_nodes = [k for k, c in enumerate(G.colors) if c == 0]
    edge_nodes = [k for k, c in enumerate(G.colors) if c == 1]
    vpos = {k: j for j, k in enumerate(vertex_nodes)}
    epos = {k: i for i, k in enumerate(edge_nodes)}
    members: list[list[int]] = [[] for _ in edge_nodes]
    for a, b in G.links:
        if G.colors[a] == G.colors[b]:
            raise HypergraphError(
                f"link {G.node_labels[a]!r}-{G.node_labels[b]!r} joins two nodes of color {G.colors[a]}")
        if G.colors[a] == 1:
            a, b = b, a
        members[epos[b]].append(vpos[a])
    return Hypergraph.from_edges(
        [G.node_labels[k] for k in vertex_nodes],
        [G.node_labels[k] for k in edge_nodes],
        members,
    )
