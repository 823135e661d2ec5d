"""High-order walks: s-line graphs and the metrics built on them.

An s-walk is a sequence of distinct consecutive edges whose pairwise
intersections have at least ``s`` vertices.  Everything here reduces to
breadth-first search on the s-line graph, whose nodes are the edges of size
at least ``s``.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, TypeVar

import numpy as np

from .core import Hypergraph, HypergraphError, dual

T = TypeVar("T")
R = TypeVar("R")

INF = math.inf


class EdgeTooSmallError(HypergraphError):
    """The named edge has fewer than ``s`` vertices, so it is not in the s-line graph."""


@dataclass(frozen=True, eq=False)
class SLineGraph:
    """Adjacency of edges by intersection size >= s, in CSR form.

    Rows are indexed by edge index of the source hypergraph, so edges too
    small to take part simply have empty rows; ``nodes`` lists the ones
    that do.
    """

    s: int
    nodes: tuple[int, ...]
    indptr: np.ndarray
    indices: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "_member", frozenset(self.nodes))

    def __contains__(self, e: int) -> bool:
        return e in self._member

    def neighbors(self, e: int) -> list[int]:
        return self.indices[self.indptr[e]:self.indptr[e + 1]].tolist()

    def degree(self, e: int) -> int:
        return int(self.indptr[e + 1] - self.indptr[e])

    @property
    def n_links(self) -> int:
        return len(self.indices) // 2

    def links(self) -> list[tuple[int, int]]:
        return [(e, f) for e in self.nodes for f in self.neighbors(e) if e < f]

    def adjacency_lists(self) -> dict[int, list[int]]:
        return {e: self.neighbors(e) for e in self.nodes}


@dataclass(frozen=True)
class SComponentLevel:
    s: int
    component_count: int
    largest_component_size: int
    components: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class SComponentProfile:
    levels: tuple[SComponentLevel, ...]

    def rows(self) -> list[tuple[int, int, int]]:
        return [(lv.s, lv.component_count, lv.largest_component_size) for lv in self.levels]


def _check_s(s: int) -> None:
    if not isinstance(s, (int, np.integer)) or s < 1:
        raise HypergraphError(f"walk width s must be a positive integer, got {s!r}")


def s_line_graph(H: Hypergraph, s: int) -> SLineGraph:
    _check_s(s)
    rows, cols, counts = H.edge_overlaps
    keep = counts >= s
    r, c = rows[keep], cols[keep]
    src = np.concatenate([r, c])
    dst = np.concatenate([c, r])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(H.m + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=H.m), out=indptr[1:])
    nodes = tuple(i for i, e in enumerate(H.edges) if len(e) >= s)
    return SLineGraph(int(s), nodes, indptr, dst)


def _edge_node(H: Hypergraph, L: SLineGraph, label: str) -> int:
    i = H.edge_id(label)
    if i not in L:
        raise EdgeTooSmallError(
            f"edge {label!r} has size {len(H.edges[i])} < s={L.s}")
    return i


def bfs_distances(L: SLineGraph, source: int) -> dict[int, int]:
    """Hop distances from ``source`` to every node reachable in ``L``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in L.neighbors(u):
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return dist


def _parallel_map(fn: Callable[[T], R], items: Sequence[T], threads: Optional[int]) -> list[R]:
    if threads is None or threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _sorted_labels(H: Hypergraph, ids: Iterable[int]) -> tuple[str, ...]:
    return tuple(sorted(H.edge_labels[i] for i in ids))


def s_distance(H: Hypergraph, s: int, e: str, f: str, L: Optional[SLineGraph] = None) -> float:
    """Length of the shortest s-walk from ``e`` to ``f``; ``math.inf`` if none.

    Returned as an ``int`` when finite.
    """
    L = L if L is not None else s_line_graph(H, s)
    src, dst = _edge_node(H, L, e), _edge_node(H, L, f)
    if src == dst:
        return 0
    return bfs_distances(L, src).get(dst, INF)


def _components(L: SLineGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in L.nodes:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for w in L.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def s_components(H: Hypergraph, s: int, L: Optional[SLineGraph] = None) -> list[tuple[str, ...]]:
    """Connected components of the s-line graph as sorted edge-label tuples.

    Components are listed in order of their sorted label tuples.
    """
    L = L if L is not None else s_line_graph(H, s)
    return sorted(_sorted_labels(H, c) for c in _components(L))


def _diameter(L: SLineGraph, members: Sequence[int], threads: Optional[int] = None) -> int:
    def eccentricity(u: int) -> int:
        dist = bfs_distances(L, u)
        if any(v not in dist for v in members):
            raise HypergraphError("edge set is not s-connected; its s-diameter is infinite")
        return max(dist[v] for v in members)

    return max(_parallel_map(eccentricity, list(members), threads), default=0)


def s_diameter(H: Hypergraph, s: int, component: Iterable[str],
               L: Optional[SLineGraph] = None, threads: Optional[int] = None) -> int:
    L = L if L is not None else s_line_graph(H, s)
    members = sorted({_edge_node(H, L, lab) for lab in component})
    if not members:
        raise HypergraphError("s-diameter of an empty edge set is undefined")
    return _diameter(L, members, threads)


def max_diameter_component(H: Hypergraph, s: int,
                           threads: Optional[int] = None) -> tuple[tuple[str, ...], int]:
    """The s-component of largest s-diameter.

    Ties go to the lexicographically least sorted label tuple.
    """
    L = s_line_graph(H, s)
    if not L.nodes:
        raise HypergraphError(f"no edge has size >= {s}; the {s}-line graph is empty")
    best: Optional[tuple[int, tuple[str, ...]]] = None
    for comp in _components(L):
        labels = _sorted_labels(H, comp)
        diam = _diameter(L, comp, threads)
        if best is None or diam > best[0] or (diam == best[0] and labels < best[1]):
            best = (diam, labels)
    return best[1], best[0]


def s_degree(H: Hypergraph, s: int, e: str, L: Optional[SLineGraph] = None) -> int:
    """Number of other edges meeting ``e`` in at least ``s`` vertices."""
    L = L if L is not None else s_line_graph(H, s)
    return L.degree(_edge_node(H, L, e))


def vertex_s_degree(H: Hypergraph, s: int, v: str) -> int:
    """Vertex version of :func:`s_degree`, taken through the dual."""
    return s_degree(dual(H), s, v)


def s_clustering_coefficient(H: Hypergraph, s: int, e: str,
                             L: Optional[SLineGraph] = None) -> float:
    L = L if L is not None else s_line_graph(H, s)
    u = _edge_node(H, L, e)
    nbrs = L.neighbors(u)
    k = len(nbrs)
    if k < 2:
        return 0.0
    nbr_set = set(nbrs)
    # each neighbor-neighbor link is seen from both ends
    closed = sum(1 for w in nbrs for x in L.neighbors(w) if x in nbr_set)
    return closed / (k * (k - 1))


def s_closeness(H: Hypergraph, s: int, e: str, L: Optional[SLineGraph] = None) -> float:
    """(|C| - 1) / sum of s-distances from ``e`` within its s-component ``C``."""
    L = L if L is not None else s_line_graph(H, s)
    dist = bfs_distances(L, _edge_node(H, L, e))
    total = sum(dist.values())
    return (len(dist) - 1) / total if total else 0.0


def _brandes(L: SLineGraph, nodes: Sequence[int], threads: Optional[int] = None) -> dict[int, float]:
    """Unnormalized shortest-path betweenness, counting each unordered pair once."""

    def single_source(src: int) -> dict[int, float]:
        sigma = {src: 1}
        dist = {src: 0}
        preds: dict[int, list[int]] = {src: []}
        order = []
        queue = deque([src])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in L.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    sigma[w] = 0
                    preds[w] = []
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = dict.fromkeys(order, 0.0)
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
        delta[src] = 0.0
        return delta

    scores = dict.fromkeys(nodes, 0.0)
    for delta in _parallel_map(single_source, list(nodes), threads):
        for v, d in delta.items():
            scores[v] += d
    return {v: c / 2.0 for v, c in scores.items()}


def s_betweenness_all(H: Hypergraph, s: int, L: Optional[SLineGraph] = None,
                      threads: Optional[int] = None) -> dict[str, float]:
    """Normalized s-betweenness for every node of the s-line graph.

    Normalized by ``(N-1)(N-2)/2`` with ``N`` the node count of the whole
    s-line graph.
    """
    L = L if L is not None else s_line_graph(H, s)
    raw = _brandes(L, L.nodes, threads)
    N = len(L.nodes)
    scale = 2.0 / ((N - 1) * (N - 2)) if N > 2 else 0.0
    return {H.edge_labels[v]: raw[v] * scale for v in L.nodes}


def s_betweenness(H: Hypergraph, s: int, e: str, L: Optional[SLineGraph] = None) -> float:
    L = L if L is not None else s_line_graph(H, s)
    _edge_node(H, L, e)
    return s_betweenness_all(H, s, L)[e]


def s_component_profile(H: Hypergraph, s_max: int) -> SComponentProfile:
    """Component count and largest component size for s = 1..s_max."""
    _check_s(s_max)
    levels = []
    for s in range(1, s_max + 1):
        comps = s_components(H, s)
        levels.append(SComponentLevel(
            s, len(comps), max((len(c) for c in comps), default=0), tuple(comps)))
    return SComponentProfile(tuple(levels))
