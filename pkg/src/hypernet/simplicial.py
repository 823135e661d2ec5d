"""Inclusion structure of hypergraphs and their simplicial closures.

Covers toplexes and inclusiveness, simplification, the abstract simplicial
complex (ASC) generated by the edges, hyperblock equivalence, k-skeletons
and k-sections, the 2-section and line graph, and recovery of a hypergraph
from the maximal cliques of a graph.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .core import BudgetExceededError, Hypergraph, HypergraphError, dual

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "HYPERNET_BUDGET"


def simplex_budget(budget: Optional[int] = None) -> int:
    """Resolve the simplex ceiling: explicit value, else $HYPERNET_BUDGET, else 10**7."""
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise HypergraphError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def toplexes(H: Hypergraph) -> list[int]:
    """Indices of edges not strictly contained in another edge.

    Content-equal edges do not include one another, so duplicates of a
    maximal edge are all toplexes.
    """
    sets = H.edge_sets
    has_nonempty = any(sets)
    result = []
    for i, e in enumerate(H.edges):
        if not e:
            if not has_nonempty:
                result.append(i)
            continue
        # any strict superset must contain e's rarest vertex
        pivot = min(e, key=lambda j: len(H.memberships[j]))
        size = len(e)
        es = sets[i]
        if not any(len(H.edges[f]) > size and es <= sets[f] for f in H.memberships[pivot]):
            result.append(i)
    return result


def toplex_labels(H: Hypergraph) -> list[str]:
    return [H.edge_labels[i] for i in toplexes(H)]


def inclusiveness(H: Hypergraph) -> Fraction:
    """Fraction of edges that are not toplexes, exactly."""
    if H.m == 0:
        raise HypergraphError("inclusiveness of a hypergraph without edges is undefined")
    return Fraction(H.m - len(toplexes(H)), H.m)


def simplify(H: Hypergraph) -> Hypergraph:
    """Keep every vertex and only the toplex edges."""
    return H.restrict_edges(toplexes(H))


def _toplex_family(H: Hypergraph) -> frozenset[frozenset[str]]:
    return frozenset(frozenset(H.vertex_labels[j] for j in H.edges[i]) for i in toplexes(H))


def same_hyperblock(H1: Hypergraph, H2: Hypergraph) -> bool:
    """True iff both hypergraphs generate the same simplicial complex.

    Compared through toplex contents, labels ignored.
    """
    return _toplex_family(H1) == _toplex_family(H2)


@dataclass(frozen=True)
class SimplicialComplex:
    """Subset-closed family of vertex-index tuples, stored by dimension.

    ``simplices[k]`` holds the sorted ``k+1``-tuples, sorted
    lexicographically; only dimensions ``0..max_dim_cap`` are present.
    """

    max_dim_cap: int
    simplices: tuple[tuple[tuple[int, ...], ...], ...]
    generators: tuple[tuple[int, ...], ...]
    vertex_labels: tuple[str, ...] = ()

    @property
    def dimension(self) -> int:
        """Highest dimension holding a simplex, -1 when empty."""
        return max((k for k, sk in enumerate(self.simplices) if sk), default=-1)

    def top_generator_dimension(self) -> int:
        return max((len(g) - 1 for g in self.generators), default=-1)

    def count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k < len(self.simplices) else 0

    def labelled(self, k: int) -> list[tuple[str, ...]]:
        return [tuple(self.vertex_labels[j] for j in s) for s in self.simplices[k]]

    def __len__(self) -> int:
        return sum(len(sk) for sk in self.simplices)


def _closure_size(sizes: Iterable[int], top: int) -> int:
    return sum(comb(size, j) for size in sizes for j in range(1, top + 1))


def asc_generate(H: Hypergraph, cap: int, budget: Optional[int] = None,
                 isolated_vertices: bool = True) -> SimplicialComplex:
    """All nonempty subsets of at most ``cap+1`` vertices of some edge.

    Vertices that lie in no edge still appear as 0-simplices unless
    ``isolated_vertices`` is false.  Raises :class:`BudgetExceededError`
    when the subsets to enumerate exceed ``budget`` (see
    :func:`simplex_budget`).
    """
    if cap < 0:
        raise HypergraphError(f"dimension cap must be >= 0, got {cap}")
    limit = simplex_budget(budget)
    gens = [H.edges[i] for i in toplexes(H) if H.edges[i]]
    needed = _closure_size((len(g) for g in gens), cap + 1)
    if needed > limit:
        largest = max(len(g) for g in gens)
        raise BudgetExceededError(
            f"closure up to dimension {cap} needs {needed} subsets (largest edge has "
            f"{largest} vertices), over the budget of {limit}; lower the cap or raise "
            f"{BUDGET_ENV}")
    layers: list[set[tuple[int, ...]]] = [set() for _ in range(cap + 1)]
    if isolated_vertices:
        layers[0].update((j,) for j in range(H.n))
    for g in gens:
        for k in range(min(cap, len(g) - 1) + 1):
            layers[k].update(combinations(g, k + 1))
    return SimplicialComplex(
        cap,
        tuple(tuple(sorted(layer)) for layer in layers),
        tuple(sorted(gens)),
        H.vertex_labels,
    )


def k_skeleton(H: Hypergraph, k: int) -> Hypergraph:
    """Sub-hypergraph of the edges with exactly ``k`` vertices."""
    if k < 0:
        raise HypergraphError(f"k must be >= 0, got {k}")
    return H.restrict_edges(i for i, e in enumerate(H.edges) if len(e) == k)


def section_label(labels: Sequence[str], simplex: Iterable[int]) -> str:
    """Label for a synthesized edge: its sorted vertex labels joined by commas."""
    return ",".join(sorted(labels[j] for j in simplex))


def k_section(H: Hypergraph, k: int, budget: Optional[int] = None) -> Hypergraph:
    """Every k-vertex set contained in some edge, as one edge each.

    Edges are labelled by :func:`section_label` and listed in label order.
    """
    if k < 1:
        raise HypergraphError(f"k must be >= 1, got {k}")
    limit = simplex_budget(budget)
    gens = [H.edges[i] for i in toplexes(H) if len(H.edges[i]) >= k]
    needed = sum(comb(len(g), k) for g in gens)
    if needed > limit:
        raise BudgetExceededError(
            f"{k}-section needs {needed} subsets (largest edge has "
            f"{max(len(g) for g in gens)} vertices), over the budget of {limit}")
    subsets = sorted({c for g in gens for c in combinations(g, k)},
                     key=lambda c: sorted(H.vertex_labels[j] for j in c))
    return Hypergraph.from_edges(
        H.vertex_labels, [section_label(H.vertex_labels, c) for c in subsets], subsets)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with link multiplicities.

    ``links`` are label pairs ordered by node position, sorted; ``weights``
    gives the multiplicity of each link.
    """

    nodes: tuple[str, ...]
    links: tuple[tuple[str, str], ...]
    weights: tuple[int, ...]

    def weight(self, u: str, v: str) -> int:
        pos = {x: i for i, x in enumerate(self.nodes)}
        if pos[u] > pos[v]:
            u, v = v, u
        try:
            return self.weights[self.links.index((u, v))]
        except ValueError:
            return 0

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.nodes}
        for u, v in self.links:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def link_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(p) for p in self.links)


def two_section_graph(H: Hypergraph) -> Graph:
    """Graph on V with u ~ v when some edge holds both; weights are the
    off-diagonal entries of B B^T."""
    rows, cols, counts = dual(H).edge_overlaps
    labels = H.vertex_labels
    return Graph(
        labels,
        tuple((labels[r], labels[c]) for r, c in zip(rows.tolist(), cols.tolist())),
        tuple(counts.tolist()),
    )


def line_graph(H: Hypergraph) -> Graph:
    """Graph on E with e ~ f when they intersect; weights are inc(e, f)."""
    rows, cols, counts = H.edge_overlaps
    labels = H.edge_labels
    return Graph(
        labels,
        tuple((labels[r], labels[c]) for r, c in zip(rows.tolist(), cols.tolist())),
        tuple(counts.tolist()),
    )


def maximal_cliques(adj: dict[int, set[int]]) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting; each clique sorted, list sorted."""
    out: list[tuple[int, ...]] = []

    def expand(R: list[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda u: len(P & adj[u]))
        for v in sorted(P - adj[pivot]):
            expand(R + [v], P & adj[v], X & adj[v])
            P.remove(v)
            X.add(v)

    expand([], set(adj), set())
    return sorted(out)


def clique_reconstruction(G: Graph) -> Hypergraph:
    """Hypergraph whose edges are the maximal cliques of ``G``.

    Edges are ordered by their sorted member labels.  Isolated nodes come back as singleton edges.  An empty graph gives an
    empty hypergraph.
    """
    pos = {v: i for i, v in enumerate(G.nodes)}
    adj: dict[int, set[int]] = {i: set() for i in range(len(G.nodes))}
    for u, v in G.links:
        adj[pos[u]].add(pos[v])
        adj[pos[v]].add(pos[u])
    cliques = maximal_cliques(adj) if G.nodes else []
    cliques.sort(key=lambda c: sorted(G.nodes[j] for j in c))
    return Hypergraph.from_edges(
        G.nodes,
        [section_label(G.nodes, c) for c in cliques],
        cliques,
    )
