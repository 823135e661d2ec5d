"""Shared fixtures data, hypothesis strategies and brute-force oracles.

The oracles here deliberately avoid the library's own machinery: line
graphs come from pairwise Python set intersections, distances from
Floyd-Warshall, and Betti numbers from signed boundary matrices ranked by
fraction-free elimination over the integers (i.e. over the rationals).
"""

from itertools import combinations

from hypothesis import strategies as st

from hypernet import from_set_system
from hypernet.core import Hypergraph

RUNNING = [
    ("1", ["a", "d"]),
    ("2", ["a", "c", "d"]),
    ("3", ["d"]),
    ("4", ["a", "b"]),
    ("5", ["b", "c"]),
]

RUNNING_SETSYS = "1:a,d\n2:a,c,d\n3:d\n4:a,b\n5:b,c"

# rows a, b, c, d of the incidence table; columns edges 1..5
TABLE_1 = [
    [1, 1, 0, 1, 0],
    [0, 0, 0, 1, 1],
    [0, 1, 0, 0, 1],
    [1, 1, 1, 0, 0],
]


def running_example() -> Hypergraph:
    return from_set_system(RUNNING, vertex_labels=["a", "b", "c", "d"])


def hollow_tetra_with_cycle() -> Hypergraph:
    """Four triangles around a void, plus an open 3-cycle of graph edges at p."""
    return from_set_system([
        ("t1", "pqr"), ("t2", "pqs"), ("t3", "prs"), ("t4", "qrs"),
        ("g1", "px"), ("g2", "xy"), ("g3", "yp"),
    ])


def chain_hypergraph(length: int, width: int = 3) -> Hypergraph:
    """Edges e1..e_length, e_i = {x_i, ..., x_{i+width-1}}; neighbors overlap in width-1."""
    return from_set_system(
        (f"e{i}", [f"x{j}" for j in range(i, i + width)]) for i in range(1, length + 1))


@st.composite
def hypergraphs(draw, max_n=12, max_m=12, min_n=0, min_m=0, allow_empty_edges=True,
                allow_isolated=True):
    """Small random hypergraphs; may include empty edges and isolated vertices."""
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(min_m, max_m))
    min_size = 0 if (allow_empty_edges or n == 0) else 1
    edges = [
        draw(st.sets(st.integers(0, n - 1), min_size=min_size, max_size=n)) if n else set()
        for _ in range(m)
    ]
    if not allow_isolated and n:
        covered = set().union(*edges) if edges else set()
        keep = sorted(covered)
        remap = {j: k for k, j in enumerate(keep)}
        edges = [{remap[j] for j in e} for e in edges]
        n = len(keep)
    return Hypergraph.from_edges(
        [f"v{j}" for j in range(n)], [f"e{i}" for i in range(m)], edges)


# -- s-walk oracles ---------------------------------------------------------------

def brute_line_graph(H: Hypergraph, s: int):
    """(nodes, set of frozenset pairs) of the s-line graph by pairwise intersection."""
    sets = [set(H.vertex_labels[j] for j in e) for e in H.edges]
    nodes = [i for i, e in enumerate(sets) if len(e) >= s]
    links = {frozenset((i, j)) for i, j in combinations(nodes, 2) if len(sets[i] & sets[j]) >= s}
    return nodes, links


def floyd_warshall(nodes, links):
    INF = float("inf")
    d = {(u, v): (0 if u == v else INF) for u in nodes for v in nodes}
    for p in links:
        u, v = tuple(p)
        d[u, v] = d[v, u] = 1
    for k in nodes:
        for i in nodes:
            dik = d[i, k]
            if dik == INF:
                continue
            for j in nodes:
                if dik + d[k, j] < d[i, j]:
                    d[i, j] = dik + d[k, j]
    return d


# -- homology oracle --------------------------------------------------------------

def closure(H: Hypergraph, top_dim: int):
    """Every face of every edge, up to ``top_dim``, plus isolated vertices."""
    faces = {(j,) for j in range(H.n)}
    for e in H.edges:
        for k in range(1, min(len(e), top_dim + 1) + 1):
            faces.update(combinations(e, k))
    by_dim = [sorted(f for f in faces if len(f) == k + 1) for k in range(top_dim + 1)]
    return by_dim


def integer_rank(rows):
    """Rank of an integer matrix by Bareiss fraction-free elimination."""
    M = [list(r) for r in rows]
    if not M or not M[0]:
        return 0
    n_rows, n_cols = len(M), len(M[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        for r in range(rank + 1, n_rows):
            for c in range(col + 1, n_cols):
                M[r][c] = (M[r][c] * M[rank][col] - M[rank][c] * M[r][col]) // prev
            M[r][col] = 0
        prev = M[rank][col]
        rank += 1
        if rank == n_rows:
            break
    return rank


def signed_boundary(lower, upper):
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, simplex in enumerate(upper):
        for drop in range(len(simplex)):
            face = simplex[:drop] + simplex[drop + 1:]
            rows[index[face]][c] = (-1) ** drop
    return rows


def rational_betti(H: Hypergraph, top: int):
    """Betti numbers beta_0..beta_top over Q."""
    by_dim = closure(H, top + 1)
    ranks = [0] * (top + 3)
    for k in range(1, top + 2):
        if by_dim[k] and by_dim[k - 1]:
            ranks[k] = integer_rank(signed_boundary(by_dim[k - 1], by_dim[k]))
    return tuple(len(by_dim[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def random_hypergraph(rng, max_n=12, max_m=12, p=None, allow_isolated=True) -> Hypergraph:
    """Seeded counterpart of ``hypergraphs`` for loops that must count their instances.

    Each vertex joins each edge with probability ``p`` (drawn per instance
    when not given), so empty edges and isolated vertices both turn up.
    """
    n = int(rng.integers(0, max_n + 1))
    m = int(rng.integers(0, max_m + 1))
    p = float(rng.uniform(0.1, 0.6)) if p is None else p
    edges = [set(map(int, (rng.random(n) < p).nonzero()[0])) for _ in range(m)]
    if not allow_isolated:
        keep = sorted(set().union(*edges)) if edges else []
        remap = {j: k for k, j in enumerate(keep)}
        edges = [{remap[j] for j in e} for e in edges]
        n = len(keep)
    return Hypergraph.from_edges([f"v{j}" for j in range(n)], [f"e{i}" for i in range(m)], edges)
