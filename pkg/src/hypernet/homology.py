"""Simplicial homology over GF(2) of the complex generated by a hypergraph.

Boundary matrices are stored column-wise as Python ints used as bitsets,
which makes Gaussian elimination a sequence of XORs.  Betti numbers follow
from ``beta_k = dim C_k - rank d_k - rank d_{k+1}``.

Coefficients are in GF(2).  For complexes with 2-torsion in their integral
homology (a triangulated projective plane, say) these Betti numbers differ
from the rational ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .core import Hypergraph, HypergraphError
from .simplicial import SimplicialComplex, asc_generate
from .swalk import _components, _parallel_map, _sorted_labels, s_line_graph

DEFAULT_CAP = 3

BettiSequence = tuple[int, ...]


@dataclass(frozen=True)
class GF2Matrix:
    """Boolean matrix stored as one bitset per column (bit r = row r)."""

    n_rows: int
    n_cols: int
    columns: tuple[int, ...]

    @classmethod
    def from_dense(cls, rows: Union[np.ndarray, Sequence[Sequence[int]]]) -> "GF2Matrix":
        arr = np.asarray(rows, dtype=np.int64) % 2
        if arr.ndim != 2:
            arr = arr.reshape(arr.shape[0] if arr.size else 0, -1)
        n_rows, n_cols = arr.shape
        cols = tuple(
            sum(1 << r for r in np.flatnonzero(arr[:, c]).tolist()) for c in range(n_cols))
        return cls(n_rows, n_cols, cols)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for c, bits in enumerate(self.columns):
            r = 0
            while bits:
                if bits & 1:
                    out[r, c] = 1
                bits >>= 1
                r += 1
        return out

    def compose(self, right: "GF2Matrix") -> "GF2Matrix":
        """The product ``self @ right`` over GF(2)."""
        if self.n_cols != right.n_rows:
            raise ValueError("shape mismatch")
        cols = []
        for bits in right.columns:
            acc = 0
            c = 0
            while bits:
                if bits & 1:
                    acc ^= self.columns[c]
                bits >>= 1
                c += 1
            cols.append(acc)
        return GF2Matrix(self.n_rows, right.n_cols, tuple(cols))

    def is_zero(self) -> bool:
        return not any(self.columns)


def gf2_rank(M: Union[GF2Matrix, np.ndarray, Sequence[Sequence[int]]]) -> int:
    """Rank over GF(2).  Works on a copy; the argument is left untouched."""
    if not isinstance(M, GF2Matrix):
        M = GF2Matrix.from_dense(M)
    basis: dict[int, int] = {}  # leading bit -> reduced vector
    for v in M.columns:
        while v:
            lead = v.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = v
                break
            v ^= pivot
    return len(basis)


@dataclass(frozen=True)
class ChainComplex:
    """Ordered simplex bases ``C_0..C_D`` and boundary maps ``d_1..d_D``.

    ``boundaries[k]`` maps the dimension-k basis to the dimension-(k-1)
    basis; ``boundaries[0]`` is the zero map out of ``C_0``.
    """

    bases: tuple[tuple[tuple[int, ...], ...], ...]
    boundaries: tuple[GF2Matrix, ...]
    complete_through: int

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def dim(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k < len(self.bases) else 0

    def boundary_rank(self, k: int) -> int:
        if k <= 0 or k > self.top:
            return 0
        return gf2_rank(self.boundaries[k])

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(b) for k, b in enumerate(self.bases))

    def betti(self, upto: Optional[int] = None, threads: Optional[int] = None) -> BettiSequence:
        """Betti numbers beta_0..beta_upto (default: every stored dimension).

        beta_k needs d_{k+1}, so ``upto`` may not pass ``complete_through``.
        """
        upto = self.top if upto is None else upto
        if upto > self.complete_through:
            raise HypergraphError(
                f"chain complex lacks dimension {self.complete_through + 1}, "
                f"needed for beta_{upto}")
        ranks = _parallel_map(self.boundary_rank, list(range(upto + 2)), threads)
        return tuple(self.dim(k) - ranks[k] - ranks[k + 1] for k in range(upto + 1))


def chain_complex(K: SimplicialComplex, top: Optional[int] = None) -> ChainComplex:
    """Boundary matrices of ``K`` with lexicographically ordered bases.

    ``top`` is the highest Betti index the caller wants; ``K`` has to hold
    simplices one dimension above it unless its generators stop short of
    that dimension.  The identity d_{k-1} d_k = 0 is checked before
    returning.
    """
    D = K.max_dim_cap
    if top is not None:
        gen_top = K.top_generator_dimension()
        if top + 1 > D and gen_top >= D + 1:
            raise HypergraphError(
                f"simplicial complex is closed only through dimension {D}; "
                f"dimension {D + 1} is missing for beta_{top}")
    bases = tuple(K.simplices[: D + 1])
    index = [{s: i for i, s in enumerate(b)} for b in bases]
    boundaries = [GF2Matrix(0, len(bases[0]) if bases else 0, (0,) * (len(bases[0]) if bases else 0))]
    for k in range(1, D + 1):
        faces = index[k - 1]
        cols = []
        for simplex in bases[k]:
            bits = 0
            for drop in range(k + 1):
                facet = simplex[:drop] + simplex[drop + 1:]
                try:
                    bits |= 1 << faces[facet]
                except KeyError:
                    raise HypergraphError(
                        f"simplicial complex is not subset-closed: facet {facet} of {simplex} "
                        f"missing in dimension {k - 1}") from None
            cols.append(bits)
        boundaries.append(GF2Matrix(len(bases[k - 1]), len(bases[k]), tuple(cols)))
    for k in range(2, D + 1):
        if not boundaries[k - 1].compose(boundaries[k]).is_zero():
            raise AssertionError(f"boundary of boundary is nonzero in dimension {k}")
    # betti numbers through D-1 are exact; beyond that only when K has nothing higher
    complete = D if K.top_generator_dimension() <= D else D - 1
    return ChainComplex(bases, tuple(boundaries), complete)


def betti_length(H: Hypergraph, cap: int) -> int:
    """Highest Betti index reported: ``min(cap, max |e| - 1)``, at least 0."""
    return max(0, min(cap, H.max_edge_size() - 1))


def betti_sequence(H: Hypergraph, cap: int = DEFAULT_CAP, budget: Optional[int] = None,
                   threads: Optional[int] = None) -> BettiSequence:
    """Betti numbers beta_0..beta_K of the complex generated by ``H``.

    ``K = min(cap, max |e| - 1)``.  Isolated vertices count as points.
    """
    if cap < 0:
        raise HypergraphError(f"cap must be >= 0, got {cap}")
    K = betti_length(H, cap)
    try:
        cx = asc_generate(H, K + 1, budget=budget)
    except HypergraphError as exc:
        raise type(exc)(f"{exc} (try a cap below {cap})") from None
    return chain_complex(cx, K).betti(K, threads=threads)


def betti_per_component(H: Hypergraph, s: int, cap: int = DEFAULT_CAP,
                        budget: Optional[int] = None,
                        threads: Optional[int] = None) -> dict[tuple[str, ...], BettiSequence]:
    """Betti sequence of each s-component, keyed by its sorted edge labels.

    Each component is taken with only the vertices its edges cover.
    """
    L = s_line_graph(H, s)
    comps = sorted((_sorted_labels(H, c), c) for c in _components(L))

    def one(item: tuple[tuple[str, ...], list[int]]) -> BettiSequence:
        return betti_sequence(H.edge_subhypergraph(item[1]), cap, budget=budget)

    results = _parallel_map(one, comps, threads)
    return {labels: beta for (labels, _), beta in zip(comps, results)}

