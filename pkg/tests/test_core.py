import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypernet import (
    BicoloredGraph,
    DuplicateLabelError,
    HypergraphError,
    UnknownLabelError,
    adjacency,
    degree_sequence,
    dual,
    edge_size_sequence,
    from_bicolored,
    from_set_system,
    incidence,
    incidence_matrix,
    to_bicolored,
)
from hypernet.core import Hypergraph, disjoint_union

from helpers import TABLE_1, hypergraphs, running_example


@pytest.fixture
def H():
    return running_example()


def test_running_example_shape(H):
    assert (H.n, H.m) == (4, 5)
    assert H.edge("2") == {"a", "c", "d"}


def test_first_appearance_vertex_order():
    H = from_set_system([("1", ["a", "d"]), ("2", ["a", "c", "d"])])
    assert H.vertex_labels == ("a", "d", "c")


def test_empty_hypergraph():
    H = from_set_system([])
    assert (H.n, H.m) == (0, 0)
    assert dual(H) == H


def test_repeated_vertex_collapses():
    H = from_set_system([("x", ["a", "a", "b"])])
    assert H.edge("x") == {"a", "b"}
    assert H.edges[0] == (0, 1)


def test_duplicate_edge_label_rejected():
    with pytest.raises(DuplicateLabelError, match="'x'"):
        from_set_system([("x", ["a"]), ("x", ["b"])])


def test_undeclared_vertex_rejected():
    with pytest.raises(UnknownLabelError):
        from_set_system([("x", ["a", "z"])], vertex_labels=["a"])


def test_inconsistent_memberships_rejected():
    with pytest.raises(HypergraphError):
        Hypergraph(("a",), ("x",), ((0,),), ((),))


def test_incidence_matrix_matches_table(H):
    B = incidence_matrix(H)
    assert B.to_dense().tolist() == TABLE_1
    assert B.nnz == 10
    assert B.density == 0.5


def test_incidence_matrix_no_edges():
    H = from_set_system([], vertex_labels=["a", "b"])
    assert incidence_matrix(H).to_dense().shape == (2, 0)


def test_sparse_incidence_agrees(H):
    assert H.sparse_incidence().toarray().tolist() == TABLE_1


def test_dual_of_running_example(H):
    D = dual(H)
    assert D.vertex_labels == ("1", "2", "3", "4", "5")
    assert D.set_system() == {
        "a": {"1", "2", "4"},
        "b": {"4", "5"},
        "c": {"2", "5"},
        "d": {"1", "2", "3"},
    }


def test_isolated_vertex_becomes_empty_edge():
    H = from_set_system([("x", ["a"])], vertex_labels=["a", "z"])
    assert dual(H).edge("z") == frozenset()


def _table_adjacency(rows):
    return sum(all(TABLE_1[r][c] for r in rows) for c in range(5))


def test_adjacency_values(H):
    # counted straight off the incidence table: edges 1 and 2 hold both a and d
    assert _table_adjacency([0, 3]) == 2
    assert adjacency(H, {"a", "d"}) == 2
    assert adjacency(H, {"a", "c", "d"}) == 1
    assert adjacency(H, {"d"}) == 3


def test_incidence_values(H):
    assert incidence(H, {"1", "2"}) == 2
    assert incidence(H, {"1", "2", "3"}) == 1
    assert incidence(H, {"2"}) == 3


@pytest.mark.parametrize("fn,arg", [(adjacency, set()), (incidence, set())])
def test_empty_argument_rejected(H, fn, arg):
    with pytest.raises(HypergraphError, match="empty"):
        fn(H, arg)


def test_unknown_label_rejected(H):
    with pytest.raises(UnknownLabelError):
        adjacency(H, {"zz"})
    with pytest.raises(UnknownLabelError):
        incidence(H, {"9"})


def test_degree_and_size_sequences(H):
    assert degree_sequence(H) == [("a", 3), ("b", 2), ("c", 2), ("d", 3)]
    assert edge_size_sequence(H) == [("1", 2), ("2", 3), ("3", 1), ("4", 2), ("5", 2)]
    E = from_set_system([])
    assert degree_sequence(E) == [] and edge_size_sequence(E) == []


def test_bicolored_form(H):
    G = to_bicolored(H)
    assert len(G.node_labels) == 9
    assert len(G.links) == 10
    assert all(G.colors[a] != G.colors[b] for a, b in G.links)
    assert from_bicolored(G) == H


def test_bicolored_single_link():
    G = to_bicolored(from_set_system([("x", ["a"])]))
    assert G.links == ((0, 1),)


def test_bicolored_isolated_node():
    H = from_bicolored(BicoloredGraph(("v",), (0,), ()))
    assert (H.n, H.m) == (1, 0)


def test_same_color_link_rejected():
    G = BicoloredGraph(("u", "v"), (0, 0), ((0, 1),))
    with pytest.raises(HypergraphError, match="'u'-'v'"):
        from_bicolored(G)


def test_swapped_colors_give_dual(H):
    assert from_bicolored(to_bicolored(H).swap_colors()) == dual(H)


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_dual_involution_and_transpose(H):
    assert dual(dual(H)) == H
    assert incidence_matrix(dual(H)) == incidence_matrix(H).transpose()


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_bicolored_round_trip(H):
    assert from_bicolored(to_bicolored(H)) == H


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_handshake(H):
    degs = sum(d for _, d in degree_sequence(H))
    sizes = sum(k for _, k in edge_size_sequence(H))
    assert degs == sizes == incidence_matrix(H).nnz == H.nnz


@settings(max_examples=200, deadline=None)
@given(hypergraphs(min_n=1, min_m=1), st.data())
def test_adjacency_incidence_duality_and_monotonicity(H, data):
    U = data.draw(st.sets(st.sampled_from(H.vertex_labels), min_size=1))
    extra = data.draw(st.sets(st.sampled_from(H.vertex_labels)))
    assert adjacency(H, U) == incidence(dual(H), U)
    assert adjacency(H, U) >= adjacency(H, U | extra)
    F = data.draw(st.sets(st.sampled_from(H.edge_labels), min_size=1))
    more = data.draw(st.sets(st.sampled_from(H.edge_labels)))
    assert incidence(H, F) == adjacency(dual(H), F)
    assert incidence(H, F) >= incidence(H, F | more)


@settings(max_examples=100, deadline=None)
@given(hypergraphs(), hypergraphs())
def test_disjoint_union_sizes(H1, H2):
    U = disjoint_union(H1, H2)
    assert (U.n, U.m, U.nnz) == (H1.n + H2.n, H1.m + H2.m, H1.nnz + H2.nnz)


def test_edge_overlaps_match_gram(H):
    rows, cols, counts = H.edge_overlaps
    B = np.array(TABLE_1)
    gram = B.T @ B
    expected = [(i, j, gram[i, j]) for i in range(5) for j in range(i + 1, 5) if gram[i, j]]
    assert list(zip(rows.tolist(), cols.tolist(), counts.tolist())) == expected
