"""Walk through the four-vertex running example and print each derived object.

    python scripts/running_example_tour.py
"""

from hypernet import (
    adjacency,
    betti_sequence,
    clique_reconstruction,
    dual,
    from_set_system,
    incidence,
    inclusiveness,
    k_section,
    s_component_profile,
    s_components,
    serialize,
    simplify,
    toplexes,
    two_section_graph,
)

EDGES = [("1", "ad"), ("2", "acd"), ("3", "d"), ("4", "ab"), ("5", "bc")]


def show(title, value):
    print(f"{title:<28} {value}")


def main():
    H = from_set_system(EDGES, vertex_labels="abcd")
    print(serialize(H))
    show("adj(a, d)", adjacency(H, "ad"))
    show("adj(a, c, d)", adjacency(H, "acd"))
    show("inc(1, 2)", incidence(H, ["1", "2"]))
    show("toplexes", [H.edge_labels[i] for i in toplexes(H)])
    show("inclusiveness", inclusiveness(H))
    for s in (1, 2):
        show(f"{s}-components", s_components(H, s))
    show("component profile", s_component_profile(H, 3).rows())
    show("betti (cap 2)", betti_sequence(H, 2))
    show("2-section pairs", list(k_section(H, 2).edge_labels))
    R = clique_reconstruction(two_section_graph(H))
    show("clique reconstruction", list(R.edge_labels))
    show("simplified", list(simplify(H).edge_labels))
    print()
    print("dual:")
    print(serialize(dual(H)))


if __name__ == "__main__":
    main()
