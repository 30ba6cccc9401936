"""Reference drawing of the ell = 3 crystal to depth 5.

Node labels are the diagrams as drawn (rows read top to bottom); the
drawing is transposed relative to the bottom-up signature convention,
so it is compared up to labelled-graph isomorphism.
"""

FIGURE_EDGES = [
    ((), (1,), 0),
    ((1,), (1, 1), 1),
    ((1,), (2,), 2),
    ((1, 1), (2, 1), 2),
    ((2,), (3,), 1),
    ((2, 1), (2, 2), 0),
    ((2, 1), (3, 1), 2),
    ((3,), (4,), 0),
    ((3,), (2, 1, 1), 1),
    ((2, 1, 1), (2, 1, 1, 1), 0),
    ((2, 1, 1), (3, 1, 1), 2),
    ((2, 2), (2, 2, 1), 1),
    ((2, 2), (3, 2), 2),
    ((3, 1), (3, 1, 1), 1),
    ((3, 1), (3, 2), 0),
    ((4,), (2, 1, 1, 1), 1),
    ((4,), (5,), 2),
]


def figure_graph(max_size=None):
    import networkx as nx

    g = nx.DiGraph()
    g.add_node(())
    for a, b, r in FIGURE_EDGES:
        if max_size is None or sum(b) <= max_size:
            g.add_edge(a, b, residue=r)
    return g


def isomorphic_to_figure(nodes, edges, depth):
    import networkx as nx
    from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_edge_match

    h = nx.DiGraph()
    h.add_nodes_from(tuple(n) for n in nodes)
    for a, b, r in edges:
        h.add_edge(tuple(a), tuple(b), residue=r)
    m = DiGraphMatcher(figure_graph(depth), h, edge_match=categorical_edge_match("residue", None))
    return m.is_isomorphic()
