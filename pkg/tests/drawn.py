"""Small drawn example graphs used as fixtures, with their intended sides.

Vertex names follow the drawing: ``a*`` are drawn filled (side A), ``b*``
hollow (side B), ``v`` is the vertex being inserted.
"""

from graphpart import build_graph


def _named(names, edges):
    index = {name: i for i, name in enumerate(names)}
    return build_graph(len(names), [(index[x], index[y]) for x, y in edges]), index


_SPLIT_EDGES = [
    ("a1", "a2"), ("a2", "a3"), ("a3", "a1"),
    ("a1", "b1"), ("a1", "b2"), ("a3", "b3"), ("a2", "b2"), ("a3", "b2"),
]

# a split graph, then the same graph after inserting v; the repaired
# partition swaps a2 into the independent side and b2 into the clique
SPLIT_BEFORE = _named(["a1", "a2", "a3", "b1", "b2", "b3"], _SPLIT_EDGES)
SPLIT_AFTER = _named(
    ["a1", "a2", "a3", "b1", "b2", "b3", "v"],
    _SPLIT_EDGES + [("a1", "v"), ("v", "b2"), ("a3", "v")],
)
SPLIT_AFTER_CLIQUE = ("a1", "a3", "b2", "v")

_TWO_TRIANGLES = [
    ("a1", "a2"), ("a2", "a3"), ("a3", "a1"),
    ("a4", "a5"), ("a5", "a6"), ("a6", "a4"),
    ("a1", "b1"), ("a3", "b3"), ("b3", "a4"), ("a2", "b2"), ("b2", "a1"), ("a4", "b4"), ("b4", "a6"),
]

# two triangles with independent hangers-on: monopolar, A needs two clusters
TWO_TRIANGLES_MONOPOLAR = _named(["a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4"], _TWO_TRIANGLES)

# the same frame with edges and a triangle among the B vertices
TWO_TRIANGLES_SUBCOLORABLE = _named(
    ["a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4", "b5"],
    _TWO_TRIANGLES + [("b1", "b2"), ("b3", "b4"), ("b4", "b5"), ("b5", "b3")],
)
