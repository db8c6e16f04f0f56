"""Small named graphs used as regression fixtures.

``DC_EXAMPLE`` is a triangle with a pendant edge. The pendant edge is edge 0,
so deleting it leaves a triangle plus an isolated vertex and contracting it
leaves a triangle. Its polynomials are λ(λ-1)^2(λ-2), λ^2(λ-1)(λ-2) and
λ(λ-1)(λ-2).

``HOUSE_ADJ_EXAMPLE`` is the 5-vertex graph v1..v5 with edges v1v2, v1v3,
v1v5, v2v3, v3v4, v4v5 (0-based below). ``HOUSE_ADJ_MATRIX`` is its adjacency
matrix. ``HOUSE_EDGE`` is v1v5, the pivot used for the deletion-contraction
check on this graph.
"""

from .graph import Multigraph

DC_EXAMPLE = Multigraph(4, ((0, 3), (0, 1), (1, 2), (2, 0)))
DC_EXAMPLE_EDGE = 0

HOUSE_ADJ_EXAMPLE = Multigraph(5, ((0, 4), (0, 1), (1, 2), (2, 0), (3, 4), (3, 2)))
HOUSE_EDGE = 0

HOUSE_ADJ_MATRIX = (
    (0, 1, 1, 0, 1),
    (1, 0, 1, 0, 0),
    (1, 1, 0, 1, 0),
    (0, 0, 1, 0, 1),
    (1, 0, 0, 1, 0),
)

# closed-walk instance on K_4: red-blue-red-yellow-green, colors numbered 1..4
K4_WALK_COLORS = ("red", "blue", "yellow", "green")
K4_WALK_EXAMPLE = (1, 2, 1, 3, 4)

BIJECTION_OMEGA = (1, 2, 1, 3, 2, 3, 1, 4, 2)
BIJECTION_SIGMA = (1, 1, 1, 2, 2, 2, 1, 3, 1)
BIJECTION_SIGMA_BAR = (1, 1, 1, 2, 2, 3, 1, 4, 1)
BIJECTION_LAMBDA = 4
