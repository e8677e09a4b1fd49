"""Build a small augmented cube, inspect its dimensions and find the K_{4,4} inside AQ_3.

    python demos/01_augmented_cube.py
"""

from aqcross import aqcube

# AQ_3: 8 vertices, each of degree 5.
cube = aqcube.build(3)
print(f"AQ_3 has {len(cube.vertices())} vertices and {cube.num_edges()} edges")

# Every edge carries a signed dimension: +t flips bit t, -t flips bits 1..t.
for u, v, d in cube.edges()[:6]:
    print(f"  {aqcube.format_label(u, 3)} -- {aqcube.format_label(v, 3)}   dim {d:+d}")

# The neighbour of a vertex along a given dimension.
u, v = aqcube.incident_edge(0b10101, -4, 5)
print(f"in AQ_5, 10101 along dim -4 meets {aqcube.format_label(v if u == 0b10101 else u, 5)}")

# A complete bipartite K_{4,4} forces at least 4 crossings in any drawing of AQ_3.
A, B = aqcube.find_k44_witness()
print(f"K_4,4 sides {A} and {B}: complete = {aqcube.is_complete_bipartite(A, B)}")

# The direct rule and the recursive construction give the same graph.
for n in range(1, 9):
    assert aqcube.build(n).edge_set() == aqcube.build_recursive(n)
print("direct and recursive constructions agree for n = 1..8")
