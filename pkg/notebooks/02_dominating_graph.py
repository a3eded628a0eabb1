"""The dominating graph D(G) and its hypercube geometry.

D(G) has one vertex per dominating set and joins two sets that differ in one
element.  Labels are subsets of V(G), so D(G) sits inside the hypercube on
V(G); the point here is that the embedding is distance-preserving.
"""

from dommedian import (
    build_dominating_graph,
    check_hamming_isometry,
    cycle_graph,
    format_set,
    geodesic,
    is_median_graph,
    is_partial_cube,
    path_graph,
)
from dommedian.graph_io import write_dot

p2 = path_graph(2)
h = build_dominating_graph(p2)
print("D(P2) vertices:", [format_set(s) for s in h.labels], "edges:", h.edges())
print(write_dot(h, name="DP2"))

c4 = cycle_graph(4)
h = build_dominating_graph(c4)
print(f"D(C4): {h.order} vertices, {h.size} edges")
print("isometric in the cube:", check_hamming_isometry(h), " partial cube:", is_partial_cube(h))
# ...but not median: {0,1},{0,2},{0,3} would need {0} as their median
print("median:", is_median_graph(h))

path = geodesic(h, h.index_of(0b0011), h.index_of(0b1100))
print("geodesic:", " -> ".join(format_set(h.labels[i]) for i in path))

# Capping the size at 2 leaves only the six pairs, none adjacent.
capped = build_dominating_graph(c4, 2)
print(f"D_2(C4): {capped.order} vertices, {capped.size} edges")

c6 = cycle_graph(6)
print("C6 partial cube:", is_partial_cube(c6), " median:", is_median_graph(c6))
