"""Growing any graph into one where all three properties hold.

Leaf completion hangs a pendant on each vertex that is neither a leaf nor next
to one; the corona hangs a pendant on every vertex.  Both at most double the
order and keep the original graph as an induced subgraph.
"""

from dommedian import classify, corona_k1, cycle_graph, leaf_completion
from dommedian.graph_io import write_graph6

for g in (cycle_graph(3), cycle_graph(4), cycle_graph(5)):
    for name, h in (("completion", leaf_completion(g)), ("corona", corona_k1(g))):
        print(f"C{g.n} {name:10s} n={h.n:2d} {write_graph6(h):8s} {classify(h).summary()}")
