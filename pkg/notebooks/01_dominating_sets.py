"""Dominating sets of a few small graphs.

Run with ``python3 notebooks/01_dominating_sets.py``.
"""

from dommedian import (
    cycle_graph,
    domination_number,
    enumerate_dominating,
    enumerate_minimal_dominating,
    format_set,
    inverse_dominating_pair,
    new_graph,
    path_graph,
)

# The 4-cycle has no dominating vertex, so every dominating set has two or more elements.
c4 = cycle_graph(4)
print("C4 dominating sets:", " ".join(format_set(s) for s in enumerate_dominating(c4)))
print("C4 minimal ones:   ", " ".join(format_set(s) for s in enumerate_minimal_dominating(c4)))

# On a path of three vertices the centre alone dominates.
p3 = path_graph(3)
print("P3 minimal:", [format_set(s) for s in enumerate_minimal_dominating(p3)])

# A triangle with two pendants on each of two corners.  The minimum dominating
# set is the pair of corners; anything disjoint from it must take the third
# corner and all four pendants.
g = new_graph(7, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)])
d, b = inverse_dominating_pair(g)
print(f"gamma={domination_number(g)}  D={format_set(d)}  disjoint B={format_set(b)}  |B|={b.bit_count()}")
