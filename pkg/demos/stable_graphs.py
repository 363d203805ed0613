"""
Dual graphs of genus-zero stable maps
=====================================

Enumerate boundary strata, then stabilize and forget points.
"""

from supermaps.moduli import DualGraph, enumerate_stable_graphs, forget_point, stabilize_curve

# strata of the space of conics with one marked point
for G in enumerate_stable_graphs(1, 2):
    print(G)

# counts of boundary strata of M_{0,n}
print([len(enumerate_stable_graphs(n, 0)) for n in range(3, 8)])

# a chain whose right component is unstable once the map is forgotten
chain = DualGraph([(0, 0), (0, 0)], [(0, 1)], [(1, 0), (2, 0), (3, 1)])
print("stabilized:", stabilize_curve(chain, 0, 3))

# forgetting a marking can collapse a bubble
bubble = DualGraph([(0, 1), (0, 0)], [(0, 1)], [(1, 1), (2, 1), (3, 0)])
print("forget 2:", forget_point(bubble, {"g": 0, "n": 3, "d": 1}, 2))
