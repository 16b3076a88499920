#!/usr/bin/env python3
"""Work with (2,1)-type instances: the restricted decider, the auxiliary
graph on the pair part, and the structural reductions.

A 3-graph is (2,1)-type for an ordered partition when every edge takes two
vertices from the pair part and one from the apex part.  For those, only
labelings of the pair part matter, and only links of apex vertices can carry
a monotone 2-edge path.
"""

from turanzero import (
    decide_21,
    decide_uniform_turan_zero,
    extract_connected_witness,
    gamma_graph,
    make_good_partition,
    make_partition21,
    make_threegraph,
    tripartite_reduction,
)
from turanzero.decider import graph_to_dot

# Two edges sharing the pair {1, 3}: the apex link of 3 is the path 0-1-2.
h = make_threegraph(4, [(0, 1, 3), (1, 2, 3)])
p = make_partition21([0, 1, 2], [3])
d = decide_21(h, p)
print("path-link instance:", d.verdict)
print("  witness labeling of the pair part:", d.witness_labeling.mapping())

# The auxiliary graph joins pair-part vertices that are endpoints of a
# 2-edge path in some apex link; for the path 0-1-2 that is the pair {0, 2}.
print("  auxiliary edges:", sorted(gamma_graph(h, p).edges))

# K4 minus an edge is (2,1)-type with apex 0 and decides positive; the
# witness extractor confines it to one auxiliary-graph component.
k4_minus = make_threegraph(4, [(1, 2, 0), (1, 3, 0), (2, 3, 0)])
p2 = make_partition21([1, 2, 3], [0])
print("K4 minus an edge:", decide_21(k4_minus, p2).verdict)
pair_part, apex_part = extract_connected_witness(k4_minus, p2)
print("  connected witness:", sorted(pair_part), "with apexes", sorted(apex_part))
print(graph_to_dot(gamma_graph(k4_minus, p2)), end="")

# A good tripartition splits a 3-graph into three (2,1)-type pieces taken
# cyclically; deciding the pieces bounds the whole: if the whole is
# positive, at least one piece is.
gp = make_good_partition([1, 2, 3], [0], [])
d_ab, d_bc, d_ca = tripartite_reduction(k4_minus, gp)
print("reduction verdicts:", d_ab.verdict, d_bc.verdict, d_ca.verdict)
print("whole graph:", decide_uniform_turan_zero(k4_minus).verdict)
