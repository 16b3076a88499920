#!/usr/bin/env python3
"""Walk through the core data model: 3-graphs, links, shadows, codegrees.

Vertices are always the integers 0..n-1, edges are unordered triples, and
everything is immutable once built.
"""

from turanzero import (
    codegree,
    induced,
    link_graph,
    make_threegraph,
    min_codegree,
    shadow,
)
from turanzero.core import threegraph_to_3g

# The 4-vertex 3-graph with three edges: every edge contains vertex 0.
h = make_threegraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
print("edges:", h.edges)

# The link of a vertex collects the pairs that complete an edge with it.
# Vertex 0 sits in all three edges, so its link is a triangle.
print("link of 0:", sorted(link_graph(h, 0).edges))
print("link of 3:", sorted(link_graph(h, 3).edges))

# The shadow is the union of all links: every pair covered by some edge.
print("shadow:", sorted(shadow(h).edges))

# Codegree of a pair = number of edges containing both vertices.
print("codegree(0, 1) =", codegree(h, 0, 1))
print("codegree(2, 3) =", codegree(h, 2, 3))
print("minimum codegree =", min_codegree(h))

# Induced subhypergraphs are relabeled to 0..|S|-1; the map back to the
# original ids is returned alongside.
sub, old_ids = induced(h, {0, 2, 3})
print("induced on {0, 2, 3}:", sub.edges, "original ids:", old_ids)

# Graphs serialize to a tiny text format: first line n, one triple per line.
print("--- .3g ---")
print(threegraph_to_3g(h), end="")
