#!/usr/bin/env python3
"""Search hosts for forbidden patterns, including hosts too large to build.

The containment engine takes either an explicit 3-graph or an implicit
edge oracle.  Candidate images are pruned by degree and codegree bounds and
by intersecting co-neighbor sets of already-placed pairs, so exhausting the
search space of a 258-vertex host takes a fraction of a second.
"""

import itertools

from turanzero import build_bipartite, build_tripartite, contains, make_threegraph, min_codegree
from turanzero.constructions import BipartiteHost, tripartite_partition, verify_codegrees
from turanzero.core import is_good_partition

pattern = make_threegraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])

# k = 4 keeps the geometry strong enough to exclude every positive pattern
# on at most 4 vertices, and this works for every seed, not just most.
c = build_bipartite(k=4, q=8, seed=0)  # n = 129, host has 258 vertices
host = BipartiteHost(c)
result = contains(host, pattern)
print(f"bipartite host (implicit, n={c.n}):", result.status,
      f"after {result.nodes} nodes")

# The cyclic composition links three copies on 3n vertices: pairs in one
# part, apex in the next.  Its codegree table is exactly the bipartite one.
composed = build_tripartite(c)
print(f"composed host: {composed.n} vertices, {len(composed.edges)} edges")
print("good partition:", is_good_partition(composed, tripartite_partition(c)))

report = verify_codegrees(c)
print("min codegree of composition:", min_codegree(composed),
      "(bipartite minima:", report.min_pair_codegree, report.min_cross_degree, ")")

result = contains(composed, pattern)
print("composed host:", result.status, f"after {result.nodes} nodes")

# A complete host, by contrast, contains everything.
complete = make_threegraph(6, itertools.combinations(range(6), 3))
found = contains(complete, pattern)
print("complete host:", found.status, "embedding:", found.embedding.mapping)
