"""Shared test utilities: instance generators and independent brute-force oracles.

The oracles here deliberately avoid the library's search machinery: they
enumerate permutations / injections directly off the definitions, so they can
arbitrate the optimized implementations.
"""

from __future__ import annotations

import itertools
import random

from turanzero.core import (
    GoodPartition,
    Partition21,
    ThreeGraph,
    adjacency,
    link_graph,
    make_threegraph,
)
from turanzero.decider import forced_coloring


# --- random instances --------------------------------------------------------


def random_threegraph(rng: random.Random, n: int, p: float) -> ThreeGraph:
    triples = [t for t in itertools.combinations(range(n), 3) if rng.random() < p]
    return make_threegraph(n, triples)


def random_21_instance(rng: random.Random, n: int, p: float) -> tuple[ThreeGraph, Partition21]:
    """Random (2,1)-type 3-graph on n vertices with a random ordered bipartition."""
    ids = list(range(n))
    rng.shuffle(ids)
    cut = rng.randint(2, max(2, n - 1))
    pair_part, apex_part = set(ids[:cut]), set(ids[cut:])
    triples = []
    for a1, a2 in itertools.combinations(sorted(pair_part), 2):
        for b in sorted(apex_part):
            if rng.random() < p:
                triples.append((a1, a2, b))
    return make_threegraph(n, triples), Partition21(frozenset(pair_part), frozenset(apex_part))


def random_good_instance(rng: random.Random, n: int, p: float) -> tuple[ThreeGraph, GoodPartition]:
    """Random 3-graph with a planted good tripartition on n vertices."""
    parts: list[set[int]] = [set(), set(), set()]
    for v in range(n):
        parts[rng.randrange(3)].add(v)
    triples = []
    for i in range(3):
        for a1, a2 in itertools.combinations(sorted(parts[i]), 2):
            for b in sorted(parts[(i + 1) % 3]):
                if rng.random() < p:
                    triples.append((a1, a2, b))
    gp = GoodPartition((frozenset(parts[0]), frozenset(parts[1]), frozenset(parts[2])))
    return make_threegraph(n, triples), gp


def random_3partite(rng: random.Random, n: int, p: float) -> ThreeGraph:
    """Random 3-partite 3-graph: every edge meets three fixed parts once each."""
    parts: list[set[int]] = [set(), set(), set()]
    for v in range(n):
        parts[rng.randrange(3)].add(v)
    triples = []
    for a in sorted(parts[0]):
        for b in sorted(parts[1]):
            for c in sorted(parts[2]):
                if rng.random() < p:
                    triples.append((a, b, c))
    return make_threegraph(n, triples)


def all_threegraphs(n: int):
    """Every 3-graph on exactly n vertices (2^C(n,3) of them)."""
    slots = list(itertools.combinations(range(n), 3))
    for mask in range(1 << len(slots)):
        yield make_threegraph(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])


# --- decision oracles --------------------------------------------------------


def oracle_zero_by_coloring(h: ThreeGraph) -> bool:
    """Exhaustive: does some enumeration admit a consistent forced coloring?"""
    for perm in itertools.permutations(range(h.n)):
        cert, conflict = forced_coloring(h, perm)
        if conflict is None:
            return True
    return False


def oracle_zero_by_links(h: ThreeGraph) -> bool:
    """Exhaustive: does some labeling leave every link free of monotone 2-edge paths?

    Checked straight off the definition: for each labeling, scan every link
    graph for a path u-v-w with the middle label strictly between.
    """
    links = [adjacency(link_graph(h, v)) for v in range(h.n)]
    paths = []
    for adj in links:
        for center, nbrs in adj.items():
            for u, w in itertools.combinations(nbrs, 2):
                paths.append((u, center, w))
    for perm in itertools.permutations(range(h.n)):
        pos = {v: t for t, v in enumerate(perm)}
        ok = True
        for u, center, w in paths:
            if pos[u] < pos[center] < pos[w] or pos[w] < pos[center] < pos[u]:
                ok = False
                break
        if ok:
            return True
    return False


def oracle_zero_21_by_links(h: ThreeGraph, p: Partition21) -> bool:
    """Exhaustive restricted oracle: does some labeling of the pair part alone
    leave every apex-vertex link free of monotone 2-edge paths?

    Apex links of a (2,1)-type 3-graph live inside the pair part, so a
    pair-part labeling is enough to evaluate them.
    """
    pair_vertices = sorted(p.pair_part)
    paths = []
    for b in sorted(p.apex_part):
        adj = adjacency(link_graph(h, b))
        for center, nbrs in adj.items():
            for u, w in itertools.combinations(nbrs, 2):
                paths.append((u, center, w))
    for perm in itertools.permutations(pair_vertices):
        pos = {v: t for t, v in enumerate(perm)}
        ok = True
        for u, center, w in paths:
            if pos[u] < pos[center] < pos[w] or pos[w] < pos[center] < pos[u]:
                ok = False
                break
        if ok:
            return True
    return False


def oracle_count_embeddings(host: ThreeGraph, pattern: ThreeGraph) -> int:
    """Count injections of V(pattern) into V(host) carrying edges onto edges."""
    count = 0
    for images in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(images[a], images[b], images[c]) for a, b, c in pattern.edges):
            count += 1
    return count


def oracle_gamma_edges(h: ThreeGraph, p: Partition21) -> set[tuple[int, int]]:
    """Auxiliary-graph edges straight off the definition, by quadruple scan."""
    out = set()
    for u, v in itertools.combinations(sorted(p.pair_part), 2):
        for w in sorted(p.pair_part):
            if w in (u, v):
                continue
            for x in sorted(p.apex_part):
                if h.has_edge(u, w, x) and h.has_edge(v, w, x):
                    out.add((u, v))
    return out
