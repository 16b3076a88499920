"""Immutable data model for 3-uniform hypergraphs and vertex labelings.

Vertices are dense integer ids 0..n-1; external names belong to I/O layers.
Pair-keyed tables (codegree counts, pair colorings) are addressed by the
canonical ordered pair (min, max).  All values are immutable once built and
safe to share for concurrent reads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

Pair = tuple[int, int]
Triple = tuple[int, int, int]


def canonical_pair(u: int, v: int) -> Pair:
    return (u, v) if u <= v else (v, u)


class ThreeGraph:
    """3-uniform hypergraph on vertices 0..n-1.

    Edges are stored as lexicographically sorted triples of sorted vertex
    ids, so equality and hashing are structural.  Isolated vertices are
    legal; n is explicit and never inferred from the edge set.
    """

    __slots__ = ("n", "edges", "_edge_set", "_coneighbors", "_degrees")

    def __init__(self, n: int, triples: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for raw in triples:
            t = tuple(int(v) for v in raw)
            if len(t) != 3:
                raise ValueError(f"triple must have exactly 3 vertices: {t}")
            if len(set(t)) != 3:
                raise ValueError(f"repeated vertex in triple {t}")
            if any(v < 0 or v >= n for v in t):
                raise ValueError(f"vertex out of range 0..{n - 1} in triple {t}")
            canon.add(tuple(sorted(t)))
        self.n = n
        self.edges: tuple[Triple, ...] = tuple(sorted(canon))
        self._edge_set = frozenset(self.edges)
        self._coneighbors: dict[Pair, tuple[int, ...]] | None = None
        self._degrees: tuple[int, ...] | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThreeGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"ThreeGraph(n={self.n}, edges={len(self.edges)})"

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self._edge_set

    def coneighbor_table(self) -> dict[Pair, tuple[int, ...]]:
        """Pair -> sorted co-neighbors, for every pair covered by an edge.

        The returned dict is a shared cache; treat it as read-only.
        """
        if self._coneighbors is None:
            table: dict[Pair, list[int]] = {}
            for a, b, c in self.edges:
                table.setdefault((a, b), []).append(c)
                table.setdefault((a, c), []).append(b)
                table.setdefault((b, c), []).append(a)
            self._coneighbors = {p: tuple(sorted(ws)) for p, ws in table.items()}
        return self._coneighbors

    def pair_coneighbors(self, u: int, v: int) -> tuple[int, ...]:
        return self.coneighbor_table().get(canonical_pair(u, v), ())

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")
        if self._degrees is None:
            deg = [0] * self.n
            for a, b, c in self.edges:
                deg[a] += 1
                deg[b] += 1
                deg[c] += 1
            self._degrees = tuple(deg)
        return self._degrees[v]

    def covered_vertices(self) -> frozenset[int]:
        """Vertices incident to at least one edge."""
        return frozenset(v for e in self.edges for v in e)


def make_threegraph(n: int, triples: Iterable[Iterable[int]] = ()) -> ThreeGraph:
    """Canonicalized ThreeGraph; duplicate triples collapse into one edge."""
    return ThreeGraph(n, triples)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; edges are canonical (min, max) pairs over `vertices`."""

    vertices: frozenset[int]
    edges: frozenset[Pair]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) is not canonically ordered")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")


def make_graph(vertices: Iterable[int], pairs: Iterable[Iterable[int]]) -> Graph:
    vs = frozenset(int(v) for v in vertices)
    es = set()
    for raw in pairs:
        u, v = (int(x) for x in raw)
        es.add(canonical_pair(u, v))
    return Graph(vs, frozenset(es))


def adjacency(g: Graph) -> dict[int, tuple[int, ...]]:
    """Sorted neighbor tuple per vertex (isolated vertices map to ())."""
    nbrs: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return {v: tuple(sorted(ws)) for v, ws in nbrs.items()}


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components as vertex sets, sorted by their smallest member."""
    adj = adjacency(g)
    seen: set[int] = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def link_graph(h: ThreeGraph, v: int) -> Graph:
    """Graph of the pairs that form an edge of h together with v."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range 0..{h.n - 1}")
    pairs = set()
    for a, b, c in h.edges:
        if v == a:
            pairs.add((b, c))
        elif v == b:
            pairs.add((a, c))
        elif v == c:
            pairs.add((a, b))
    return Graph(frozenset(range(h.n)), frozenset(pairs))


def shadow(h: ThreeGraph) -> Graph:
    """Graph of all pairs covered by some edge of h."""
    pairs = set()
    for a, b, c in h.edges:
        pairs.add((a, b))
        pairs.add((a, c))
        pairs.add((b, c))
    return Graph(frozenset(range(h.n)), frozenset(pairs))


def codegree(h: ThreeGraph, u: int, v: int) -> int:
    """Number of edges containing both u and v."""
    if u == v:
        raise ValueError("codegree requires two distinct vertices")
    for x in (u, v):
        if not 0 <= x < h.n:
            raise ValueError(f"vertex {x} out of range 0..{h.n - 1}")
    return len(h.pair_coneighbors(u, v))


def min_codegree(h: ThreeGraph) -> int:
    """Minimum codegree over all unordered vertex pairs, pairs of codegree 0 included."""
    if h.n < 2:
        raise ValueError("min_codegree needs at least two vertices")
    table = h.coneighbor_table()
    if len(table) < h.n * (h.n - 1) // 2:
        return 0
    return min(len(ws) for ws in table.values())


def induced(h: ThreeGraph, subset: Iterable[int]) -> tuple[ThreeGraph, tuple[int, ...]]:
    """Subhypergraph induced on `subset`, relabeled 0..|S|-1 by ascending original id.

    Returns (graph, old_ids) where old_ids[new_id] is the original id.
    """
    old_ids = tuple(sorted({int(v) for v in subset}))
    for v in old_ids:
        if not 0 <= v < h.n:
            raise ValueError(f"vertex {v} out of range 0..{h.n - 1}")
    keep = set(old_ids)
    remap = {old: new for new, old in enumerate(old_ids)}
    triples = [
        (remap[a], remap[b], remap[c])
        for a, b, c in h.edges
        if a in keep and b in keep and c in keep
    ]
    return ThreeGraph(len(old_ids), triples), old_ids


@dataclass(frozen=True)
class Labeling:
    """Bijection from a vertex set onto {1..m}, stored as the label-ordered vertex tuple.

    order[t - 1] is the vertex labeled t.
    """

    order: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise ValueError("labeling order contains a repeated vertex")

    def __len__(self) -> int:
        return len(self.order)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.order)

    def mapping(self) -> dict[int, int]:
        """Vertex -> label dict (labels are 1-based)."""
        return {v: t + 1 for t, v in enumerate(self.order)}

    def label_of(self, v: int) -> int:
        try:
            return self.order.index(v) + 1
        except ValueError:
            raise ValueError(f"vertex {v} is not in the labeling domain") from None


def labeling_sum(first: Labeling, *rest: Labeling) -> Labeling:
    """Concatenate labelings: later ones are shifted past all earlier labels.

    Domains must be pairwise disjoint.  With more than two arguments the sum
    is taken left-nested, which is associative anyway.
    """
    order = list(first.order)
    seen = set(order)
    for lab in rest:
        overlap = seen & lab.domain
        if overlap:
            raise ValueError(f"labeling domains overlap on {sorted(overlap)}")
        order.extend(lab.order)
        seen |= lab.domain
    return Labeling(tuple(order))


def induced_labeling(values: Mapping[int, int]) -> Labeling:
    """The unique labeling ordering the domain the same way as `values`.

    `values` must be an injection into the integers.
    """
    if len(set(values.values())) != len(values):
        raise ValueError("values are not injective")
    return Labeling(tuple(sorted(values, key=lambda v: values[v])))


def reverse_labeling(lab: Labeling) -> Labeling:
    """Map label t to m + 1 - t."""
    return Labeling(tuple(reversed(lab.order)))


def find_monotone_p3(g: Graph, labeling: Labeling) -> Triple | None:
    """Find a 2-edge path u-v-w whose middle label is strictly between the ends.

    Returns the witness in increasing-label order, or None.  Every vertex of
    g incident to an edge must be labeled.
    """
    adj = adjacency(g)
    labels = labeling.mapping()
    for v, ws in adj.items():
        if ws and v not in labels:
            raise ValueError(f"vertex {v} is incident to an edge but unlabeled")
    for center in sorted(adj):
        nbrs = adj[center]
        if len(nbrs) < 2:
            continue
        lc = labels[center]
        for u, w in itertools.combinations(nbrs, 2):
            lu, lw = labels[u], labels[w]
            if lu < lc < lw:
                return (u, center, w)
            if lw < lc < lu:
                return (w, center, u)
    return None


def has_monotone_p3(g: Graph, labeling: Labeling) -> bool:
    return find_monotone_p3(g, labeling) is not None


@dataclass(frozen=True)
class Partition21:
    """Ordered bipartition: every edge must take two vertices from pair_part, one from apex_part."""

    pair_part: frozenset[int]
    apex_part: frozenset[int]

    def __post_init__(self):
        overlap = self.pair_part & self.apex_part
        if overlap:
            raise ValueError(f"partition parts overlap on {sorted(overlap)}")


def make_partition21(pair_part: Iterable[int], apex_part: Iterable[int]) -> Partition21:
    return Partition21(frozenset(int(v) for v in pair_part), frozenset(int(v) for v in apex_part))


@dataclass(frozen=True)
class GoodPartition:
    """Cyclic tripartition: every edge has two vertices in parts[i], one in parts[(i+1) % 3]."""

    parts: tuple[frozenset[int], frozenset[int], frozenset[int]]

    def __post_init__(self):
        for i, j in itertools.combinations(range(3), 2):
            overlap = self.parts[i] & self.parts[j]
            if overlap:
                raise ValueError(f"partition parts overlap on {sorted(overlap)}")


def make_good_partition(a: Iterable[int], b: Iterable[int], c: Iterable[int]) -> GoodPartition:
    return GoodPartition(
        (
            frozenset(int(v) for v in a),
            frozenset(int(v) for v in b),
            frozenset(int(v) for v in c),
        )
    )


def is_21_type(h: ThreeGraph, p: Partition21) -> bool:
    """True iff every edge has exactly two vertices in pair_part and one in apex_part."""
    for e in h.edges:
        in_pair = sum(1 for v in e if v in p.pair_part)
        in_apex = sum(1 for v in e if v in p.apex_part)
        if in_pair != 2 or in_apex != 1:
            return False
    return True


def is_good_partition(h: ThreeGraph, gp: GoodPartition) -> bool:
    """True iff the parts cover 0..n-1 and every edge is 2-in-part, 1-in-next-part.

    Rules out edges inside a single part and edges meeting all three parts.
    """
    union = gp.parts[0] | gp.parts[1] | gp.parts[2]
    if union != frozenset(range(h.n)):
        return False
    for e in h.edges:
        counts = [sum(1 for v in e if v in part) for part in gp.parts]
        ok = any(counts[i] == 2 and counts[(i + 1) % 3] == 1 for i in range(3))
        if not ok:
            return False
    return True


# --- .3g text format -------------------------------------------------------
#
# Line 1: vertex count.  Each further non-comment line: three vertex ids.
# Lines starting with '#' and blank lines are ignored.  Writers emit the
# edges sorted lexicographically.


def threegraph_to_3g(h: ThreeGraph) -> str:
    lines = [str(h.n)]
    lines.extend(f"{a} {b} {c}" for a, b, c in h.edges)
    return "\n".join(lines) + "\n"


def threegraph_from_3g(text: str) -> ThreeGraph:
    n: int | None = None
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ValueError(f"line {lineno}: expected a single vertex count, got {line!r}")
            n = int(tokens[0])
            continue
        if len(tokens) != 3:
            raise ValueError(f"line {lineno}: expected three vertex ids, got {line!r}")
        triples.append(tuple(int(t) for t in tokens))
    if n is None:
        raise ValueError("missing vertex-count line")
    return make_threegraph(n, triples)


def write_3g(h: ThreeGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(threegraph_to_3g(h))


def read_3g(path) -> ThreeGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return threegraph_from_3g(fh.read())
