"""Non-induced subhypergraph embedding search.

The host is either an explicit ThreeGraph or any object exposing the small
oracle interface of ExplicitHost (vertex_count, has_edge, coneighbors,
coneighbor_mask, codegree, degree), which lets very large implicit hosts be
searched without materializing them.  Candidate sets are bitmask integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Pair, ThreeGraph, canonical_pair

FOUND = "found"
NONE = "none"
BUDGET_EXHAUSTED = "budget_exhausted"

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map carrying every pattern edge onto a host edge."""

    mapping: Mapping[int, int]  # pattern vertex -> host vertex


@dataclass(frozen=True)
class ContainsResult:
    status: str  # FOUND, NONE or BUDGET_EXHAUSTED
    embedding: Embedding | None
    nodes: int


class ExplicitHost:
    """Adjacency oracle over an explicit ThreeGraph, with bitmask co-neighbor sets."""

    __slots__ = ("graph", "vertex_count", "_pairs", "_masks")

    def __init__(self, graph: ThreeGraph):
        self.graph = graph
        self.vertex_count = graph.n
        self._pairs = graph.coneighbor_table()
        self._masks: dict[Pair, int] = {}
        for pair, ws in self._pairs.items():
            m = 0
            for w in ws:
                m |= 1 << w
            self._masks[pair] = m

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return self.graph.has_edge(a, b, c)

    def coneighbors(self, u: int, v: int) -> tuple[int, ...]:
        return self._pairs.get(canonical_pair(u, v), ())

    def coneighbor_mask(self, u: int, v: int) -> int:
        return self._masks.get(canonical_pair(u, v), 0)

    def codegree(self, u: int, v: int) -> int:
        return len(self.coneighbors(u, v))

    def degree(self, v: int) -> int | None:
        return self.graph.degree(v)


def as_host(host) -> object:
    if isinstance(host, ThreeGraph):
        return ExplicitHost(host)
    required = (
        "vertex_count",
        "has_edge",
        "coneighbors",
        "coneighbor_mask",
        "codegree",
        "degree",
    )
    if all(hasattr(host, attr) for attr in required):
        return host
    raise TypeError(f"not a usable host: {host!r}")


class _Budget(Exception):
    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} expansions")
        self.nodes = nodes


class _Plan:
    """Static search data for one pattern: variable order and per-step pruning."""

    __slots__ = ("order", "anchors", "prior_pairs", "degrees")

    def __init__(self, pattern: ThreeGraph):
        table = pattern.coneighbor_table()
        sdeg = [0] * pattern.n
        for u in range(pattern.n):
            nbrs = set()
            for a, b, c in pattern.edges:
                if u == a:
                    nbrs.update((b, c))
                elif u == b:
                    nbrs.update((a, c))
                elif u == c:
                    nbrs.update((a, b))
            sdeg[u] = len(nbrs)
        # Fail fast on constrained vertices: descending shadow degree, ties by id.
        self.order = sorted(range(pattern.n), key=lambda v: (-sdeg[v], v))
        rank = {v: t for t, v in enumerate(self.order)}
        self.anchors: list[list[Pair]] = [[] for _ in range(pattern.n)]
        for a, b, c in pattern.edges:
            last = max((a, b, c), key=lambda v: rank[v])
            others = tuple(v for v in (a, b, c) if v != last)
            self.anchors[last].append(others)
        self.prior_pairs: list[list[tuple[int, int]]] = [[] for _ in range(pattern.n)]
        for (u, v), ws in table.items():
            lo, hi = (u, v) if rank[u] < rank[v] else (v, u)
            self.prior_pairs[hi].append((lo, len(ws)))
        self.degrees = [pattern.degree(v) for v in range(pattern.n)]


def _search(host, pattern: ThreeGraph, budget: int | None, limit: int):
    """Depth-first embedding search.

    Returns (count, first_embedding, nodes); raises _Budget when the node
    budget runs out.  Stops as soon as `limit` embeddings are found.
    """
    plan = _Plan(pattern)
    nv = host.vertex_count
    image = [-1] * pattern.n
    state = {"nodes": 0, "count": 0, "first": None, "used": 0}

    def rec(t: int) -> bool:
        if t == len(plan.order):
            state["count"] += 1
            if state["first"] is None:
                state["first"] = {v: image[v] for v in range(pattern.n)}
            return state["count"] >= limit
        u = plan.order[t]
        anchors = plan.anchors[u]
        if anchors:
            mask = ~state["used"]
            for x, y in anchors:
                mask &= host.coneighbor_mask(image[x], image[y])
                if not mask:
                    return False
            candidates = []
            while mask:
                low = mask & -mask
                candidates.append(low.bit_length() - 1)
                mask ^= low
        else:
            need_deg = plan.degrees[u]
            used = state["used"]
            candidates = []
            for w in range(nv):
                if used >> w & 1:
                    continue
                hd = host.degree(w)
                if hd is not None and hd < need_deg:
                    continue
                candidates.append(w)
        for w in candidates:
            ok = True
            for v, need in plan.prior_pairs[u]:
                if host.codegree(image[v], w) < need:
                    ok = False
                    break
            if not ok:
                continue
            state["nodes"] += 1
            if budget is not None and state["nodes"] > budget:
                raise _Budget(state["nodes"])
            image[u] = w
            state["used"] |= 1 << w
            stop = rec(t + 1)
            state["used"] &= ~(1 << w)
            image[u] = -1
            if stop:
                return True
        return False

    rec(0)
    return state["count"], state["first"], state["nodes"]


def contains(host, pattern: ThreeGraph, budget: int = DEFAULT_BUDGET) -> ContainsResult:
    """Search the host for a copy of the pattern.

    FOUND returns the first embedding in deterministic order; NONE means the
    search space was exhausted, so no copy exists; BUDGET_EXHAUSTED means
    the node budget ran out first and nothing is claimed either way.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    h = as_host(host)
    try:
        count, first, nodes = _search(h, pattern, budget, limit=1)
    except _Budget as exc:
        return ContainsResult(BUDGET_EXHAUSTED, None, exc.nodes)
    if count:
        return ContainsResult(FOUND, Embedding(first), nodes)
    return ContainsResult(NONE, None, nodes)


def count_embeddings(host, pattern: ThreeGraph, limit: int) -> int:
    """Count labeled embeddings (injections preserving edges), saturating at limit."""
    if limit <= 0:
        return 0
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    h = as_host(host)
    count, _, _ = _search(h, pattern, budget=None, limit=limit)
    return count


def validate_embedding(host, pattern: ThreeGraph, embedding: Embedding) -> bool:
    """Injectivity plus every pattern edge landing on a host edge."""
    h = as_host(host)
    mapping = embedding.mapping
    if sorted(mapping) != list(range(pattern.n)):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images):
        return False
    if any(not 0 <= w < h.vertex_count for w in images):
        return False
    return all(h.has_edge(mapping[a], mapping[b], mapping[c]) for a, b, c in pattern.edges)
