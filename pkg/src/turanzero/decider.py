"""Exact decision of whether a 3-graph has vanishing uniform Turán density.

A 3-graph has uniform Turán density zero iff its vertices admit an
enumeration whose forced pair 3-coloring is consistent; equivalently, iff
some labeling of the vertices leaves every link graph free of monotone
2-edge paths.  Both views reduce to a family of non-betweenness constraints
on the enumeration: whenever two edges share two vertices {p, q} and their
third vertices are x and y, neither p nor q may be placed strictly between
x and y.  The decider backtracks over enumeration prefixes, pruning a
prefix as soon as three placed vertices violate a constraint.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import (
    Graph,
    GoodPartition,
    Labeling,
    Pair,
    Partition21,
    ThreeGraph,
    Triple,
    canonical_pair,
    connected_components,
    induced,
    is_21_type,
    is_good_partition,
)

RED = "red"
BLUE = "blue"
GREEN = "green"
COLORS = (RED, BLUE, GREEN)

ZERO = "zero"
POSITIVE = "positive"

DEFAULT_SEARCH_CAP = 12


class SearchCapExceeded(RuntimeError):
    """The instance is larger than the configured exact-search cap."""


@dataclass(frozen=True)
class ZeroCertificate:
    """Vertex enumeration plus pair coloring witnessing zero uniform Turán density.

    For every edge whose vertices sit at positions i < j < k of the
    enumeration, the pair at (i, j) is red, (i, k) blue and (j, k) green.
    The coloring covers at least every pair lying in an edge; keys are
    canonical (min, max) vertex-id pairs.
    """

    enumeration: tuple[int, ...]
    coloring: Mapping[Pair, str]


@dataclass(frozen=True)
class ColoringConflict:
    """A pair forced to two different colors, with the edge that forced the second."""

    pair: Pair
    existing: str
    forced: str
    edge: Triple


@dataclass(frozen=True)
class Decision:
    verdict: str  # ZERO or POSITIVE
    certificate: ZeroCertificate | None
    searched: int  # search-tree nodes expanded
    witness_labeling: Labeling | None = None  # set by decide_21 on ZERO

    @property
    def is_zero(self) -> bool:
        return self.verdict == ZERO


def _edge_pair_colors(edge: Triple, pos: Mapping[int, int]) -> list[tuple[Pair, str]]:
    lo, mid, hi = sorted(edge, key=lambda v: pos[v])
    return [
        (canonical_pair(lo, mid), RED),
        (canonical_pair(lo, hi), BLUE),
        (canonical_pair(mid, hi), GREEN),
    ]


def forced_coloring(
    h: ThreeGraph, enumeration: Sequence[int]
) -> tuple[ZeroCertificate | None, ColoringConflict | None]:
    """Derive the unique pair coloring forced by the enumeration, edge by edge.

    Returns (certificate, None) when every pair receives one color, and
    (None, conflict) for the first pair forced to two different colors.
    Edges are scanned in canonical (lexicographic) order, so the reported
    conflict is deterministic.
    """
    order = tuple(int(v) for v in enumeration)
    if sorted(order) != list(range(h.n)):
        raise ValueError("enumeration is not a permutation of the vertex set")
    pos = {v: t for t, v in enumerate(order)}
    coloring: dict[Pair, str] = {}
    for edge in h.edges:
        for pair, color in _edge_pair_colors(edge, pos):
            prev = coloring.get(pair)
            if prev is None:
                coloring[pair] = color
            elif prev != color:
                return None, ColoringConflict(pair, prev, color, edge)
    return ZeroCertificate(order, coloring), None


def validate_certificate(h: ThreeGraph, cert: ZeroCertificate) -> tuple[bool, str | None]:
    """Independent certificate check: re-derive forced colors and compare.

    The coloring may cover extra pairs (restrictions of a larger certificate
    do), but must cover every pair lying in an edge.
    """
    if sorted(cert.enumeration) != list(range(h.n)):
        return False, "enumeration is not a permutation of the vertex set"
    for pair, color in cert.coloring.items():
        if color not in COLORS:
            return False, f"pair {pair} has unknown color {color!r}"
        u, v = pair
        if not (0 <= u < v < h.n):
            return False, f"pair {pair} is not a canonical pair of distinct vertices"
    pos = {v: t for t, v in enumerate(cert.enumeration)}
    for edge in h.edges:
        for pair, expected in _edge_pair_colors(edge, pos):
            got = cert.coloring.get(pair)
            if got is None:
                return False, f"pair {pair} lies in edge {edge} but is uncolored"
            if got != expected:
                return False, (
                    f"edge {edge} forces {expected} on pair {pair}, certificate has {got}"
                )
    return True, None


def restrict_certificate(cert: ZeroCertificate, old_ids: Sequence[int]) -> ZeroCertificate:
    """Certificate for the subhypergraph induced on old_ids, relabeled 0..|S|-1.

    old_ids must be ascending original ids, as returned by core.induced.
    """
    keep = set(old_ids)
    remap = {old: new for new, old in enumerate(old_ids)}
    enumeration = tuple(remap[v] for v in cert.enumeration if v in keep)
    coloring = {
        canonical_pair(remap[u], remap[v]): color
        for (u, v), color in cert.coloring.items()
        if u in keep and v in keep
    }
    return ZeroCertificate(enumeration, coloring)


def _relabel_certificate(cert: ZeroCertificate, old_ids: Sequence[int]) -> ZeroCertificate:
    # old_ids is ascending, so canonical pair order is preserved.
    enumeration = tuple(old_ids[v] for v in cert.enumeration)
    coloring = {
        (old_ids[u], old_ids[v]): color for (u, v), color in cert.coloring.items()
    }
    return ZeroCertificate(enumeration, coloring)


# --- constraint extraction ---------------------------------------------------


def middle_forbidden_triples(h: ThreeGraph) -> set[Triple]:
    """All (m, x, y) with x < y such that placing m strictly between x and y
    puts a monotone 2-edge path into some link graph."""
    out: set[Triple] = set()
    for (p, q), ws in h.coneighbor_table().items():
        for x, y in itertools.combinations(ws, 2):
            out.add((p, x, y))
            out.add((q, x, y))
    return out


def _middle_forbidden_21(h: ThreeGraph, p: Partition21) -> set[Triple]:
    # Only links of apex vertices matter, so only cherries sharing one
    # pair-part and one apex-part vertex yield constraints; each lives
    # entirely inside pair_part.
    out: set[Triple] = set()
    for (u, v), ws in h.coneighbor_table().items():
        if u in p.pair_part and v in p.apex_part:
            center = u
        elif v in p.pair_part and u in p.apex_part:
            center = v
        else:
            continue
        for x, y in itertools.combinations(ws, 2):
            out.add((center, x, y))
    return out


def _search_order(
    pool: Sequence[int], forbidden: Iterable[Triple], use_reversal_symmetry: bool
) -> tuple[tuple[int, ...] | None, int]:
    """Depth-first search for an order of `pool` violating no constraint.

    Positions are assigned low to high; a constraint is checked as soon as
    its three vertices are placed.  Label reversal preserves violations, so
    the designated vertex (lowest id in the pool) only needs to visit the
    first half of the positions.
    """
    f = len(pool)
    if f == 0:
        return (), 0
    by_vertex: dict[int, list[Triple]] = {v: [] for v in pool}
    for cons in forbidden:
        for v in set(cons):
            by_vertex[v].append(cons)
    vstar = pool[0]
    half = (f + 1) // 2
    pos: dict[int, int] = {}
    order: list[int] = []
    nodes = 0

    def violates(v: int) -> bool:
        for m, x, y in by_vertex[v]:
            pm = pos.get(m)
            px = pos.get(x)
            py = pos.get(y)
            if pm is None or px is None or py is None:
                continue
            if px < pm < py or py < pm < px:
                return True
        return False

    def extend() -> bool:
        nonlocal nodes
        t = len(order) + 1
        if t > f:
            return True
        if use_reversal_symmetry and t == half and vstar not in pos:
            candidates: tuple[int, ...] = (vstar,)
        else:
            candidates = tuple(v for v in pool if v not in pos)
        for v in candidates:
            nodes += 1
            pos[v] = t
            order.append(v)
            if not violates(v) and extend():
                return True
            order.pop()
            del pos[v]
        return False

    if extend():
        return tuple(order), nodes
    return None, nodes


def decide_uniform_turan_zero(
    h: ThreeGraph,
    *,
    cap: int = DEFAULT_SEARCH_CAP,
    use_reversal_symmetry: bool = True,
) -> Decision:
    """Decide whether the uniform Turán density of h is zero.

    ZERO comes with a validating certificate; POSITIVE means the exhaustive
    (symmetry-reduced) order search found a monotone 2-edge path in some
    link for every enumeration.  Instances above `cap` vertices are refused
    rather than guessed at.
    """
    if h.n > cap:
        raise SearchCapExceeded(f"search cap exceeded: {h.n} vertices with cap {cap}")
    covered = sorted(h.covered_vertices())
    isolated = sorted(set(range(h.n)) - set(covered))
    order, nodes = _search_order(covered, middle_forbidden_triples(h), use_reversal_symmetry)
    if order is None:
        return Decision(POSITIVE, None, nodes)
    enumeration = tuple(order) + tuple(isolated)
    cert, conflict = forced_coloring(h, enumeration)
    if conflict is not None:  # impossible for a monotone-free order
        raise RuntimeError(f"internal error: monotone-free order produced {conflict}")
    return Decision(ZERO, cert, nodes)


def decide_21(
    h: ThreeGraph,
    p: Partition21,
    *,
    cap: int = DEFAULT_SEARCH_CAP,
    use_reversal_symmetry: bool = True,
) -> Decision:
    """Decide zero-ness for a (2,1)-type 3-graph by searching pair-part labelings only.

    POSITIVE iff every labeling of the pair part puts a monotone 2-edge path
    into the link of some apex vertex.  On ZERO the witness labeling of the
    pair part is returned, plus the full certificate obtained by appending
    the apex part (and any untouched vertices) behind it.
    """
    if not is_21_type(h, p):
        raise ValueError("partition is not (2,1)-type for this 3-graph")
    pair_vertices = sorted(p.pair_part)
    if len(pair_vertices) > cap:
        raise SearchCapExceeded(
            f"search cap exceeded: {len(pair_vertices)} pair-part vertices with cap {cap}"
        )
    order, nodes = _search_order(
        pair_vertices, _middle_forbidden_21(h, p), use_reversal_symmetry
    )
    if order is None:
        return Decision(POSITIVE, None, nodes)
    witness = Labeling(order)
    rest = sorted(p.apex_part) + sorted(set(range(h.n)) - p.pair_part - p.apex_part)
    cert, conflict = forced_coloring(h, tuple(order) + tuple(rest))
    if conflict is not None:
        raise RuntimeError(f"internal error: pair-part witness produced {conflict}")
    return Decision(ZERO, cert, nodes, witness_labeling=witness)


def gamma_graph(h: ThreeGraph, p: Partition21) -> Graph:
    """Auxiliary graph on the pair part joining the endpoints of every 2-edge
    path that lives in the link of an apex vertex."""
    if not is_21_type(h, p):
        raise ValueError("partition is not (2,1)-type for this 3-graph")
    edges = set()
    for (u, v), ws in h.coneighbor_table().items():
        crosses = (u in p.pair_part and v in p.apex_part) or (
            v in p.pair_part and u in p.apex_part
        )
        if not crosses:
            continue
        # ws is the sorted co-neighbor set, entirely inside the pair part.
        for x, y in itertools.combinations(ws, 2):
            edges.add((x, y))
    return Graph(frozenset(p.pair_part), frozenset(edges))


def extract_connected_witness(
    h: ThreeGraph, p: Partition21, *, cap: int = DEFAULT_SEARCH_CAP
) -> tuple[frozenset[int], frozenset[int]]:
    """Shrink a POSITIVE (2,1)-type instance to one whose auxiliary graph is
    confined to a single connected component.

    Components are tried by smallest vertex id; the first whose induced
    piece stays POSITIVE is returned as original-id sets.  Requires
    decide_21(h, p) to be POSITIVE.
    """
    base = decide_21(h, p, cap=cap)
    if base.is_zero:
        raise ValueError("no witness exists: the 3-graph already decides to zero")
    for comp in connected_components(gamma_graph(h, p)):
        apex = set()
        for e in h.edges:
            duo = [v for v in e if v in p.pair_part]
            if len(duo) == 2 and duo[0] in comp and duo[1] in comp:
                apex.add(next(v for v in e if v in p.apex_part))
        sub, old_ids = induced(h, comp | apex)
        remap = {old: new for new, old in enumerate(old_ids)}
        sub_p = Partition21(
            frozenset(remap[v] for v in comp), frozenset(remap[v] for v in apex)
        )
        if decide_21(sub, sub_p, cap=cap).verdict == POSITIVE:
            return frozenset(comp), frozenset(apex)
    raise RuntimeError("internal error: no component restriction stayed positive")


def tripartite_reduction(
    h: ThreeGraph, gp: GoodPartition, *, cap: int = DEFAULT_SEARCH_CAP
) -> tuple[Decision, Decision, Decision]:
    """Decide the three (2,1)-type pieces induced by a good tripartition.

    Pieces are taken in cyclic order (parts[0]+parts[1], parts[1]+parts[2],
    parts[2]+parts[0]); certificates are translated back to original ids.
    """
    if not is_good_partition(h, gp):
        raise ValueError("partition is not good for this 3-graph")
    decisions = []
    for i in range(3):
        x, y = gp.parts[i], gp.parts[(i + 1) % 3]
        sub, old_ids = induced(h, x | y)
        remap = {old: new for new, old in enumerate(old_ids)}
        sub_p = Partition21(frozenset(remap[v] for v in x), frozenset(remap[v] for v in y))
        d = decide_21(sub, sub_p, cap=cap)
        if d.is_zero:
            cert = _relabel_certificate(d.certificate, old_ids)
            witness = Labeling(tuple(old_ids[v] for v in d.witness_labeling.order))
            d = Decision(ZERO, cert, d.searched, witness_labeling=witness)
        decisions.append(d)
    return decisions[0], decisions[1], decisions[2]


# --- serialization -----------------------------------------------------------


def decision_to_json_dict(decision: Decision) -> dict:
    out: dict = {"verdict": decision.verdict, "searched": decision.searched}
    if decision.certificate is not None:
        out["enumeration"] = list(decision.certificate.enumeration)
        out["coloring"] = [
            [u, v, color] for (u, v), color in sorted(decision.certificate.coloring.items())
        ]
    if decision.witness_labeling is not None:
        out["pair_labeling"] = [
            [v, t + 1] for t, v in enumerate(decision.witness_labeling.order)
        ]
    return out


def decision_from_json_dict(data: Mapping) -> Decision:
    verdict = data["verdict"]
    if verdict not in (ZERO, POSITIVE):
        raise ValueError(f"unknown verdict {verdict!r}")
    cert = None
    if "enumeration" in data:
        coloring = {canonical_pair(u, v): color for u, v, color in data["coloring"]}
        cert = ZeroCertificate(tuple(data["enumeration"]), coloring)
    witness = None
    if "pair_labeling" in data:
        witness = Labeling(tuple(v for v, _ in sorted(data["pair_labeling"], key=lambda x: x[1])))
    return Decision(verdict, cert, int(data["searched"]), witness_labeling=witness)


def decision_to_json(decision: Decision) -> str:
    return json.dumps(decision_to_json_dict(decision), indent=2, sort_keys=True)


def graph_to_dot(g: Graph, name: str = "gamma") -> str:
    """Deterministic DOT rendering (vertices then edges, each sorted)."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in sorted(g.vertices))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
