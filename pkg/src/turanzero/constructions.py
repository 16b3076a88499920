"""Seeded generators for extremal 3-graphs and their verifiers.

The centerpiece is a randomized circle construction: n circle vertices and n
link-copy vertices, where each circle vertex independently picks one of r
arcs of q consecutive positions (n = q*r + 1), and a pair becomes adjacent in
a link copy exactly when each endpoint lies in the arc the other picked.
The resulting (2,1)-type 3-graph has linear codegrees with high probability,
while the arc geometry deterministically confines every link neighborhood to
a single short arc.  A cyclic three-part composition of it, a random
tournament hypergraph, and generators of certified zero-density instances
round out the module.

Every generator is a pure function of its parameters plus a 64-bit seed; the
PRNG (numpy PCG64) is recorded in all reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

import numpy as np

from .core import (
    GoodPartition,
    Pair,
    ThreeGraph,
    canonical_pair,
    codegree,
    make_threegraph,
)
from .decider import BLUE, GREEN, RED, ZeroCertificate, validate_certificate

GENERATOR_NAME = "numpy-pcg64"

DEFAULT_MATRIX_CAP_BYTES = 2**31
DEFAULT_MAX_EDGES = 5_000_000


class MemoryCapExceeded(RuntimeError):
    """The requested object would exceed a configured memory cap."""


def _rng(seed: int) -> np.random.Generator:
    if not 0 <= int(seed) < 2**64:
        raise ValueError("seed must fit in 64 unsigned bits")
    return np.random.Generator(np.random.PCG64(int(seed)))


@dataclass(eq=False)
class BipartiteConstruction:
    """Parameters and arc-choice matrix of the randomized circle construction.

    x[l][i] is the arc index (0..r-1) chosen by circle vertex i inside link
    copy l.  Circle vertices get ids 0..n-1, link-copy vertices n..2n-1 when
    the 3-graph is materialized or searched.  Treat instances as immutable.
    """

    k: int
    r: int
    q: int
    n: int
    seed: int
    x: np.ndarray

    def __repr__(self) -> str:
        return (
            f"BipartiteConstruction(k={self.k}, r={self.r}, q={self.q}, "
            f"n={self.n}, seed={self.seed})"
        )


def build_bipartite(
    k: int, q: int, seed: int, *, matrix_cap_bytes: int = DEFAULT_MATRIX_CAP_BYTES
) -> BipartiteConstruction:
    """Draw the arc-choice matrix for parameters k, q: r = 4k arcs of length q,
    n = q*r + 1 circle positions.

    The matrix is filled row by row (one row per link copy), each entry
    uniform on 0..r-1, so identical (k, q, seed) reproduce it bit for bit.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if q < 1:
        raise ValueError("q must be at least 1")
    r = 4 * k
    if r > 255:
        raise ValueError("r = 4k must fit in a byte (k <= 63)")
    n = q * r + 1
    if n * n > matrix_cap_bytes:
        raise MemoryCapExceeded(
            f"arc matrix needs {n * n} bytes, cap is {matrix_cap_bytes}"
        )
    x = _rng(seed).integers(0, r, size=(n, n), dtype=np.uint8)
    return BipartiteConstruction(k=k, r=r, q=q, n=n, seed=int(seed), x=x)


def _offset_class(c: BipartiteConstruction, offset: int) -> int:
    # offset is (j - i) mod n, in 1..n-1 = 1..q*r.
    return (offset - 1) // c.q


def h_edge(c: BipartiteConstruction, i: int, j: int, ell: int) -> bool:
    """Is {circle i, circle j, copy ell} an edge?  O(1) and symmetric in (i, j).

    True iff j lies in the arc i picked in copy ell and vice versa.
    """
    n = c.n
    for v in (i, j, ell):
        if not 0 <= v < n:
            raise ValueError(f"index {v} out of range 0..{n - 1}")
    if i == j:
        raise ValueError("circle vertices must be distinct")
    d = (j - i) % n
    return bool(
        c.x[ell, i] == _offset_class(c, d) and c.x[ell, j] == _offset_class(c, n - d)
    )


def arc(c: BipartiteConstruction, i: int, ell: int) -> tuple[int, ...]:
    """The q consecutive circle positions vertex i picked in copy ell (excludes i)."""
    cls = int(c.x[ell, i])
    return tuple((i + t) % c.n for t in range(cls * c.q + 1, (cls + 1) * c.q + 1))


def link_neighbors(c: BipartiteConstruction, i: int, ell: int) -> tuple[int, ...]:
    """Sorted neighbors of circle vertex i in link copy ell (always inside arc(c, i, ell))."""
    n, q = c.n, c.q
    cls = int(c.x[ell, i])
    out = []
    for t in range(cls * q + 1, (cls + 1) * q + 1):
        j = (i + t) % n
        if c.x[ell, j] == _offset_class(c, n - t):
            out.append(j)
    return tuple(sorted(out))


def link_adjacency_matrix(c: BipartiteConstruction, ell: int) -> np.ndarray:
    """Dense boolean adjacency of link copy ell (for exhaustive geometry checks)."""
    n = c.n
    offsets = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n  # offsets[i, j] = (j-i) % n
    cls = np.where(offsets > 0, (offsets - 1) // c.q, 0)
    row = c.x[ell]
    adj = (row[:, None] == cls) & (row[None, :] == cls.T)
    np.fill_diagonal(adj, False)
    return adj


def edge_stream(c: BipartiteConstruction) -> Iterator[tuple[int, int, int]]:
    """All edges as (i, j, ell) with i < j, grouped by circular distance."""
    n = c.n
    eq_masks = [c.x == cls for cls in range(c.r)]
    for d in range(1, (n - 1) // 2 + 1):
        t = eq_masks[_offset_class(c, d)] & np.roll(
            eq_masks[_offset_class(c, n - d)], -d, axis=1
        )
        ells, iis = np.nonzero(t)
        js = (iis + d) % n
        for ell, i, j in zip(ells.tolist(), iis.tolist(), js.tolist()):
            yield (i, j, ell) if i < j else (j, i, ell)


def _expected_edges(c: BipartiteConstruction) -> float:
    return c.n * (c.n - 1) / 2 * c.n / (c.r * c.r)


def realize(c: BipartiteConstruction, *, max_edges: int = DEFAULT_MAX_EDGES) -> ThreeGraph:
    """Materialize the implicit 3-graph: circle vertex i -> id i, copy ell -> id n + ell."""
    if _expected_edges(c) > 2 * max_edges:
        raise MemoryCapExceeded(
            f"expected about {_expected_edges(c):.0f} edges, cap is {max_edges}"
        )
    n = c.n
    triples = []
    for i, j, ell in edge_stream(c):
        triples.append((i, j, n + ell))
        if len(triples) > max_edges:
            raise MemoryCapExceeded(f"more than {max_edges} edges")
    return make_threegraph(2 * n, triples)


def build_tripartite(
    c: BipartiteConstruction, *, max_edges: int = DEFAULT_MAX_EDGES
) -> ThreeGraph:
    """Three cyclically linked copies of the implicit 3-graph on 3n vertices.

    Parts are 0..n-1, n..2n-1 and 2n..3n-1; every implicit edge (i, j, ell)
    contributes one edge per part with the vertex pair in that part and the
    apex in the cyclically next one.  The partition is good by construction.
    """
    if 3 * _expected_edges(c) > 2 * max_edges:
        raise MemoryCapExceeded(
            f"expected about {3 * _expected_edges(c):.0f} edges, cap is {max_edges}"
        )
    n = c.n
    triples = []
    for i, j, ell in edge_stream(c):
        triples.append((i, j, n + ell))
        triples.append((n + i, n + j, 2 * n + ell))
        triples.append((2 * n + i, 2 * n + j, ell))
        if len(triples) > max_edges:
            raise MemoryCapExceeded(f"more than {max_edges} edges")
    return make_threegraph(3 * n, triples)


def tripartite_partition(c: BipartiteConstruction) -> GoodPartition:
    n = c.n
    return GoodPartition(
        (
            frozenset(range(n)),
            frozenset(range(n, 2 * n)),
            frozenset(range(2 * n, 3 * n)),
        )
    )


@dataclass(frozen=True)
class CodegreeReport:
    """Exact codegree minima of a BipartiteConstruction against the n/(2r^2) threshold.

    min_pair_codegree ranges over all circle-vertex pairs, min_cross_degree
    over all (circle, copy) pairs; both are full enumerations, not samples.
    Histograms are (value, count) tuples.
    """

    k: int
    r: int
    q: int
    n: int
    seed: int
    generator: str
    threshold: Fraction
    min_pair_codegree: int
    min_cross_degree: int
    mean_pair_codegree: float
    pair_ok: bool
    cross_ok: bool
    pair_histogram: tuple[tuple[int, int], ...]
    cross_histogram: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": "codegree_report",
            "k": self.k,
            "r": self.r,
            "q": self.q,
            "n": self.n,
            "seed": self.seed,
            "generator": self.generator,
            "threshold": {
                "numerator": self.threshold.numerator,
                "denominator": self.threshold.denominator,
                "value": float(self.threshold),
            },
            "min_pair_codegree": self.min_pair_codegree,
            "min_cross_degree": self.min_cross_degree,
            "mean_pair_codegree": self.mean_pair_codegree,
            "pair_ok": self.pair_ok,
            "cross_ok": self.cross_ok,
            "pair_histogram": [list(t) for t in self.pair_histogram],
            "cross_histogram": [list(t) for t in self.cross_histogram],
        }


def _histogram(counts: np.ndarray) -> tuple[tuple[int, int], ...]:
    return tuple((int(v), int(c)) for v, c in enumerate(counts) if c)


def verify_codegrees(c: BipartiteConstruction) -> CodegreeReport:
    """Exact minima over all circle pairs and all (circle, copy) pairs.

    A pair at circular distance d is adjacent in copy ell iff both arc
    choices match the distance classes, so one boolean matrix per distance
    yields every pair codegree (its column sums) and every link degree (its
    row accumulation), with nothing sampled.
    """
    n, q, r = c.n, c.q, c.r
    assert n % 2 == 1  # n = 4kq + 1
    eq_masks = [c.x == cls for cls in range(r)]
    deg = np.zeros((n, n), dtype=np.uint32)
    pair_min = n + 1
    pair_total = 0
    pair_hist = np.zeros(n + 1, dtype=np.int64)
    for d in range(1, (n - 1) // 2 + 1):
        t = eq_masks[_offset_class(c, d)] & np.roll(
            eq_masks[_offset_class(c, n - d)], -d, axis=1
        )
        colsums = t.sum(axis=0)
        pair_min = min(pair_min, int(colsums.min()))
        pair_total += int(colsums.sum())
        pair_hist += np.bincount(colsums, minlength=n + 1)
        deg += t
        deg += np.roll(t, d, axis=1)
    threshold = Fraction(n, 2 * r * r)
    pairs = n * (n - 1) // 2
    min_cross = int(deg.min())
    cross_hist = np.bincount(deg.ravel(), minlength=1)
    return CodegreeReport(
        k=c.k,
        r=r,
        q=q,
        n=n,
        seed=c.seed,
        generator=GENERATOR_NAME,
        threshold=threshold,
        min_pair_codegree=pair_min,
        min_cross_degree=min_cross,
        mean_pair_codegree=pair_total / pairs,
        pair_ok=pair_min * 2 * r * r > n,
        cross_ok=min_cross * 2 * r * r > n,
        pair_histogram=_histogram(pair_hist),
        cross_histogram=_histogram(cross_hist),
    )


class BipartiteHost:
    """O(1) edge-membership view of a BipartiteConstruction for containment search.

    Circle vertices are 0..n-1, link-copy vertices n..2n-1.  Co-neighbor
    queries are answered from the arc matrix and cached per pair.
    """

    __slots__ = ("construction", "vertex_count", "_cone", "_masks")

    def __init__(self, construction: BipartiteConstruction):
        self.construction = construction
        self.vertex_count = 2 * construction.n
        self._cone: dict[Pair, tuple[int, ...]] = {}
        self._masks: dict[Pair, int] = {}

    def has_edge(self, a: int, b: int, c: int) -> bool:
        n = self.construction.n
        if len({a, b, c}) != 3:
            return False
        circle = [v for v in (a, b, c) if 0 <= v < n]
        copies = [v for v in (a, b, c) if n <= v < 2 * n]
        if len(circle) != 2 or len(copies) != 1:
            return False
        return h_edge(self.construction, circle[0], circle[1], copies[0] - n)

    def coneighbors(self, u: int, v: int) -> tuple[int, ...]:
        key = canonical_pair(u, v)
        got = self._cone.get(key)
        if got is not None:
            return got
        c = self.construction
        n = c.n
        lo, hi = key
        if hi < n:  # two circle vertices: co-neighbors are link copies
            d = (hi - lo) % n
            hits = np.nonzero(
                (c.x[:, lo] == _offset_class(c, d))
                & (c.x[:, hi] == _offset_class(c, n - d))
            )[0]
            out = tuple(int(ell) + n for ell in hits)
        elif lo >= n:  # two link copies never share an edge
            out = ()
        else:
            out = link_neighbors(c, lo, hi - n)
        self._cone[key] = out
        return out

    def coneighbor_mask(self, u: int, v: int) -> int:
        key = canonical_pair(u, v)
        got = self._masks.get(key)
        if got is None:
            got = 0
            for w in self.coneighbors(u, v):
                got |= 1 << w
            self._masks[key] = got
        return got

    def codegree(self, u: int, v: int) -> int:
        return len(self.coneighbors(u, v))

    def degree(self, v: int) -> int | None:
        return None


# --- tournament hypergraph ---------------------------------------------------


def tournament_orientation(n: int, seed: int) -> np.ndarray:
    """Antisymmetric boolean matrix of a uniformly random tournament.

    out[i, j] is True iff i beats j; the coin matrix is drawn row by row and
    only its upper triangle is consumed, so the result is seed-stable.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    coin = _rng(seed).integers(0, 2, size=(n, n), dtype=np.uint8).astype(bool)
    out = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, k=1)
    out[iu] = coin[iu]
    out.T[iu] = ~coin[iu]
    return out


def cyclic_triangle_hypergraph(orientation: np.ndarray) -> ThreeGraph:
    """3-graph whose edges are the cyclic triangles of the given tournament."""
    n = orientation.shape[0]
    if orientation.shape != (n, n):
        raise ValueError("orientation must be square")
    triples = []
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            ks = np.arange(j + 1, n)
            if orientation[i, j]:
                cyc = orientation[j, j + 1 :] & orientation[j + 1 :, i]
            else:
                cyc = orientation[i, j + 1 :] & orientation[j + 1 :, j]
            for k in ks[cyc].tolist():
                triples.append((i, j, k))
    return make_threegraph(n, triples)


def erdos_hajnal(n: int, seed: int) -> ThreeGraph:
    """Erdős–Hajnal hypergraph of a uniformly random tournament on n vertices."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return cyclic_triangle_hypergraph(tournament_orientation(n, seed))


# --- density sampling --------------------------------------------------------


@dataclass(frozen=True)
class DensityReport:
    """Sampled induced edge densities of uniformly drawn vertex subsets.

    A lower-bound estimate only; sampling never proves uniform density.
    """

    gamma: float
    samples: int
    seed: int
    generator: str
    subset_size: int
    densities: tuple[float, ...]
    min_density: float
    mean_density: float

    def to_json_dict(self) -> dict:
        return {
            "kind": "density_report",
            "gamma": self.gamma,
            "samples": self.samples,
            "seed": self.seed,
            "generator": self.generator,
            "subset_size": self.subset_size,
            "min_density": self.min_density,
            "mean_density": self.mean_density,
            "densities": list(self.densities),
        }

    def to_csv(self) -> str:
        lines = ["sample_index,subset_size,density"]
        lines.extend(
            f"{i},{self.subset_size},{d!r}" for i, d in enumerate(self.densities)
        )
        return "\n".join(lines) + "\n"


def uniform_density_report(
    h: ThreeGraph, gamma: float, samples: int, seed: int
) -> DensityReport:
    """Sample `samples` subsets of size floor(gamma * n) and report induced densities."""
    if not 0 < gamma <= 1:
        raise ValueError("gamma must be in (0, 1]")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    size = int(gamma * h.n)
    if size < 3:
        raise ValueError(f"subset size {size} is too small to hold a triple")
    rng = _rng(seed)
    edges = np.array(h.edges, dtype=np.int64).reshape(-1, 3)
    total = math.comb(size, 3)
    densities = []
    for _ in range(samples):
        mask = np.zeros(h.n, dtype=bool)
        mask[rng.choice(h.n, size=size, replace=False)] = True
        inside = int(mask[edges].all(axis=1).sum()) if len(edges) else 0
        densities.append(inside / total)
    return DensityReport(
        gamma=float(gamma),
        samples=samples,
        seed=int(seed),
        generator=GENERATOR_NAME,
        subset_size=size,
        densities=tuple(densities),
        min_density=min(densities),
        mean_density=sum(densities) / samples,
    )


# --- certified zero-density instances ----------------------------------------


def random_zero_instance(
    n: int, m: int, seed: int, *, max_tries: int | None = None
) -> tuple[ThreeGraph, ZeroCertificate]:
    """Grow a 3-graph whose identity-order forced coloring stays consistent.

    Random triples are drawn and accepted only when their three forced pair
    colors agree with everything committed so far, until m edges are
    accepted or the retry cap is hit.  The returned certificate (identity
    enumeration plus committed colors) always validates.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if m < 0:
        raise ValueError("m must be non-negative")
    if max_tries is None:
        max_tries = 200 * max(m, 1)
    rng = _rng(seed)
    coloring: dict[Pair, str] = {}
    edges: set[tuple[int, int, int]] = set()
    tries = 0
    while len(edges) < m and tries < max_tries:
        tries += 1
        i, j, k = sorted(int(v) for v in rng.choice(n, size=3, replace=False))
        forced = (((i, j), RED), ((i, k), BLUE), ((j, k), GREEN))
        if all(coloring.get(pair, color) == color for pair, color in forced):
            coloring.update(forced)
            edges.add((i, j, k))
    if m >= 1 and not edges:
        raise RuntimeError("retry cap exhausted before any edge was accepted")
    return make_threegraph(n, edges), ZeroCertificate(tuple(range(n)), coloring)


def codegree_one_witness(h: ThreeGraph, cert: ZeroCertificate) -> tuple[Pair, int]:
    """A vertex pair of codegree at most 1, read off the certificate.

    Take the first two enumerated vertices; if no edge contains both, that
    pair has codegree 0.  Otherwise the second vertex together with the
    earliest co-neighbor forms a pair whose color is green under the
    certificate, so no further edge can contain it.
    """
    ok, reason = validate_certificate(h, cert)
    if not ok:
        raise ValueError(f"invalid certificate: {reason}")
    if h.n < 2:
        raise ValueError("needs at least two vertices")
    v1, v2 = cert.enumeration[0], cert.enumeration[1]
    ws = h.pair_coneighbors(v1, v2)
    if not ws:
        return canonical_pair(v1, v2), 0
    pos = {v: t for t, v in enumerate(cert.enumeration)}
    w = min(ws, key=lambda v: pos[v])
    return canonical_pair(v2, w), codegree(h, v2, w)


# --- construction spec files -------------------------------------------------

SPEC_KINDS = ("bipartite", "tripartite", "erdos_hajnal", "spade")


def parse_construction_spec(data: Mapping) -> dict:
    """Validate a construction spec dict and return its normalized parameters."""
    kind = data.get("kind")
    if kind not in SPEC_KINDS:
        raise ValueError(f"unknown construction kind {kind!r}")
    if "seed" not in data:
        raise ValueError("construction spec requires a seed")
    out = {"kind": kind, "seed": int(data["seed"])}
    if kind in ("bipartite", "tripartite"):
        for key in ("k", "q"):
            if key not in data:
                raise ValueError(f"{kind} spec requires {key!r}")
            out[key] = int(data[key])
    elif kind == "erdos_hajnal":
        if "n" not in data:
            raise ValueError("erdos_hajnal spec requires 'n'")
        out["n"] = int(data["n"])
    else:  # spade
        for key in ("n", "m"):
            if key not in data:
                raise ValueError(f"spade spec requires {key!r}")
            out[key] = int(data[key])
    return out


def host_from_spec(data: Mapping):
    """Build a containment host (implicit oracle or explicit graph) from a spec."""
    spec = parse_construction_spec(data)
    kind = spec["kind"]
    if kind == "bipartite":
        return BipartiteHost(build_bipartite(spec["k"], spec["q"], spec["seed"]))
    if kind == "tripartite":
        return build_tripartite(build_bipartite(spec["k"], spec["q"], spec["seed"]))
    if kind == "erdos_hajnal":
        return erdos_hajnal(spec["n"], spec["seed"])
    return random_zero_instance(spec["n"], spec["m"], spec["seed"])[0]


def graph_from_spec(data: Mapping) -> ThreeGraph:
    """Materialize the explicit 3-graph a spec describes."""
    spec = parse_construction_spec(data)
    if spec["kind"] == "bipartite":
        return realize(build_bipartite(spec["k"], spec["q"], spec["seed"]))
    host = host_from_spec(data)
    if isinstance(host, ThreeGraph):
        return host
    raise ValueError(f"cannot materialize spec kind {spec['kind']!r}")
