import itertools
import random

import pytest

from helpers import oracle_count_embeddings, random_threegraph
from turanzero.constructions import BipartiteHost, build_bipartite, realize
from turanzero.containment import (
    BUDGET_EXHAUSTED,
    FOUND,
    NONE,
    ExplicitHost,
    contains,
    count_embeddings,
    validate_embedding,
)
from turanzero.core import make_threegraph

K4_MINUS = [(0, 1, 2), (0, 1, 3), (0, 2, 3)]


def complete3(n):
    return make_threegraph(n, itertools.combinations(range(n), 3))


class TestContains:
    def test_complete_host_contains_k4_minus(self):
        r = contains(complete3(5), make_threegraph(4, K4_MINUS))
        assert r.status == FOUND
        assert validate_embedding(complete3(5), make_threegraph(4, K4_MINUS), r.embedding)

    def test_self_containment_is_identity(self):
        h = make_threegraph(4, K4_MINUS)
        r = contains(h, h)
        assert r.status == FOUND
        assert r.embedding.mapping == {0: 0, 1: 1, 2: 2, 3: 3}

    def test_bipartite_construction_avoids_k4_minus(self):
        # deterministic geometric freeness, any seed; small q keeps it quick
        host = BipartiteHost(build_bipartite(4, 2, seed=99))
        r = contains(host, make_threegraph(4, K4_MINUS))
        assert r.status == NONE

    def test_realized_bipartite_host_is_also_free(self):
        h = realize(build_bipartite(4, 5, seed=1))  # explicit 162-vertex host
        r = contains(h, make_threegraph(4, K4_MINUS))
        assert r.status == NONE

    def test_edgeless_host(self):
        r = contains(make_threegraph(6), make_threegraph(3, [(0, 1, 2)]))
        assert r.status == NONE

    def test_budget_exhaustion_is_reported(self):
        r = contains(complete3(7), complete3(6), budget=3)
        assert r.status == BUDGET_EXHAUSTED
        assert r.embedding is None

    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError, match="budget"):
            contains(complete3(4), complete3(3), budget=0)

    def test_empty_pattern_rejected(self):
        with pytest.raises(ValueError, match="at least one vertex"):
            contains(complete3(4), make_threegraph(0))

    def test_found_embedding_is_deterministic(self):
        rng = random.Random(1)
        for _ in range(20):
            host = random_threegraph(rng, 7, 0.5)
            pattern = random_threegraph(rng, 4, 0.5)
            r1 = contains(host, pattern)
            r2 = contains(host, pattern)
            assert r1.status == r2.status
            if r1.status == FOUND:
                assert r1.embedding == r2.embedding


class TestCountEmbeddings:
    def test_single_edge_in_complete_k4(self):
        assert count_embeddings(complete3(4), make_threegraph(3, [(0, 1, 2)]), 10**6) == 24

    def test_edgeless_host_counts_zero(self):
        assert count_embeddings(make_threegraph(5), make_threegraph(3, [(0, 1, 2)]), 10) == 0

    def test_single_edge_in_itself(self):
        e = make_threegraph(3, [(0, 1, 2)])
        assert count_embeddings(e, e, 10**6) == 6

    def test_saturates_at_limit(self):
        assert count_embeddings(complete3(5), make_threegraph(3, [(0, 1, 2)]), 7) == 7

    def test_edgeless_pattern_counts_injections(self):
        host = make_threegraph(5, [(0, 1, 2)])
        assert count_embeddings(host, make_threegraph(2), 10**6) == 20


class TestOracleAgreement:
    def test_matches_exhaustive_enumeration(self):
        rng = random.Random(31)
        for _ in range(80):
            host = random_threegraph(rng, rng.randint(3, 6), rng.uniform(0.1, 0.8))
            pattern = random_threegraph(rng, rng.randint(1, 4), rng.uniform(0.1, 0.8))
            expected = oracle_count_embeddings(host, pattern)
            assert count_embeddings(host, pattern, 10**9) == expected
            r = contains(host, pattern)
            assert (r.status == FOUND) == (expected > 0)
            if r.status == FOUND:
                assert validate_embedding(host, pattern, r.embedding)

    def test_monotone_under_pattern_edge_removal(self):
        rng = random.Random(13)
        found = 0
        while found < 20:
            host = random_threegraph(rng, 7, 0.6)
            pattern = random_threegraph(rng, 4, 0.6)
            if not pattern.edges:
                continue
            if contains(host, pattern).status != FOUND:
                continue
            found += 1
            smaller_edges = list(pattern.edges)
            smaller_edges.remove(rng.choice(smaller_edges))
            smaller = make_threegraph(pattern.n, smaller_edges)
            assert contains(host, smaller).status == FOUND


class TestHosts:
    def test_implicit_and_explicit_hosts_agree(self):
        rng = random.Random(17)
        c = build_bipartite(1, 2, seed=5)  # n = 9, 18 host vertices
        implicit = BipartiteHost(c)
        explicit = ExplicitHost(realize(c))
        assert implicit.vertex_count == explicit.vertex_count
        for u in range(implicit.vertex_count):
            for v in range(u + 1, implicit.vertex_count):
                assert implicit.coneighbors(u, v) == explicit.coneighbors(u, v)
                assert implicit.coneighbor_mask(u, v) == explicit.coneighbor_mask(u, v)
        for _ in range(40):
            pattern = random_threegraph(rng, rng.randint(3, 4), 0.5)
            a = contains(implicit, pattern)
            b = contains(explicit, pattern)
            assert a.status == b.status
            assert a.embedding == b.embedding

    def test_explicit_host_edge_queries(self):
        h = make_threegraph(4, K4_MINUS)
        host = ExplicitHost(h)
        assert host.has_edge(2, 0, 1)
        assert not host.has_edge(1, 2, 3)
        assert host.coneighbors(0, 1) == (2, 3)
        assert host.coneighbor_mask(0, 1) == (1 << 2) | (1 << 3)
        assert host.codegree(2, 3) == 1
        assert host.degree(0) == 3

    def test_validate_embedding_rejects_bad_maps(self):
        h = make_threegraph(4, K4_MINUS)
        e = make_threegraph(3, [(0, 1, 2)])
        from turanzero.containment import Embedding

        assert validate_embedding(h, e, Embedding({0: 0, 1: 1, 2: 2}))
        assert not validate_embedding(h, e, Embedding({0: 1, 1: 2, 2: 3}))  # not an edge
        assert not validate_embedding(h, e, Embedding({0: 0, 1: 0, 2: 2}))  # not injective
        assert not validate_embedding(h, e, Embedding({0: 0, 1: 1}))  # missing vertex
