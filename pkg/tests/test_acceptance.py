"""Acceptance suite: one criterion per test, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete. Every expected value is exact (integers, zero tolerance).
"""

from __future__ import annotations

import random
from contextlib import contextmanager

from graphspan import (
    Rule,
    Target,
    complete,
    cycle,
    induce_opposite,
    is_opposite_lazy,
    kn_plus,
    min_length,
    pair_distance,
    path,
    shortest_covering_walk,
    span,
    witness_sweeps,
)
from graphspan.cli import _FIXTURES, verify_fixture_pair
from graphspan.families import ORDER5_SMALL_GRAPHS, find_minimal_direct_gap, is_isomorphic
from graphspan import Graph

from oracles import ALL_VARIANTS, corpus, oracle_span, random_track_pair, validate_pair


@contextmanager
def criterion(num: int, description: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL - {description}")
        raise
    print(f"ACCEPTANCE {num}: PASS - {description}")


def test_criterion_1_kn_plus_span_table():
    with criterion(1, "subdivided-K_n spans are (2,2,1) vertices / (2,1,1) edges for n=4..7"):
        for n in range(4, 8):
            g = kn_plus(n)
            vertex = [span(g, rule, Target.VERTICES).value for rule in Rule]
            edge = [span(g, rule, Target.EDGES).value for rule in Rule]
            assert vertex == [2, 2, 1], (n, vertex)
            assert edge == [2, 1, 1], (n, edge)


def test_criterion_2_strict_strong_edge_gap():
    with criterion(2, "strong edge span strictly exceeds max(direct, cartesian) on K_n^+ for n=4..7"):
        for n in range(4, 8):
            g = kn_plus(n)
            strong = span(g, Rule.TRADITIONAL, Target.EDGES).value
            direct = span(g, Rule.ACTIVE, Target.EDGES).value
            cartesian = span(g, Rule.LAZY, Target.EDGES).value
            assert strong > max(direct, cartesian), n


def test_criterion_3_minimality_search():
    with criterion(3, "first direct-span gap in (order, size) order is K_4^+; six order-5 references match"):
        hit = find_minimal_direct_gap()
        assert hit.n == 5 and hit.m == 7
        assert is_isomorphic(hit, kn_plus(4))
        values = []
        for edges, expected in ORDER5_SMALL_GRAPHS:
            g = Graph(5, edges)
            sv = span(g, Rule.ACTIVE, Target.VERTICES).value
            se = span(g, Rule.ACTIVE, Target.EDGES).value
            assert sv == se == expected
            values.append(sv)
        assert values == [1, 1, 2, 2, 1, 2]


def test_criterion_4_postman_lengths():
    with criterion(4, "shortest covering walk on K_n is (n^2-n)/2 odd / (n^2-2)/2 even for n=2..8"):
        for n in range(2, 9):
            want = (n * n - n) // 2 if n % 2 else (n * n - 2) // 2
            got = shortest_covering_walk(complete(n), "free_endpoints").length_edges
            assert got == want, (n, got, want)


def test_criterion_5_path_minimal_lengths():
    with criterion(5, "path minimal lengths: n even / n+1 odd (non-lazy) and 2n-1 (lazy) for n=2..8"):
        for n in range(2, 9):
            g = path(n)
            nonlazy = n if n % 2 == 0 else n + 1
            for rule in (Rule.TRADITIONAL, Rule.ACTIVE):
                for target in Target:
                    rep = min_length(g, rule, target)
                    assert not rep.capped and rep.length == nonlazy, (n, rule, target)
            for target in Target:
                rep = min_length(g, Rule.LAZY, target)
                assert not rep.capped and rep.length == 2 * n - 1, (n, target)


def test_criterion_6_cycle_minimal_lengths():
    with criterion(6, "cycle minimal lengths: (n, n+1, 2n-1, 2n+1) for n=3..7"):
        for n in range(3, 8):
            g = cycle(n)
            for rule in (Rule.TRADITIONAL, Rule.ACTIVE):
                assert min_length(g, rule, Target.VERTICES).length == n, (n, rule)
                assert min_length(g, rule, Target.EDGES).length == n + 1, (n, rule)
            assert min_length(g, Rule.LAZY, Target.VERTICES).length == 2 * n - 1, n
            assert min_length(g, Rule.LAZY, Target.EDGES).length == 2 * n + 1, n


def test_criterion_7_complete_minimal_lengths():
    with criterion(7, "complete-graph minimal lengths for n=3,4,5 inside the default budget"):
        for n in (3, 4, 5):
            g = complete(n)
            direct_edges = (n * n - n + 2) // 2 if n % 2 else n * n // 2
            lazy_edges = n * n - n + 1 if n % 2 else n * n - 1
            rep = min_length(g, Rule.ACTIVE, Target.EDGES)
            assert not rep.capped and rep.length == direct_edges, n
            rep = min_length(g, Rule.LAZY, Target.EDGES)
            assert not rep.capped and rep.length == lazy_edges, n
            rep = min_length(g, Rule.LAZY, Target.VERTICES)
            assert not rep.capped and rep.length == 2 * n - 1, n


def test_criterion_8_fixture_validation():
    with criterion(8, "the three shipped walk-table pairs validate with distances 2, 1, 1"):
        assert [fix["distance"] for fix in _FIXTURES] == [2, 1, 1]
        for fix in _FIXTURES:
            assert verify_fixture_pair(fix) == [], fix["name"]


def test_criterion_9a_span_chain_bound():
    with criterion(9, "(a) edge span <= vertex span <= radius per rule on all connected graphs of order <= 5"):
        for g in corpus(5):
            for rule in Rule:
                e = span(g, rule, Target.EDGES).value
                v = span(g, rule, Target.VERTICES).value
                assert e <= v <= g.radius


def test_criterion_9b_traditional_dominates():
    with criterion(9, "(b) traditional span >= max(active, lazy) on the same corpus"):
        for g in corpus(5):
            for target in Target:
                t = span(g, Rule.TRADITIONAL, target).value
                assert t >= span(g, Rule.ACTIVE, target).value
                assert t >= span(g, Rule.LAZY, target).value


def test_criterion_9c_bruteforce_span_oracle():
    with criterion(9, "(c) span values equal the bounded walk-pair oracle on all connected graphs of order <= 4"):
        for g in corpus(4):
            for rule, target in ALL_VARIANTS:
                assert span(g, rule, target).value == oracle_span(g, rule, target)


def test_criterion_9d_induced_pair_property():
    with criterion(9, "(d) induced opposite pairs lose at most one unit of distance on >= 1000 random track pairs"):
        rng = random.Random(1234)
        graphs = [g for g in corpus(5) if g.n >= 2]
        count = 0
        while count < 1000:
            g = graphs[count % len(graphs)]
            f, h = random_track_pair(g, rng, rng.randrange(2, 3 * g.n))
            fi, hi = induce_opposite(f, h)
            assert pair_distance(g, fi, hi) >= pair_distance(g, f, h) - 1
            assert is_opposite_lazy(g, fi, hi)
            count += 1


def test_criterion_9e_witnesses_revalidate():
    with criterion(9, "(e) every span and minlen witness revalidates through the walk model"):
        for g in corpus(5):
            for rule, target in ALL_VARIANTS:
                value = span(g, rule, target).value
                f, h = witness_sweeps(g, rule, target)
                assert validate_pair(g, rule, target, f, h, value) == []
        for g in corpus(4):
            for rule, target in ALL_VARIANTS:
                rep = min_length(g, rule, target)
                f, h = rep.witness
                assert f.l == rep.length
                assert validate_pair(g, rule, target, f, h, rep.span_value) == []
