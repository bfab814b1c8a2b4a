"""Span computation via distance-thresholded product graphs.

The maximal safety distance for a movement rule and coverage target equals
the largest threshold k at which some connected component of the product
graph on ordered vertex pairs at distance >= k projects onto the full target
set for both players. Within one component, doubling every product edge
yields an Eulerian circuit whose coordinate projections are valid witness
walks, and conversely a valid walk pair never leaves its component, so the
component test is exact; an independent brute-force oracle over walk pairs
confirms this on all small graphs in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import ThresholdOutOfRange
from .graph import Edge, Graph, _norm
from .postman import euler_walk_multigraph
from .walks import Walk


class Rule(Enum):
    """Movement rule, named by the matching graph product."""

    TRADITIONAL = "traditional"  # strong product: each player moves or stays
    ACTIVE = "active"            # tensor product: both players move
    LAZY = "lazy"                # Cartesian product: exactly one player moves

    @property
    def product_name(self) -> str:
        return {"traditional": "strong", "active": "direct", "lazy": "cartesian"}[self.value]

    @classmethod
    def from_name(cls, name: str) -> "Rule":
        aliases = {
            "traditional": cls.TRADITIONAL, "strong": cls.TRADITIONAL,
            "active": cls.ACTIVE, "direct": cls.ACTIVE, "tensor": cls.ACTIVE,
            "lazy": cls.LAZY, "cartesian": cls.LAZY,
        }
        try:
            return aliases[name.lower()]
        except KeyError:
            raise ValueError(f"unknown rule {name!r}") from None


class Target(Enum):
    VERTICES = "vertices"
    EDGES = "edges"


RULES = (Rule.TRADITIONAL, Rule.ACTIVE, Rule.LAZY)
TARGETS = (Target.VERTICES, Target.EDGES)

State = tuple[int, int]


def _moves(g: Graph, rule: Rule, u: int, v: int):
    """Successor pairs of (u, v) under the rule, before threshold filtering."""
    if rule is Rule.ACTIVE:
        for x in g.adj[u]:
            for y in g.adj[v]:
                yield x, y
    elif rule is Rule.LAZY:
        for x in g.adj[u]:
            yield x, v
        for y in g.adj[v]:
            yield u, y
    else:
        # both-stay is omitted: it covers nothing and never affects
        # component structure
        for x in (*g.adj[u], u):
            for y in (*g.adj[v], v):
                if (x, y) != (u, v):
                    yield x, y


@dataclass(frozen=True)
class ProductGraph:
    """Thresholded product graph on ordered vertex pairs.

    Component ids are the lowest flattened state index (u*n + v) they contain.
    """

    base: Graph
    rule: Rule
    k: int
    states: tuple[State, ...]
    product_edges: tuple[tuple[State, State], ...]
    components: tuple[tuple[State, ...], ...]

    def component_id(self, comp: tuple[State, ...]) -> int:
        u, v = comp[0]
        return u * self.base.n + v

    def component_edges(self, comp: tuple[State, ...]):
        members = set(comp)
        return [e for e in self.product_edges if e[0] in members]


def build_product(g: Graph, rule: Rule, k: int) -> ProductGraph:
    """States at pair distance >= k joined by rule-conforming moves."""
    if not 0 <= k <= g.radius:
        raise ThresholdOutOfRange(f"threshold {k} outside 0..{g.radius}")
    dist = g.dist
    states = [(u, v) for u in range(g.n) for v in range(g.n) if dist[u][v] >= k]
    state_set = set(states)
    adjacency: dict[State, list[State]] = {s: [] for s in states}
    edges = []
    for s in states:
        for t in _moves(g, rule, *s):
            if t in state_set and s < t:
                edges.append((s, t))
                adjacency[s].append(t)
                adjacency[t].append(s)

    components = []
    seen: set[State] = set()
    for s in states:  # ascending order fixes component ids
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        components.append(tuple(sorted(comp)))
    return ProductGraph(
        base=g,
        rule=rule,
        k=k,
        states=tuple(states),
        product_edges=tuple(edges),
        components=tuple(components),
    )


def _component_covers(pg: ProductGraph, comp: tuple[State, ...], target: Target) -> bool:
    g = pg.base
    if target is Target.VERTICES:
        first = {u for u, _ in comp}
        second = {v for _, v in comp}
        return len(first) == g.n and len(second) == g.n
    realized_f: set[Edge] = set()
    realized_g: set[Edge] = set()
    for (u, v), (x, y) in pg.component_edges(comp):
        if u != x:
            realized_f.add(_norm(u, x))
        if v != y:
            realized_g.add(_norm(v, y))
    return len(realized_f) == g.m and len(realized_g) == g.m


def _feasible_component(pg: ProductGraph, target: Target) -> Optional[tuple[State, ...]]:
    for comp in pg.components:
        if _component_covers(pg, comp, target):
            return comp
    return None


def feasible(g: Graph, rule: Rule, target: Target, k: int) -> bool:
    """True iff a covering walk pair at distance >= k exists under the rule."""
    return _feasible_component(build_product(g, rule, k), target) is not None


@dataclass(frozen=True)
class SpanReport:
    rule: Rule
    target: Target
    value: int
    witness_component: int
    witness: Optional[tuple[Walk, Walk]] = None


def span(g: Graph, rule: Rule, target: Target, with_witness: bool = False) -> SpanReport:
    """Maximal safety distance for the rule/target.

    Feasibility is monotone decreasing in the threshold, and every span is
    bounded by the radius, so the first feasible k scanning down from the
    radius is the exact value. The threshold-0 product is always feasible.
    """
    for k in range(g.radius, -1, -1):
        pg = build_product(g, rule, k)
        comp = _feasible_component(pg, target)
        if comp is not None:
            return SpanReport(
                rule=rule,
                target=target,
                value=k,
                witness_component=pg.component_id(comp),
                witness=_component_witness(pg, comp) if with_witness else None,
            )
    raise AssertionError("threshold 0 must be feasible for a connected graph")


def _component_witness(pg: ProductGraph, comp: tuple[State, ...]) -> tuple[Walk, Walk]:
    """Project an Eulerian circuit of the doubled component onto the players.

    The circuit visits every state and traverses every product edge, so both
    projections cover whatever the component realizes while the pair distance
    stays at the threshold.
    """
    if len(comp) == 1:
        (u, v), = comp
        return Walk((u,)), Walk((v,))
    n = pg.base.n
    index = {(u, v): u * n + v for (u, v) in comp}
    nbrs: dict[int, set[int]] = {index[s]: set() for s in comp}
    counts: dict[tuple[int, int], int] = {}
    for a, b in pg.component_edges(comp):
        ia, ib = index[a], index[b]
        nbrs[ia].add(ib)
        nbrs[ib].add(ia)
        counts[_norm(ia, ib)] = 2
    adj = {x: sorted(ys) for x, ys in nbrs.items()}
    start = min(adj)
    seq = euler_walk_multigraph(adj, counts, start)
    f = Walk(tuple(s // n for s in seq))
    h = Walk(tuple(s % n for s in seq))
    return f, h


def witness_sweeps(g: Graph, rule: Rule, target: Target) -> tuple[Walk, Walk]:
    """Walk pair achieving the span value (every product edge of the witness
    component doubled, Eulerian circuit extracted, coordinates projected)."""
    witness = span(g, rule, target, with_witness=True).witness
    assert witness is not None
    return witness


def all_spans(g: Graph) -> tuple[SpanReport, ...]:
    """The six span reports in fixed (rule, target) order."""
    return tuple(span(g, rule, target) for rule in RULES for target in TARGETS)
