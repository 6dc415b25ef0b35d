"""Polynomial-time checkers for the weight conditions and the decision pipeline.

The stages must run in order: each checker is only sound and complete when
every earlier stage passed, and :func:`decide_inheritance` enforces this.
Every failure comes with a :class:`~pmin_inherit.violations.Violation` that
:func:`pmin_inherit.verify.reverify` can confirm on its own.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from .graph import (
    WeightedGraph,
    component_of,
    edge_key,
    fundamental_cycle,
    prim_mst,
    shortest_path,
)
from .violations import Violation

INHERITS = "INHERITS"
VIOLATES = "VIOLATES"


def _edge(g: WeightedGraph, u: int, v: int) -> list[int]:
    return [*edge_key(u, v), g.weight(u, v)]


# -- star ------------------------------------------------------------------


def check_star(g: WeightedGraph) -> Optional[Violation]:
    """Every vertex may carry at most one incident edge lighter than its heaviest.

    One pass per vertex with two registers: the heaviest weight seen (plus
    up to two edges attaining it) and the single lighter edge allowed.
    """
    for c in g.vertices:
        if g.degree(c) < 3:
            continue
        top_w = 0
        top: list[int] = []
        light: Optional[int] = None
        for x in g.neighbors(c):
            w = g.weight(c, x)
            if w == top_w:
                if len(top) < 2:
                    top.append(x)
                continue
            if w > top_w:
                # the old maximum edges all become lighter edges
                demoted = top if light is None else [light, *top]
                if len(demoted) >= 2:
                    trio = (demoted[0], demoted[1], x)
                    return _star_violation(g, c, trio)
                light = demoted[0] if demoted else None
                top_w, top = w, [x]
                continue
            if light is not None:
                return _star_violation(g, c, (light, x, top[0]))
            light = x
    return None


def _star_violation(g: WeightedGraph, c: int, trio) -> Violation:
    return Violation("star", {"center": c, "edges": [_edge(g, c, x) for x in trio]})


# -- path ------------------------------------------------------------------


def _tree_path_violation(g: WeightedGraph, tree) -> Optional[Violation]:
    """Root the tree at every vertex; along each root path flag the first
    strict increase and report the first strict decrease after it."""
    adj: dict[int, list[int]] = {v: [] for v in tree.vertices}
    for u, v, _ in tree.edges:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj.values():
        nbrs.sort()
    for root in tree.vertices:
        # state: (last weight, flag position i, peak position j, peak weight)
        state = {root: (None, None, None, None)}
        parent = {root: None}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            last, i, j, peak = state[u]
            for v in adj[u]:
                if v in parent:
                    continue
                w = g.weight(u, v)
                d = depth[u] + 1  # 1-based index of edge (u, v) on the root path
                parent[v], depth[v] = u, d
                if i is None:
                    if last is not None and w > last:
                        state[v] = (w, d - 1, d, w)
                    else:
                        state[v] = (w, None, None, None)
                elif w < last:
                    path = [v]
                    while path[-1] != root:
                        path.append(parent[path[-1]])
                    path.reverse()
                    weights = [g.weight(path[t], path[t + 1]) for t in range(len(path) - 1)]
                    return Violation("path", {"path": path, "weights": weights, "ijk": [i, j, d]})
                elif w > peak:
                    state[v] = (w, i, d, w)
                else:
                    state[v] = (w, i, j, peak)
                queue.append(v)
    return None


def _weak_cycle_pattern(weights: list[int]) -> bool:
    """At most two edges below the maximum, and if two, consecutive."""
    top = max(weights)
    low = [k for k, w in enumerate(weights) if w < top]
    if len(low) <= 1:
        return True
    if len(low) > 2:
        return False
    a, b = low
    return b - a == 1 or (a == 0 and b == len(weights) - 1)


def check_path(g: WeightedGraph) -> Optional[Violation]:
    """Path condition via one minimum spanning tree per component.

    The tree's own paths are scanned directly; the remaining paths of the
    graph are covered by the weak cycle pattern on each fundamental cycle.
    """
    trees = prim_mst(g)
    for tree in trees:
        found = _tree_path_violation(g, tree)
        if found is not None:
            return found
    for tree in trees:
        members = set(tree.vertices)
        for u, v, _ in g.edges:
            if u not in members or tree.contains_edge(u, v):
                continue
            cyc = fundamental_cycle(tree, (u, v))
            vs = cyc.vertices
            weights = [g.weight(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]
            if not _weak_cycle_pattern(weights):
                return Violation("fundamental_cycle", {"cycle": list(vs), "weights": weights})
    return None


# -- adjacent cycles, first part -------------------------------------------


def check_adjacent_part1(g: WeightedGraph) -> Optional[Violation]:
    """Search for two cycles sharing two light edges ``{a, c}``, ``{c, b}``.

    For each such pair a shortest heavy return path ``a -> b`` avoiding
    ``c`` closes a cycle; a second heavy return path that avoids one of its
    vertices closes the other.  Assumes Star and Path hold.
    """
    everyone = set(g.vertices)
    for c in g.vertices:
        nbrs = g.neighbors(c)
        for x, a in enumerate(nbrs):
            for b in nbrs[x + 1 :]:
                thr = max(g.weight(c, a), g.weight(c, b))
                allowed = everyone - {c}
                gamma = shortest_path(g, a, b, allowed, above=thr)
                if gamma is None or len(gamma.vertices) < 3:
                    continue
                path = list(gamma.vertices)
                interior = path[1:-1]
                hubs = [p for p, v in enumerate(path) if 0 < p < len(path) - 1 and g.has_edge(c, v)]
                if not hubs:
                    for i in interior:
                        other = shortest_path(g, a, b, allowed - {i}, above=thr)
                        if other is not None:
                            return _part1_violation(g, c, path, list(other.vertices))
                    continue
                # re-center on the lowest-numbered chord endpoint
                i = min(path[p] for p in hubs)
                pos = path.index(i)
                spokes = [p for p in range(len(path)) if g.has_edge(c, path[p])]
                k = max(p for p in spokes if p < pos)
                j = min(p for p in spokes if p > pos)
                arc = path[k : j + 1]
                other = shortest_path(g, arc[0], arc[-1], allowed - {i}, above=thr)
                if other is not None:
                    return _part1_violation(g, c, arc, list(other.vertices))
    return None


def _part1_violation(g, c, arc, other) -> Violation:
    cycle, other_cycle = [c, *arc], [c, *other]
    return Violation(
        "adjacent_cycles_part1",
        {
            "cycle": cycle,
            "other_cycle": other_cycle,
            "center": c,
            "shared": [_edge(g, c, arc[0]), _edge(g, c, arc[-1])],
        },
    )


# -- adjacent cycles, weak second part -------------------------------------


def check_adjacent_part2_weak(g: WeightedGraph) -> Optional[Violation]:
    """For each edge ``e1``, two return paths around it (the second avoiding an
    interior vertex of the first) must not be made of edges all heavier than
    ``e1``.  Assumes Star, Path and the first part hold."""
    everyone = set(g.vertices)
    for u, v, w1 in g.edges:
        gamma = shortest_path(g, u, v, skip_edge=(u, v))
        if gamma is None:
            continue
        path = list(gamma.vertices)
        heavy = all(g.weight(path[t], path[t + 1]) > w1 for t in range(len(path) - 1))
        for i in path[1:-1]:
            other = shortest_path(g, u, v, everyone - {i}, skip_edge=(u, v))
            if other is None:
                continue
            ov = list(other.vertices)
            if heavy and all(g.weight(ov[t], ov[t + 1]) > w1 for t in range(len(ov) - 1)):
                return Violation(
                    "adjacent_cycles_part2",
                    {
                        "cycle": path,
                        "other_cycle": ov,
                        "shared_edge": [u, v, w1],
                    },
                )
    return None


# -- pan -------------------------------------------------------------------


def _component_floor(g: WeightedGraph) -> dict[int, tuple[int, tuple[int, int]]]:
    """Lightest edge weight (and the first such edge) of each vertex's component."""
    out: dict[int, tuple[int, tuple[int, int]]] = {}
    for s in g.vertices:
        if s in out:
            continue
        comp = component_of(g, s)
        members = set(comp)
        inner = [(w, (a, b)) for a, b, w in g.edges if a in members]
        best = min(inner) if inner else (0, (s, s))
        for x in comp:
            out[x] = best
    return out


def _path_to_edge(g: WeightedGraph, cycle: set, edge: tuple[int, int]) -> Optional[list[int]]:
    """Elementary path leaving the cycle once and ending with ``edge``."""
    x, y = edge
    if x in cycle and y in cycle:
        return None
    if x in cycle or y in cycle:
        return [x, y] if x in cycle else [y, x]
    parent = {s: None for s in sorted(cycle)}
    queue = deque(sorted(cycle))
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v in parent or v in cycle:
                continue
            parent[v] = u
            if v in (x, y):
                out = [v]
                while parent[out[-1]] is not None:
                    out.append(parent[out[-1]])
                out.reverse()
                out.append(y if v == x else x)
                return out
            queue.append(v)
    return None


def _lightest_edge_off(g, members: set, cycle: set, sigma: int):
    for a, b, w in g.edges:
        if w == sigma and a in members and not (a in cycle and b in cycle):
            return (a, b)
    return None


def check_pan(g: WeightedGraph) -> Optional[Violation]:
    """Two equal edges ``{a, c}``, ``{c, b}`` closed by a return path of edges
    no lighter than them must weigh either the cycle maximum or the
    component minimum.  Assumes all earlier stages pass."""
    floor = _component_floor(g)
    everyone = set(g.vertices)
    for c in g.vertices:
        nbrs = g.neighbors(c)
        for x, a in enumerate(nbrs):
            w1 = g.weight(c, a)
            for b in nbrs[x + 1 :]:
                if g.weight(c, b) != w1:
                    continue
                gamma = shortest_path(g, a, b, everyone - {c}, at_least=w1)
                if gamma is None or len(gamma.vertices) < 3:
                    continue
                path = list(gamma.vertices)
                top = max(g.weight(path[t], path[t + 1]) for t in range(len(path) - 1))
                sigma, _ = floor[c]
                if w1 == top or w1 == sigma:
                    continue
                cycle = [a, c, *reversed(path[1:])]
                on = set(cycle)
                members = set(component_of(g, c))
                light = _lightest_edge_off(g, members, on, sigma)
                details = {"cycle": cycle, "center": c, "sigma": sigma}
                if light is not None:
                    details["sigma_edge"] = _edge(g, *light)
                    tail = _path_to_edge(g, on, light)
                    if tail is not None:
                        details["path"] = tail
                return Violation("pan", details)
    return None


# -- pipeline --------------------------------------------------------------

STAGES: tuple[tuple[str, Callable[[WeightedGraph], Optional[Violation]]], ...] = (
    ("star", check_star),
    ("path", check_path),
    ("adjacent1", check_adjacent_part1),
    ("adjacent2weak", check_adjacent_part2_weak),
    ("pan", check_pan),
)


@dataclass(frozen=True)
class StageResult:
    name: str
    status: str  # pass | fail | skipped
    millis: Optional[float] = None


@dataclass(frozen=True)
class DecisionReport:
    verdict: str
    stages: tuple[StageResult, ...]
    violation: Optional[Violation] = None
    n: int = 0
    m: int = 0
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def inherits(self) -> bool:
        return self.verdict == INHERITS

    @property
    def failed_stage(self) -> Optional[str]:
        return next((s.name for s in self.stages if s.status == "fail"), None)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "stages": [
                {"name": s.name, "status": s.status, "millis": s.millis} for s in self.stages
            ],
            "violation": None if self.violation is None else self.violation.to_dict(),
            "graph": {"n": self.n, "m": self.m},
        }


def decide_inheritance(g: WeightedGraph, *, timings: bool = False) -> DecisionReport:
    """Run the stages in order, stopping at the first failure.

    Stage times are recorded only when ``timings`` is set, so that reports
    for the same graph are identical from run to run.
    """
    results = []
    violation = None
    for name, check in STAGES:
        if violation is not None:
            results.append(StageResult(name, "skipped"))
            continue
        start = time.perf_counter()
        found = check(g)
        millis = round((time.perf_counter() - start) * 1000, 3) if timings else None
        results.append(StageResult(name, "pass" if found is None else "fail", millis))
        violation = found
    return DecisionReport(
        verdict=INHERITS if violation is None else VIOLATES,
        stages=tuple(results),
        violation=violation,
        n=g.n,
        m=g.m,
    )
