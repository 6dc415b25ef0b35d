"""Independent re-verification of violation certificates.

Nothing here calls the polynomial checkers.  Each certificate is checked
against the graph from scratch: listed edges must exist with the listed
weights, cycles must be simple, paths elementary, and the inequality the tag
stands for must actually fail on the object described.
"""

from __future__ import annotations

from typing import Sequence, Union

from .conditions import (
    adjacency_premise,
    common_nonmax_edges,
    cycle_condition_ok,
    cycle_info,
    intermediary_cycle_ok,
    pan_status,
    path_violation_indices,
    second_part_ok,
    star_triple_ok,
    weak_cycle_ok,
)
from .graph import WeightedGraph, edge_key, is_elementary_path, is_simple_cycle
from .pmin import Game, pmin_partition
from .violations import Violation


def _edges_match(g: WeightedGraph, edges) -> bool:
    for u, v, w in edges:
        if not (1 <= u <= g.n and 1 <= v <= g.n) or u == v:
            return False
        if not g.has_edge(u, v) or g.weight(u, v) != w:
            return False
    return True


def _path_weights(g: WeightedGraph, vs: Sequence[int]) -> list[int]:
    return [g.weight(vs[k], vs[k + 1]) for k in range(len(vs) - 1)]


def _cycle_weights(g: WeightedGraph, vs: Sequence[int]) -> list[int]:
    m = len(vs)
    return [g.weight(vs[k], vs[(k + 1) % m]) for k in range(m)]


def _star(g, d) -> bool:
    c = d["center"]
    edges = d["edges"]
    if len(edges) != 3 or not _edges_match(g, edges):
        return False
    others = set()
    for u, v, _ in edges:
        if c not in (u, v):
            return False
        others.add(v if u == c else u)
    if len(others) != 3:
        return False
    return not star_triple_ok([w for *_, w in edges])


def _path(g, d) -> bool:
    vs = d["path"]
    if len(vs) < 4 or not is_elementary_path(g, vs):
        return False
    ws = _path_weights(g, vs)
    if "weights" in d and list(d["weights"]) != ws:
        return False
    i, j, k = d["ijk"]
    if not 1 <= i < j < k <= len(ws):
        return False
    # the stated triple itself must break the inequality
    return ws[j - 1] > max(ws[i - 1], ws[k - 1]) and path_violation_indices(ws) is not None


def _cycle_tag(predicate):
    def check(g, d) -> bool:
        vs = d["cycle"]
        if not is_simple_cycle(g, vs):
            return False
        if "weights" in d and list(d["weights"]) != _cycle_weights(g, vs):
            return False
        return not predicate(cycle_info(g, vs))

    return check


def _pan(weak: bool):
    def check(g, d) -> bool:
        vs = d["cycle"]
        path = d["path"]
        if not is_simple_cycle(g, vs) or len(path) < 2 or not is_elementary_path(g, path):
            return False
        on_cycle = set(vs)
        if path[0] not in on_cycle or any(x in on_cycle for x in path[1:]):
            return False
        low = min(_path_weights(g, path))
        weak_ok, pan_ok = pan_status(g, cycle_info(g, vs), path[0], low)
        return not (weak_ok if weak else pan_ok)

    return check


def _pair(g, d):
    vs, ws = d["cycle"], d["other_cycle"]
    if not (is_simple_cycle(g, vs) and is_simple_cycle(g, ws)):
        return None
    c, o = cycle_info(g, vs), cycle_info(g, ws)
    if not adjacency_premise(c, o):
        return None
    return c, o


def _adjacent_part1(g, d) -> bool:
    pair = _pair(g, d)
    return pair is not None and len(common_nonmax_edges(*pair)) >= 2


def _adjacent_part2(weak: bool):
    def check(g, d) -> bool:
        pair = _pair(g, d)
        if pair is None:
            return False
        common = common_nonmax_edges(*pair)
        if len(common) != 1:
            return False
        e1 = common[0]
        if "shared_edge" in d and edge_key(*d["shared_edge"][:2]) != e1:
            return False
        return not second_part_ok(*pair, e1, weak=weak)

    return check


_CHECKS = {
    "star": _star,
    "path": _path,
    # a fundamental cycle breaking the weak cycle pattern breaks the path condition
    "fundamental_cycle": _cycle_tag(weak_cycle_ok),
    "weak_cycle": _cycle_tag(weak_cycle_ok),
    "intermediary_cycle": _cycle_tag(intermediary_cycle_ok),
    "cycle": _cycle_tag(cycle_condition_ok),
    "pan": _pan(weak=False),
    "weak_pan": _pan(weak=True),
    "adjacent_cycles_part1": _adjacent_part1,
    # a weak-second-part failure is also a failure of the full second part
    "adjacent_cycles_part2": _adjacent_part2(weak=False),
    "weak_second_part": _adjacent_part2(weak=True),
}


def reverify(g: WeightedGraph, violation: Union[Violation, dict]) -> bool:
    """True when the certificate is a genuine violation on ``g``."""
    if isinstance(violation, dict):
        violation = Violation.from_dict(violation)
    check = _CHECKS.get(violation.tag)
    if check is None:
        raise ValueError(f"unknown violation tag {violation.tag!r}")
    try:
        return bool(check(g, violation.details))
    except (KeyError, TypeError, ValueError, IndexError):
        return False


def _connected(g: WeightedGraph, vs) -> bool:
    vs = set(vs)
    if not vs:
        return False
    return len(_components(g, vs)) == 1


def _components(g: WeightedGraph, vs: set) -> list[set]:
    """Plain components of the induced subgraph, by depth-first search."""
    seen: set = set()
    out = []
    for s in sorted(vs):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for x in g.neighbors(u):
                if x in vs and x not in comp:
                    comp.add(x)
                    stack.append(x)
        seen |= comp
        out.append(comp)
    return out


def _unanimity_bar(g: WeightedGraph, carrier: frozenset, a) -> int:
    if not a:
        return 0
    return sum(1 for block in pmin_partition(g, a) if carrier <= set(block))


def reverify_convexity(g: WeightedGraph, witness) -> bool:
    """Recompute the supermodularity gap of a convexity witness from scratch."""
    a, b = set(witness.a), set(witness.b)
    if witness.carrier is None:
        raise ValueError("witness lacks the unanimity carrier")
    if not (_connected(g, a) and _connected(g, b) and _connected(g, a & b)):
        return False
    s = frozenset(witness.carrier)
    d = (
        _unanimity_bar(g, s, a | b)
        + _unanimity_bar(g, s, a & b)
        - _unanimity_bar(g, s, a)
        - _unanimity_bar(g, s, b)
    )
    return d < 0 and d == witness.delta


def reverify_partition_witness(g: WeightedGraph, witness) -> bool:
    """Check that the stated partitions really disagree on the stated block."""
    i, a, b, ap = witness.i, set(witness.a), set(witness.b), set(witness.a_prime)
    if i in b or not a <= b or not (_connected(g, a) and _connected(g, b)):
        return False
    if not _connected(g, a | {i}):
        return False
    if set(map(frozenset, pmin_partition(g, a | {i}))).isdisjoint({frozenset(ap)}):
        return False

    def restricted(x):
        return sorted(tuple(sorted(set(blk) & ap)) for blk in pmin_partition(g, x) if set(blk) & ap)

    return restricted(a) != restricted(b)


def reverify_game_convexity(g: WeightedGraph, v: Game, a, b) -> int:
    """Gap of ``vbar`` on ``(A, B)``, evaluated block by block."""

    def bar(x):
        return sum(v.value(blk) for blk in pmin_partition(g, x)) if x else 0

    a, b = set(a), set(b)
    return bar(a | b) + bar(a & b) - bar(a) - bar(b)
