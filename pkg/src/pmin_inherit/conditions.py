"""Literal, enumeration-based evaluation of the edge-weight conditions.

Each condition is checked exactly as stated, over every star, elementary
path, simple cycle, pan and pair of adjacent cycles.  The per-object
predicates (``star_triple_ok``, ``cycle_condition_ok`` ...) are also used by
the certificate re-verifier.

Wherever a condition reads "after renumbering the edges if necessary", a
cycle satisfies it when at least one numbering does.  A numbering picks the
vertex playing ``2`` and an orientation; ``e1 = {1, 2}`` and ``e2 = {2, 3}``
are the two cycle edges at ``2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .graph import WeightedGraph, edge_key
from .violations import Violation

ENUMERATION_CAP = 9

CONDITIONS = (
    "star",
    "path",
    "weak_cycle",
    "intermediary_cycle",
    "cycle",
    "weak_pan",
    "pan",
    "adjacent_cycles",
    "adjacent_cycles_part1",
    "adjacent_cycles_part2",
    "weak_second_part",
)


class EnumerationCapError(ValueError):
    pass


# -- stars and paths -------------------------------------------------------


def star_triple_ok(weights: Sequence[int]) -> bool:
    """``w1 <= w2 = w3`` after sorting."""
    a, b, c = sorted(weights)
    return b == c


def path_violation_indices(weights: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """First ``(i, j, k)`` (1-based, i < j < k) with ``w_j > max(w_i, w_k)``."""
    m = len(weights)
    for j in range(1, m - 1):
        wj = weights[j]
        i = next((x for x in range(j) if weights[x] < wj), None)
        if i is None:
            continue
        k = next((x for x in range(j + 1, m) if weights[x] < wj), None)
        if k is not None:
            return (i + 1, j + 1, k + 1)
    return None


def _edge_list(g: WeightedGraph, vs: Sequence[int]) -> list[list[int]]:
    return [[*edge_key(vs[k], vs[k + 1]), g.weight(vs[k], vs[k + 1])] for k in range(len(vs) - 1)]


def enumerate_star(g: WeightedGraph) -> Optional[Violation]:
    for c in g.vertices:
        for trio in combinations(g.neighbors(c), 3):
            ws = [g.weight(c, x) for x in trio]
            if not star_triple_ok(ws):
                return Violation(
                    "star",
                    {"center": c, "edges": [[*edge_key(c, x), g.weight(c, x)] for x in trio]},
                )
    return None


def elementary_paths(g: WeightedGraph, min_edges: int = 1) -> Iterator[tuple[int, ...]]:
    """Every elementary path once (first vertex < last vertex), lexicographic order."""

    def walk(path):
        if len(path) - 1 >= min_edges and path[0] < path[-1]:
            yield path
        for v in g.neighbors(path[-1]):
            if v not in path:
                yield from walk(path + (v,))

    for s in g.vertices:
        yield from walk((s,))


def enumerate_path(g: WeightedGraph) -> Optional[Violation]:
    for vs in elementary_paths(g, min_edges=3):
        ws = [g.weight(vs[k], vs[k + 1]) for k in range(len(vs) - 1)]
        ijk = path_violation_indices(ws)
        if ijk is not None:
            return Violation("path", {"path": list(vs), "weights": ws, "ijk": list(ijk)})
    return None


# -- cycles ----------------------------------------------------------------


@dataclass(frozen=True)
class CycleInfo:
    vertices: tuple[int, ...]
    weights: tuple[int, ...]  # weights[k] is edge (v[k], v[k+1])
    edges: tuple[tuple[int, int], ...]
    chords: tuple[tuple[int, int, int], ...]
    vmask: int
    emask: int  # bits over g.edges indices
    chord_mask: int

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def max_edge(self) -> int:
        return max(self.weights)

    @property
    def max_hat(self) -> int:
        return max([*self.weights, *(w for _, _, w in self.chords)])


def cycle_info(g: WeightedGraph, vertices: Sequence[int]) -> CycleInfo:
    index = _edge_index(g)
    vs = tuple(vertices)
    m = len(vs)
    edges = tuple(edge_key(vs[k], vs[(k + 1) % m]) for k in range(m))
    weights = tuple(g.weight(*e) for e in edges)
    on = set(edges)
    inside = set(vs)
    chords = tuple(
        (u, v, w) for u, v, w in g.edges if u in inside and v in inside and (u, v) not in on
    )
    vmask = 0
    for v in vs:
        vmask |= 1 << (v - 1)
    emask = 0
    for e in edges:
        emask |= 1 << index[e]
    cmask = 0
    for u, v, _ in chords:
        cmask |= 1 << index[(u, v)]
    return CycleInfo(vs, weights, edges, chords, vmask, emask, cmask)


@lru_cache(maxsize=32)
def _edge_index(g: WeightedGraph) -> dict:
    return {(u, v): k for k, (u, v, _) in enumerate(g.edges)}


def simple_cycles(g: WeightedGraph) -> list[tuple[int, ...]]:
    """Every simple cycle once: starts at its smallest vertex, second vertex < last."""
    out = []
    for s in g.vertices:
        def walk(path, seen):
            last = path[-1]
            for v in g.neighbors(last):
                if v == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif v > s and v not in seen:
                    seen.add(v)
                    path.append(v)
                    walk(path, seen)
                    path.pop()
                    seen.discard(v)

        walk([s], {s})
    out.sort()
    return out


@lru_cache(maxsize=16)
def _cycle_infos(g: WeightedGraph) -> tuple[CycleInfo, ...]:
    return tuple(cycle_info(g, c) for c in simple_cycles(g))


def numberings(c: CycleInfo) -> Iterator[tuple[int, int, int, int, int]]:
    """Yield ``(i_e1, i_e2, v1, v2, v3)``: indices of e1, e2 in ``c.weights``
    and the cycle vertices playing 1, 2, 3."""
    m = c.m
    vs = c.vertices
    for p in range(m):
        prev_e, next_e = (p - 1) % m, p
        yield prev_e, next_e, vs[(p - 1) % m], vs[p], vs[(p + 1) % m]
        yield next_e, prev_e, vs[(p + 1) % m], vs[p], vs[(p - 1) % m]


def _weak_cycle_numbering(c: CycleInfo, i1: int, i2: int) -> bool:
    w = c.weights
    top = c.max_edge
    if w[i1] > w[i2]:
        return False
    return all(w[k] == top for k in range(c.m) if k not in (i1, i2))


def weak_cycle_ok(c: CycleInfo) -> bool:
    return any(_weak_cycle_numbering(c, i1, i2) for i1, i2, *_ in numberings(c))


def _intermediary_numbering(c: CycleInfo, i1, i2, v2) -> bool:
    if not _weak_cycle_numbering(c, i1, i2):
        return False
    w = c.weights
    w1, w2 = w[i1], w[i2]
    mh = c.max_hat
    at2 = [cw for u, v, cw in c.chords if v2 in (u, v)]
    if any(cw > w2 for cw in at2):
        return False
    if w1 <= w2 < mh:
        away = [w[k] for k in range(c.m) if k not in (i1, i2)]
        away += [cw for u, v, cw in c.chords if v2 not in (u, v)]
        if any(x != mh for x in away):
            return False
        for cw in at2:
            if not ((w1 <= w2 == cw < mh) or (cw < w1 == w2 < mh)):
                return False
    if w1 < w2 == mh:
        rest = [w[k] for k in range(c.m) if k != i1] + [cw for *_, cw in c.chords]
        if any(x != mh for x in rest):
            return False
    return True


def intermediary_cycle_ok(c: CycleInfo) -> bool:
    return any(_intermediary_numbering(c, i1, i2, v2) for i1, i2, _, v2, _ in numberings(c))


def _cycle_numbering(c: CycleInfo, i1, i2, v2) -> bool:
    if not _weak_cycle_numbering(c, i1, i2):
        return False
    w = c.weights
    w2 = w[i2]
    mh = c.max_hat
    for u, v, cw in c.chords:
        if v2 in (u, v):
            if cw != w2:
                return False
        elif cw != mh:
            return False
    return all(w[k] == mh for k in range(c.m) if k not in (i1, i2))


def cycle_condition_ok(c: CycleInfo) -> bool:
    return any(_cycle_numbering(c, i1, i2, v2) for i1, i2, _, v2, _ in numberings(c))


def _cycle_payload(c: CycleInfo) -> dict:
    return {
        "cycle": list(c.vertices),
        "weights": list(c.weights),
        "chords": [list(x) for x in c.chords],
    }


def _enumerate_cycles(g, tag, predicate) -> Optional[Violation]:
    for c in _cycle_infos(g):
        if not predicate(c):
            return Violation(tag, _cycle_payload(c))
    return None


# -- pans ------------------------------------------------------------------


def pan_status(g: WeightedGraph, c: CycleInfo, j: int, path_min: int) -> tuple[bool, bool]:
    """``(weak_pan_ok, pan_ok)`` for cycle ``c`` and a path meeting it only at
    ``j`` whose lightest edge weighs ``path_min``."""
    low = min(c.weights)
    if path_min > low:
        return True, True
    mh = c.max_hat
    if all(x == mh for x in c.weights):
        return True, True
    for i1, i2, v1, v2, v3 in numberings(c):
        if v2 != j:
            continue
        w = c.weights
        if not (w[i1] == w[i2] < mh):
            continue
        if not all(w[k] == mh for k in range(c.m) if k not in (i1, i2)):
            continue
        # claim (b) holds with 2 = j
        if path_min >= w[i1]:
            return True, True
        # on a triangle {1, 3} is the cycle edge e3, already of weight M-hat
        return True, g.has_edge(v1, v3) and g.weight(v1, v3) == mh
    return False, False


def _pan_paths(g: WeightedGraph, c: CycleInfo, j: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Every elementary path starting at ``j`` whose other vertices avoid the
    cycle, with the weight of its lightest edge."""
    blocked = set(c.vertices)

    def walk(path, low):
        for v in g.neighbors(path[-1]):
            if v in blocked or v in path:
                continue
            w = g.weight(path[-1], v)
            nlow = w if low is None else min(low, w)
            nxt = path + (v,)
            yield nxt, nlow
            yield from walk(nxt, nlow)

    yield from walk((j,), None)


def enumerate_pan(g: WeightedGraph, weak: bool) -> Optional[Violation]:
    tag = "weak_pan" if weak else "pan"
    for c in _cycle_infos(g):
        for j in c.vertices:
            for path, low in _pan_paths(g, c, j):
                weak_ok, pan_ok = pan_status(g, c, j, low)
                if not (weak_ok if weak else pan_ok):
                    payload = _cycle_payload(c)
                    payload.update({"path": list(path), "path_edges": _edge_list(g, path)})
                    return Violation(tag, payload)
    return None


# -- adjacent cycles -------------------------------------------------------


def adjacency_premise(c: CycleInfo, d: CycleInfo) -> bool:
    """Conditions (a)-(d) for the ordered pair ``(c, d)``, plus adjacency."""
    if not c.emask & d.emask:
        return False
    if not (c.vmask & ~d.vmask) or not (d.vmask & ~c.vmask):
        return False
    mc, md = c.max_hat, d.max_hat
    if sum(1 for *_, w in c.chords if w < mc) > 1:
        return False
    if any(w == mc for *_, w in c.chords) or any(w == md for *_, w in d.chords):
        return False
    return not c.chord_mask & d.chord_mask


def common_nonmax_edges(c: CycleInfo, d: CycleInfo) -> list[tuple[int, int]]:
    mc, md = c.max_hat, d.max_hat
    wd = dict(zip(d.edges, d.weights))
    return [
        e for e, w in zip(c.edges, c.weights) if e in wd and w < mc and wd[e] < md
    ]


def _other_edge_at(c: CycleInfo, e: tuple[int, int], z: int) -> tuple[tuple[int, int], int]:
    for f, w in zip(c.edges, c.weights):
        if f != e and z in f:
            return f, w
    raise AssertionError("cycle edge without neighbour")


def second_part_ok(c: CycleInfo, d: CycleInfo, e1: tuple[int, int], weak: bool) -> bool:
    """Existence of the non-maximum edges e2 in C and e2' in C' sharing an
    endpoint of ``e1`` with the required weight pattern."""
    mc, md = c.max_hat, d.max_hat
    w1 = dict(zip(c.edges, c.weights))[e1]
    d_edges = set(d.edges)
    c_edges = set(c.edges)
    short = c.m == 3 or d.m == 3
    for z in e1:
        e2, w2 = _other_edge_at(c, e1, z)
        f2, v2 = _other_edge_at(d, e1, z)
        if not (w2 < mc and v2 < md):
            continue
        if weak:
            if e2 == f2:
                continue
            if (w1 == w2 >= v2) or (w1 == v2 >= w2):
                return True
            continue
        if e2 in d_edges or f2 in c_edges:
            continue
        if short:
            if (w1 == w2 >= v2) or (w1 == v2 >= w2):
                return True
        elif w1 == w2 == v2:
            return True
    return False


def adjacent_pair_violation(
    g: WeightedGraph, c: CycleInfo, d: CycleInfo, which: str
) -> Optional[Violation]:
    """Evaluate one ordered pair. ``which`` is part1, part2 or weak."""
    if not adjacency_premise(c, d):
        return None
    common = common_nonmax_edges(c, d)
    base = {"cycle": list(c.vertices), "other_cycle": list(d.vertices)}
    if which == "part1":
        if len(common) >= 2:
            base["shared"] = [[*e, g.weight(*e)] for e in common]
            return Violation("adjacent_cycles_part1", base)
        return None
    if len(common) != 1:
        return None
    e1 = common[0]
    weak = which == "weak"
    if second_part_ok(c, d, e1, weak=weak):
        return None
    base["shared_edge"] = [*e1, g.weight(*e1)]
    return Violation("weak_second_part" if weak else "adjacent_cycles_part2", base)


def _enumerate_pairs(g: WeightedGraph, which: str) -> Optional[Violation]:
    infos = _cycle_infos(g)
    eligible = [
        c
        for c in infos
        if not any(w == c.max_hat for *_, w in c.chords)
    ]
    for c in eligible:
        for d in eligible:
            if c is d:
                continue
            found = adjacent_pair_violation(g, c, d, which)
            if found is not None:
                return found
    return None


def adjacent_cycle_pairs(g: WeightedGraph) -> Iterator[tuple[CycleInfo, CycleInfo]]:
    """Every unordered pair of simple cycles sharing at least one edge."""
    infos = _cycle_infos(g)
    for x, c in enumerate(infos):
        for d in infos[x + 1 :]:
            if c.emask & d.emask:
                yield c, d


def adjacent_maxima_counterexample(g: WeightedGraph) -> Optional[tuple[CycleInfo, CycleInfo]]:
    """First adjacent pair whose four maxima (over E and E-hat of both cycles) differ."""
    for c, d in adjacent_cycle_pairs(g):
        if len({c.max_hat, c.max_edge, d.max_edge, d.max_hat}) != 1:
            return c, d
    return None


# -- dispatcher ------------------------------------------------------------


def enumerate_condition(g: WeightedGraph, which: str) -> Optional[Violation]:
    """Check one condition literally; ``None`` on pass, else the first violation."""
    if g.n > ENUMERATION_CAP:
        raise EnumerationCapError(f"n = {g.n} exceeds the enumeration cap {ENUMERATION_CAP}")
    if which == "star":
        return enumerate_star(g)
    if which == "path":
        return enumerate_path(g)
    if which == "weak_cycle":
        return _enumerate_cycles(g, "weak_cycle", weak_cycle_ok)
    if which == "intermediary_cycle":
        return _enumerate_cycles(g, "intermediary_cycle", intermediary_cycle_ok)
    if which == "cycle":
        return _enumerate_cycles(g, "cycle", cycle_condition_ok)
    if which == "weak_pan":
        return enumerate_pan(g, weak=True)
    if which == "pan":
        return enumerate_pan(g, weak=False)
    if which == "adjacent_cycles_part1":
        return _enumerate_pairs(g, "part1")
    if which == "adjacent_cycles_part2":
        return _enumerate_pairs(g, "part2")
    if which == "adjacent_cycles":
        return _enumerate_pairs(g, "part1") or _enumerate_pairs(g, "part2")
    if which == "weak_second_part":
        return _enumerate_pairs(g, "weak")
    raise ValueError(f"unknown condition {which!r}; expected one of {CONDITIONS}")


def characterization_holds(g: WeightedGraph) -> bool:
    """Star, Path, Cycle, Pan and Adjacent Cycles all pass by enumeration."""
    return all(
        enumerate_condition(g, w) is None
        for w in ("star", "path", "cycle", "pan", "adjacent_cycles")
    )
