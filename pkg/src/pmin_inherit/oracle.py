"""Exponential ground truth for the polynomial checkers.

Everything here enumerates subsets, so it is only usable on small graphs.
Subsets are handled as bitmasks internally (vertex ``k`` is bit ``k - 1``)
and reported as sorted vertex tuples.  "First" witness always means first in
the lexicographic order of sorted vertex tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from .graph import WeightedGraph, vertex_set
from .pmin import (
    Game,
    connected_masks,
    members_of,
    pmin_table,
    restricted_value,
    subset_order,
)

SUBSET_CAP = 12

# entries per (carrier x pair) block evaluated at once
_CHUNK_CELLS = 1 << 24


class OracleCapError(ValueError):
    """The instance is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class ConvexityWitness:
    a: tuple[int, ...]
    b: tuple[int, ...]
    delta: object
    carrier: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict:
        out = {"A": list(self.a), "B": list(self.b), "delta": self.delta}
        if self.carrier is not None:
            out["S"] = list(self.carrier)
        return out


@dataclass(frozen=True)
class SuperadditivityWitness:
    a: tuple[int, ...]
    b: tuple[int, ...]
    carrier: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class PartitionWitness:
    i: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    a_prime: tuple[int, ...]
    restricted_a: tuple[tuple[int, ...], ...]
    restricted_b: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "A": list(self.a),
            "B": list(self.b),
            "A_prime": list(self.a_prime),
            "P_A_restricted": [list(x) for x in self.restricted_a],
            "P_B_restricted": [list(x) for x in self.restricted_b],
        }


def _check_cap(g: WeightedGraph, cap: int = SUBSET_CAP) -> None:
    if g.n > cap:
        raise OracleCapError(f"n = {g.n} exceeds the enumeration cap {cap}")


def delta(g: WeightedGraph, v: Game, a: Iterable[int], b: Iterable[int]):
    """``vbar(A | B) + vbar(A & B) - vbar(A) - vbar(B)`` for the restricted game."""
    sa, sb = set(vertex_set(g, a)), set(vertex_set(g, b))
    return (
        restricted_value(g, v, sa | sb)
        + restricted_value(g, v, sa & sb)
        - restricted_value(g, v, sa)
        - restricted_value(g, v, sb)
    )


@dataclass
class _Tables:
    n: int
    order: np.ndarray  # nonempty masks in lexicographic order
    rank: np.ndarray  # rank[mask] -> position in order
    connected: list
    pmin: list
    block_of: np.ndarray  # block_of[mask, k] = block of P_min(mask) holding vertex k+1


@lru_cache(maxsize=16)
def _tables(g: WeightedGraph) -> _Tables:
    n = g.n
    order = np.array(subset_order(n), dtype=np.int64)
    rank = np.zeros(1 << n, dtype=np.int64)
    rank[order] = np.arange(len(order))
    table = pmin_table(g)
    block_of = np.zeros((1 << n, max(n, 1)), dtype=np.int64)
    for mask, blocks in enumerate(table):
        for blk in blocks:
            m = blk
            while m:
                low = m & -m
                block_of[mask, low.bit_length() - 1] = blk
                m ^= low
    return _Tables(n, order, rank, connected_masks(g), table, block_of)


@lru_cache(maxsize=16)
def _fconvex_pairs(g: WeightedGraph) -> tuple[np.ndarray, np.ndarray]:
    """Pairs (A, B) of connected sets, rank(A) < rank(B), neither containing the
    other, with A & B nonempty and connected.  Nested pairs have delta = 0
    identically and are skipped."""
    t = _tables(g)
    conn = t.connected
    sets = [int(m) for m in t.order if conn[int(m)]]
    left, right = [], []
    for x, a in enumerate(sets):
        for b in sets[x + 1 :]:
            inter = a & b
            if inter and inter != a and inter != b and conn[inter]:
                left.append(a)
                right.append(b)
    return np.array(left, dtype=np.int64), np.array(right, dtype=np.int64)


def _unanimity_matrix(t: _Tables, carriers: np.ndarray) -> np.ndarray:
    """``V[s, A] = vbar_S(A)`` for the unanimity game of each carrier S.

    For nonempty S at most one block of P_min(A) can contain S, so the value is
    1 exactly when the block holding the lowest vertex of S covers S.
    """
    low = np.zeros(len(carriers), dtype=np.int64)
    for k, s in enumerate(carriers):
        s = int(s)
        low[k] = (s & -s).bit_length() - 1
    blocks = t.block_of[:, low].T  # (carriers, masks)
    return ((blocks & carriers[:, None]) == carriers[:, None]).astype(np.int8)


def _restricted_vector(t: _Tables, v: Game) -> np.ndarray:
    vals = [0] * (1 << t.n)
    for mask in range(1, 1 << t.n):
        vals[mask] = sum(v.value_mask(b) for b in t.pmin[mask])
    return np.array(vals, dtype=object if _is_exotic(vals) else None)


def _is_exotic(vals) -> bool:
    return any(not isinstance(x, (int, float, np.integer, np.floating)) for x in vals)


def restricted_game_values(g: WeightedGraph, v: Game) -> list:
    """``vbar(mask)`` for every subset bitmask."""
    _check_cap(g)
    return list(_restricted_vector(_tables(g), v))


def is_f_convex_restricted(g: WeightedGraph, v: Game) -> Optional[ConvexityWitness]:
    """``None`` when the restricted game is F-convex, else the first violating pair."""
    _check_cap(g)
    t = _tables(g)
    vals = _restricted_vector(t, v)
    a, b = _fconvex_pairs(g)
    if not len(a):
        return None
    d = vals[a | b] + vals[a & b] - vals[a] - vals[b]
    bad = np.nonzero(d < 0)[0]
    if not len(bad):
        return None
    k = int(bad[0])
    return ConvexityWitness(members_of(int(a[k])), members_of(int(b[k])), _plain(d[k]))


def _plain(x):
    return x.item() if isinstance(x, np.generic) else x


def inheritance_oracle(g: WeightedGraph) -> Optional[ConvexityWitness]:
    """``None`` when every restricted unanimity game is F-convex.

    Otherwise the witness for the first carrier S (lexicographic) whose
    restricted game fails, with ``carrier`` set to S.
    """
    _check_cap(g)
    t = _tables(g)
    a, b = _fconvex_pairs(g)
    if not len(a):
        return None
    carriers = t.order
    v = _unanimity_matrix(t, carriers)
    cols = [a | b, a & b, a, b]
    step = max(1, _CHUNK_CELLS // max(1, len(carriers)))
    bad_rows = np.zeros(len(carriers), dtype=bool)
    for lo in range(0, len(a), step):
        sl = slice(lo, lo + step)
        d = (
            v[:, cols[0][sl]].astype(np.int16)
            + v[:, cols[1][sl]]
            - v[:, cols[2][sl]]
            - v[:, cols[3][sl]]
        )
        bad_rows |= (d < 0).any(axis=1)
    if not bad_rows.any():
        return None
    row = int(np.nonzero(bad_rows)[0][0])
    d = (
        v[row, cols[0]].astype(np.int16)
        + v[row, cols[1]]
        - v[row, cols[2]]
        - v[row, cols[3]]
    )
    k = int(np.nonzero(d < 0)[0][0])
    return ConvexityWitness(
        members_of(int(a[k])),
        members_of(int(b[k])),
        int(d[k]),
        carrier=members_of(int(carriers[row])),
    )


def failing_carriers(g: WeightedGraph) -> list[tuple[int, ...]]:
    """Every carrier S whose restricted unanimity game is not F-convex."""
    _check_cap(g)
    t = _tables(g)
    a, b = _fconvex_pairs(g)
    if not len(a):
        return []
    v = _unanimity_matrix(t, t.order)
    d = v[:, a | b].astype(np.int16) + v[:, a & b] - v[:, a] - v[:, b]
    rows = np.nonzero((d < 0).any(axis=1))[0]
    return [members_of(int(t.order[r])) for r in rows]


@lru_cache(maxsize=16)
def _disjoint_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    order = subset_order(n)
    rank = {m: k for k, m in enumerate(order)}
    left, right = [], []
    full = (1 << n) - 1
    for a in order:
        rest = full & ~a
        b = rest
        while b:
            if rank[a] < rank[b]:
                left.append(a)
                right.append(b)
            b = (b - 1) & rest
    pairs = sorted(zip(left, right), key=lambda p: (rank[p[0]], rank[p[1]]))
    return (
        np.array([p[0] for p in pairs], dtype=np.int64),
        np.array([p[1] for p in pairs], dtype=np.int64),
    )


def superadditivity_check(g: WeightedGraph, v: Game) -> Optional[SuperadditivityWitness]:
    """``None`` when ``vbar(A | B) >= vbar(A) + vbar(B)`` for all disjoint A, B.

    Pairs involving the empty set reduce to ``vbar(B) >= vbar(B)`` and are skipped.
    """
    _check_cap(g)
    if g.n == 0:
        return None
    vals = _restricted_vector(_tables(g), v)
    a, b = _disjoint_pairs(g.n)
    if not len(a):
        return None
    bad = np.nonzero(vals[a | b] - vals[a] - vals[b] < 0)[0]
    if not len(bad):
        return None
    k = int(bad[0])
    return SuperadditivityWitness(members_of(int(a[k])), members_of(int(b[k])))


def unanimity_superadditivity(g: WeightedGraph) -> Optional[SuperadditivityWitness]:
    """Superadditivity of every restricted unanimity game at once."""
    _check_cap(g)
    if g.n == 0:
        return None
    t = _tables(g)
    a, b = _disjoint_pairs(g.n)
    if not len(a):
        return None
    v = _unanimity_matrix(t, t.order)
    d = v[:, a | b].astype(np.int16) - v[:, a] - v[:, b]
    bad = np.argwhere(d < 0)
    if not len(bad):
        return None
    row, k = (int(x) for x in bad[0])
    return SuperadditivityWitness(
        members_of(int(a[k])), members_of(int(b[k])), carrier=members_of(int(t.order[row]))
    )


def _restrict(blocks: tuple[int, ...], a_prime: int) -> tuple[int, ...]:
    return tuple(sorted(x for x in (blk & a_prime for blk in blocks) if x))


def partition_criterion(g: WeightedGraph) -> Optional[PartitionWitness]:
    """Partition criterion: for every vertex i and connected A <= B <= N - {i}
    with A + {i} connected, P_min(A) and P_min(B) restrict identically to each
    block A' of P_min(A + {i}).  Returns the first failing instance."""
    _check_cap(g)
    t = _tables(g)
    conn, table = t.connected, t.pmin
    lex = [int(m) for m in t.order]
    for i in g.vertices:
        bit = 1 << (i - 1)
        pool = [m for m in lex if not m & bit and conn[m]]
        for a in pool:
            if not conn[a | bit]:
                continue
            parts_a = table[a]
            blocks_ai = table[a | bit]
            for b in pool:
                if b == a or b & a != a:
                    continue
                parts_b = table[b]
                for a_prime in blocks_ai:
                    ra = _restrict(parts_a, a_prime)
                    rb = _restrict(parts_b, a_prime)
                    if ra != rb:
                        return PartitionWitness(
                            i,
                            members_of(a),
                            members_of(b),
                            members_of(a_prime),
                            tuple(members_of(x) for x in ra),
                            tuple(members_of(x) for x in rb),
                        )
    return None


def refinement_counterexample(g: WeightedGraph):
    """First A <= B where some block of P_min(A) is split by P_min(B), else None."""
    _check_cap(g)
    t = _tables(g)
    table = t.pmin
    for b in range(1, 1 << g.n):
        owner = {}
        for k, blk in enumerate(table[b]):
            m = blk
            while m:
                low = m & -m
                owner[low] = k
                m ^= low
        a = b
        while a:
            for blk in table[a]:
                homes = set()
                m = blk
                while m:
                    low = m & -m
                    homes.add(owner[low])
                    m ^= low
                if len(homes) > 1:
                    return members_of(a), members_of(b)
            a = (a - 1) & b
    return None
