"""The P_min correspondence and the restricted game it induces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Partition, WeightedGraph, connected_components, min_weight_edges, vertex_set

MAX_TABLE_PLAYERS = 20


def pmin_partition(g: WeightedGraph, a: Iterable[int]) -> Partition:
    """Split ``A`` into the components left after deleting the minimum-weight
    edges of the induced subgraph.  ``P_min(empty) = empty partition``."""
    members = vertex_set(g, a)
    return connected_components(g, members, min_weight_edges(g, members))


def restrict_partition(p: Partition, a_prime: Iterable[int]) -> Partition:
    return p.restrict(a_prime)


@dataclass(frozen=True)
class Game:
    """Characteristic function on subsets of ``1..n``.

    Either a unanimity game (``unanimity`` set) or an explicit table indexed
    by the subset bitmask, where vertex ``k`` is bit ``k - 1``.
    """

    n: int
    unanimity: Optional[frozenset] = None
    table: Optional[tuple] = None

    def __post_init__(self):
        if (self.unanimity is None) == (self.table is None):
            raise ValueError("give exactly one of unanimity / table")
        if self.unanimity is not None:
            if not self.unanimity:
                raise ValueError("unanimity carrier must be nonempty")
            if not all(1 <= v <= self.n for v in self.unanimity):
                raise ValueError("unanimity carrier outside 1..n")
        else:
            if self.n > MAX_TABLE_PLAYERS:
                raise ValueError(f"explicit tables are limited to n <= {MAX_TABLE_PLAYERS}")
            if len(self.table) != 1 << self.n:
                raise ValueError("table must have 2**n entries")
            if self.table[0] != 0:
                raise ValueError("v(empty set) must be 0")

    @classmethod
    def unanimity_game(cls, n: int, s: Iterable[int]) -> "Game":
        return cls(n=n, unanimity=frozenset(s))

    @classmethod
    def from_values(cls, n: int, values: dict) -> "Game":
        """Explicit game from ``{subset: value}``; unspecified subsets are worth 0."""
        table = [0] * (1 << n)
        for subset, value in values.items():
            table[mask_of(subset)] = value
        return cls(n=n, table=tuple(table))

    def value(self, a: Iterable[int]) -> int:
        members = frozenset(a)
        if self.unanimity is not None:
            return 1 if self.unanimity <= members else 0
        return self.table[mask_of(members)]

    def value_mask(self, mask: int) -> int:
        if self.unanimity is not None:
            s = mask_of(self.unanimity)
            return 1 if mask & s == s else 0
        return self.table[mask]


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << (v - 1)
    return out


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def restricted_value(g: WeightedGraph, v: Game, a: Iterable[int]):
    """Sum of ``v`` over the blocks of ``P_min(A)``."""
    members = vertex_set(g, a)
    if not members:
        return 0
    return sum(v.value(block) for block in pmin_partition(g, members))


def pmin_table(g: WeightedGraph) -> list[tuple[int, ...]]:
    """``P_min(A)`` for every subset bitmask ``A``, blocks given as bitmasks.

    Computed directly on bitmasks (union-find on the surviving edges) so the
    oracle can afford every subset; cross-checked against
    :func:`pmin_partition` in the tests.
    """
    n = g.n
    bits = [(1 << (u - 1), 1 << (v - 1), u - 1, v - 1, w) for u, v, w in g.edges]
    table: list[tuple[int, ...]] = [()] * (1 << n)
    for mask in range(1, 1 << n):
        inner = [e for e in bits if mask & e[0] and mask & e[1]]
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        if inner:
            low = min(e[4] for e in inner)
            for _, _, a, b, w in inner:
                if w != low:
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
        groups: dict[int, int] = {}
        m = mask
        k = 0
        while m:
            if m & 1:
                r = find(k)
                groups[r] = groups.get(r, 0) | (1 << k)
            m >>= 1
            k += 1
        table[mask] = tuple(sorted(groups.values()))
    return table


def connected_masks(g: WeightedGraph) -> list[bool]:
    """``connected[mask]`` is True when the induced subgraph on ``mask`` is
    nonempty and connected."""
    n = g.n
    nbr = [0] * n
    for u, v, _ in g.edges:
        nbr[u - 1] |= 1 << (v - 1)
        nbr[v - 1] |= 1 << (u - 1)
    out = [False] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        reach = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = nbr[b.bit_length() - 1] & mask & ~reach
            reach |= new
            frontier |= new
        out[mask] = reach == mask
    return out


def subset_order(n: int) -> list[int]:
    """All nonempty bitmasks sorted lexicographically by their sorted vertex tuple."""
    return sorted(range(1, 1 << n), key=members_of)


def blocks_as_sets(blocks: Sequence[int]) -> list[tuple[int, ...]]:
    return [members_of(b) for b in blocks]
