"""Exact-weight undirected graphs and the small set of graph algorithms the
checkers and the oracle are built from.

Vertices are the integers ``1..n``.  Edges are stored as ``(u, v)`` with
``u < v``; weights are positive integers so every weight comparison is exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised by :func:`parse_graph` with the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with strictly positive integer weights.

    ``adjacency[u][v]`` is the weight of edge ``{u, v}`` or ``0`` when absent;
    row and column 0 are unused so vertex labels index directly.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _neighbors: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "WeightedGraph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        matrix = [[0] * (n + 1) for _ in range(n + 1)]
        normalized = []
        for item in edges:
            u, v, w = (int(x) for x in item)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} has a vertex outside 1..{n}")
            if w < 1:
                raise ValueError(f"edge {u}-{v} has non-positive weight {w}")
            if matrix[u][v]:
                raise ValueError(f"duplicate edge {u}-{v}")
            matrix[u][v] = matrix[v][u] = w
            a, b = edge_key(u, v)
            normalized.append((a, b, w))
        normalized.sort()
        neighbors = tuple(
            tuple(v for v in range(1, n + 1) if matrix[u][v]) if u else ()
            for u in range(n + 1)
        )
        return cls(
            n=n,
            edges=tuple(normalized),
            adjacency=tuple(tuple(row) for row in matrix),
            _neighbors=neighbors,
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def weight(self, u: int, v: int) -> int:
        return self.adjacency[u][v]

    def has_edge(self, u: int, v: int) -> bool:
        return self.adjacency[u][v] > 0

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Neighbors of ``u`` in increasing order."""
        return self._neighbors[u]

    def degree(self, u: int) -> int:
        return len(self._neighbors[u])

    def induced_edges(self, a: Iterable[int]) -> list[tuple[int, int, int]]:
        inside = set(a)
        return [(u, v, w) for u, v, w in self.edges if u in inside and v in inside]


def parse_graph(text: str) -> WeightedGraph:
    """Parse the ``n m`` / ``u v w`` edge-list format.

    Lines starting with ``#`` and blank lines are ignored.  Every problem is
    reported as a :class:`GraphFormatError` carrying the 1-based line number.
    """
    header: Optional[tuple[int, int]] = None
    header_line = 0
    edges: list[tuple[int, int, int]] = []
    seen: dict[Edge, int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            numbers = [int(x) for x in fields]
        except ValueError:
            raise GraphFormatError(lineno, f"expected integers, got {line!r}") from None
        if header is None:
            if len(numbers) != 2:
                raise GraphFormatError(lineno, "header must be 'n m'")
            n, m = numbers
            if n < 0 or m < 0:
                raise GraphFormatError(lineno, "n and m must be non-negative")
            header, header_line = (n, m), lineno
            continue
        n, m = header
        if len(numbers) != 3:
            raise GraphFormatError(lineno, "edge line must be 'u v w'")
        u, v, w = numbers
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(lineno, f"vertex index out of range 1..{n}")
        if u == v:
            raise GraphFormatError(lineno, f"self-loop at vertex {u}")
        if w <= 0:
            raise GraphFormatError(lineno, f"weight must be >= 1, got {w}")
        key = edge_key(u, v)
        if key in seen:
            raise GraphFormatError(
                lineno, f"duplicate edge {key[0]}-{key[1]} (first on line {seen[key]})"
            )
        if len(edges) == m:
            raise GraphFormatError(lineno, f"more than the declared {m} edges")
        seen[key] = lineno
        edges.append((u, v, w))
    if header is None:
        raise GraphFormatError(max(last_line, 1), "missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(
            max(last_line, header_line),
            f"declared {header[1]} edges but found {len(edges)}",
        )
    return WeightedGraph.from_edges(header[0], edges)


def format_graph(g: WeightedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def vertex_set(g: WeightedGraph, a: Iterable[int]) -> tuple[int, ...]:
    """Canonical sorted tuple for a vertex subset, with range checking."""
    out = tuple(sorted(set(a)))
    for v in out:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    return out


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering ``owner``; blocks sorted by content."""

    owner: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, owner: Iterable[int], blocks: Iterable[Iterable[int]]) -> "Partition":
        canon = sorted(tuple(sorted(b)) for b in blocks if b)
        return cls(tuple(sorted(owner)), tuple(canon))

    def restrict(self, a_prime: Iterable[int]) -> "Partition":
        sub = set(a_prime)
        if not sub <= set(self.owner):
            raise ValueError("restriction set must be a subset of the owner")
        return Partition.of(sub, ([v for v in b if v in sub] for b in self.blocks))

    def refines(self, other: "Partition") -> bool:
        """True when every block of ``self`` lies inside a block of ``other``."""
        where = {v: i for i, b in enumerate(other.blocks) for v in b}
        for block in self.blocks:
            homes = {where.get(v) for v in block}
            if len(homes) != 1 or None in homes:
                return False
        return True

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)


def min_weight_edges(g: WeightedGraph, a: Iterable[int]) -> list[Edge]:
    """Edges of ``E(A)`` having the minimum weight found in ``E(A)``."""
    inner = g.induced_edges(vertex_set(g, a))
    if not inner:
        return []
    low = min(w for _, _, w in inner)
    return [(u, v) for u, v, w in inner if w == low]


def connected_components(
    g: WeightedGraph, a: Iterable[int], excluded_edges: Iterable[Edge] = ()
) -> Partition:
    """Components of ``(A, E(A) minus excluded_edges)``; isolated vertices are singletons."""
    members = vertex_set(g, a)
    inside = set(members)
    dropped = {edge_key(u, v) for u, v in excluded_edges}
    seen: set[int] = set()
    blocks = []
    for start in members:
        if start in seen:
            continue
        seen.add(start)
        block = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v in inside and v not in seen and edge_key(u, v) not in dropped:
                    seen.add(v)
                    block.append(v)
                    queue.append(v)
        blocks.append(block)
    return Partition.of(members, blocks)


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    @property
    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge_key(vs[k], vs[k + 1]) for k in range(len(vs) - 1)]

    def __len__(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its cyclic vertex sequence (length >= 3)."""

    vertices: tuple[int, ...]

    @property
    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge_key(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]

    def chords(self, g: WeightedGraph) -> list[Edge]:
        on_cycle = set(self.edges)
        inside = set(self.vertices)
        return [
            (u, v)
            for u, v, _ in g.edges
            if u in inside and v in inside and (u, v) not in on_cycle
        ]

    def canonical(self) -> "Cycle":
        """Rotate to start at the smallest vertex, oriented toward the smaller neighbour."""
        vs = self.vertices
        k = vs.index(min(vs))
        rotated = vs[k:] + vs[:k]
        if rotated[1] > rotated[-1]:
            rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
        return Cycle(rotated)

    def __len__(self) -> int:
        return len(self.vertices)


def is_simple_cycle(g: WeightedGraph, vertices: Sequence[int]) -> bool:
    if len(vertices) < 3 or len(set(vertices)) != len(vertices):
        return False
    if not all(1 <= v <= g.n for v in vertices):
        return False
    k = len(vertices)
    return all(g.has_edge(vertices[i], vertices[(i + 1) % k]) for i in range(k))


def is_elementary_path(g: WeightedGraph, vertices: Sequence[int]) -> bool:
    if not vertices or len(set(vertices)) != len(vertices):
        return False
    if not all(1 <= v <= g.n for v in vertices):
        return False
    return all(g.has_edge(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1))


def shortest_path(
    g: WeightedGraph,
    s: int,
    t: int,
    allowed: Optional[Iterable[int]] = None,
    *,
    above: Optional[int] = None,
    at_least: Optional[int] = None,
    skip_edge: Optional[Edge] = None,
) -> Optional[Path]:
    """Minimum-hop path from ``s`` to ``t`` by breadth-first search.

    The search stays inside ``allowed`` (all vertices when ``None``) and uses
    only edges with weight ``> above`` / ``>= at_least`` and different from
    ``skip_edge``.  Neighbours are expanded in increasing order, so the
    returned path is deterministic.  Returns ``None`` when ``t`` is unreachable.
    """
    allowed_set = set(g.vertices) if allowed is None else set(allowed)
    if s not in allowed_set or t not in allowed_set:
        raise ValueError("endpoints must belong to the allowed vertex set")
    if s == t:
        return Path((s,))
    skip = edge_key(*skip_edge) if skip_edge is not None else None
    adj = g.adjacency
    parent = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        row = adj[u]
        for v in g.neighbors(u):
            if v in parent or v not in allowed_set:
                continue
            w = row[v]
            if above is not None and w <= above:
                continue
            if at_least is not None and w < at_least:
                continue
            if skip is not None and edge_key(u, v) == skip:
                continue
            parent[v] = u
            if v == t:
                out = [t]
                while out[-1] != s:
                    out.append(parent[out[-1]])
                return Path(tuple(reversed(out)))
            queue.append(v)
    return None


@dataclass(frozen=True)
class SpanningTree:
    """Minimum spanning tree of one connected component, rooted at its lowest vertex."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    parent: dict = field(compare=False, repr=False)
    depth: dict = field(compare=False, repr=False)

    @property
    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)

    @property
    def root(self) -> int:
        return self.vertices[0]

    def contains_edge(self, u: int, v: int) -> bool:
        return self.parent.get(u) == v or self.parent.get(v) == u

    def path(self, u: int, v: int) -> list[int]:
        """Vertex sequence of the unique tree path from ``u`` to ``v``."""
        left, right = [u], [v]
        a, b = u, v
        while self.depth[a] > self.depth[b]:
            a = self.parent[a]
            left.append(a)
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
            right.append(b)
        while a != b:
            a, b = self.parent[a], self.parent[b]
            left.append(a)
            right.append(b)
        right.pop()
        return left + right[::-1]


def prim_mst(g: WeightedGraph) -> list[SpanningTree]:
    """Dense O(n^2) Prim, one tree per connected component.

    Each tree grows from the lowest unvisited vertex.  On weight ties the next
    vertex is the lowest-indexed one, and a vertex's attaching edge is moved to
    the most recently added tree vertex (``<=`` relaxation).
    """
    adj = g.adjacency
    done = [False] * (g.n + 1)
    trees = []
    for root in g.vertices:
        if done[root]:
            continue
        key: dict[int, int] = {}
        attach: dict[int, int] = {}
        parent = {root: None}
        depth = {root: 0}
        order = [root]
        chosen = []
        done[root] = True
        current = root
        while True:
            row = adj[current]
            for v in g.neighbors(current):
                if not done[v] and (v not in key or row[v] <= key[v]):
                    key[v] = row[v]
                    attach[v] = current
            if not key:
                break
            nxt = min(key, key=lambda v: (key[v], v))
            w = key.pop(nxt)
            p = attach.pop(nxt)
            done[nxt] = True
            parent[nxt] = p
            depth[nxt] = depth[p] + 1
            order.append(nxt)
            a, b = edge_key(p, nxt)
            chosen.append((a, b, w))
            current = nxt
        trees.append(
            SpanningTree(
                vertices=tuple(sorted(order)),
                edges=tuple(sorted(chosen)),
                parent=parent,
                depth=depth,
            )
        )
    return trees


def fundamental_cycle(t: SpanningTree, e: Edge) -> Cycle:
    """The unique cycle of ``T + e``, for a non-tree edge ``e`` inside T's component."""
    u, v = edge_key(*e)
    if u not in t.depth or v not in t.depth:
        raise ValueError(f"edge {u}-{v} does not lie in this tree's component")
    if t.contains_edge(u, v):
        raise ValueError(f"edge {u}-{v} is a tree edge")
    return Cycle(tuple(t.path(u, v))).canonical()


def component_of(g: WeightedGraph, s: int) -> list[int]:
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(seen)
