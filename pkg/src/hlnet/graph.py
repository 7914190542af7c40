"""Compact immutable graphs with bitset vertex sets.

Vertices are dense integer indices ``0..order-1``.  A :class:`VertexSet` is a
Python integer used as a bitset (bit ``v`` set iff vertex ``v`` is a member)
tagged with the capacity of the graph it belongs to.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 1 << 20
# above this order bit rows are not materialized; list traversal is used instead
_ROW_LIMIT = 1 << 14


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class VertexSet:
    """Fixed-capacity bitset over the vertex indices of one graph."""

    bits: int
    capacity: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.capacity:
            raise ValueError(f"bits exceed capacity {self.capacity}")

    @classmethod
    def empty(cls, capacity: int) -> VertexSet:
        return cls(0, capacity)

    @classmethod
    def full(cls, capacity: int) -> VertexSet:
        return cls((1 << capacity) - 1, capacity)

    @classmethod
    def of(cls, capacity: int, vertices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < capacity:
                raise ValueError(f"vertex {v} out of range for capacity {capacity}")
            bits |= 1 << v
        return cls(bits, capacity)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.capacity and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: VertexSet) -> None:
        if self.capacity != other.capacity:
            raise ValueError(f"capacity mismatch: {self.capacity} vs {other.capacity}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits | other.bits, self.capacity)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits & other.bits, self.capacity)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.capacity)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.capacity) - 1) & ~self.bits, self.capacity)

    def min(self) -> int:
        if not self.bits:
            raise ValueError("empty vertex set")
        return (self.bits & -self.bits).bit_length() - 1

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, capacity={self.capacity})"


class CompactGraph:
    """Immutable simple undirected graph on vertices ``0..order-1``.

    ``neighbors[v]`` lists the neighbours of ``v``; bitset rows are derived
    lazily.  Labels, when given, are decoration only.
    """

    def __init__(self, order: int, neighbors: Sequence[Iterable[int]], labels: Sequence[str] | None = None):
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"order {order} outside [0, {MAX_ORDER}]")
        if len(neighbors) != order:
            raise ValueError("need one neighbour list per vertex")
        nbrs = tuple(tuple(sorted(set(ns))) for ns in neighbors)
        for u, ns in enumerate(nbrs):
            for v in ns:
                if not 0 <= v < order:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
        lookup = [frozenset(ns) for ns in nbrs]
        for u, ns in enumerate(nbrs):
            for v in ns:
                if u not in lookup[v]:
                    raise ValueError(f"asymmetric adjacency: {u}->{v} without {v}->{u}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != order:
                raise ValueError("label count must equal order")
            if len(set(labels)) != order:
                raise ValueError("labels must be pairwise distinct")
        self.order = order
        self._nbrs = nbrs
        self.labels = labels

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> CompactGraph:
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(order, adj, labels)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitset of every vertex."""
        out = []
        for ns in self._nbrs:
            bits = 0
            for v in ns:
                bits |= 1 << v
            out.append(bits)
        return tuple(out)

    def adjacency(self, v: int) -> VertexSet:
        return VertexSet(self.rows[v], self.order)

    def has_edge(self, u: int, v: int) -> bool:
        if self.order <= _ROW_LIMIT:
            return bool(self.rows[u] >> v & 1)
        return v in self._adj_lookup[u]

    @cached_property
    def _adj_lookup(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(ns) for ns in self._nbrs)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, ns in enumerate(self._nbrs) for v in ns if u < v]

    @property
    def size(self) -> int:
        return sum(len(ns) for ns in self._nbrs) // 2

    def regular_degree(self) -> int | None:
        degs = {len(ns) for ns in self._nbrs}
        return degs.pop() if len(degs) == 1 else None

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.order, vertices)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels or ())}

    def induced(self, vertices: Sequence[int]) -> CompactGraph:
        """Subgraph induced on ``vertices``, re-indexed in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        nbrs = [[pos[w] for w in self._nbrs[v] if w in pos] for v in vertices]
        labels = [self.labels[v] for v in vertices] if self.labels is not None else None
        return CompactGraph(len(vertices), nbrs, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompactGraph):
            return NotImplemented
        return self.order == other.order and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self.order, self._nbrs))

    def __repr__(self) -> str:
        return f"CompactGraph(order={self.order}, size={self.size})"


def _check_capacity(G: CompactGraph, U: VertexSet) -> None:
    if U.capacity != G.order:
        raise ValueError(f"vertex set capacity {U.capacity} does not match graph order {G.order}")


def neighborhood(G: CompactGraph, U: VertexSet) -> VertexSet:
    """Union of the neighbourhoods of the members of ``U``, minus ``U``."""
    _check_capacity(G, U)
    bits = 0
    if G.order <= _ROW_LIMIT:
        rows = G.rows
        for v in U:
            bits |= rows[v]
    else:
        seen = set()
        for v in U:
            seen.update(G.neighbors(v))
        for w in seen:
            bits |= 1 << w
    return VertexSet(bits & ~U.bits, G.order)


def _component_of(G: CompactGraph, start: int, allowed: int) -> int:
    """Bitset of the component of ``start`` inside the vertex bitset ``allowed``."""
    comp = 1 << start
    if G.order <= _ROW_LIMIT:
        rows = G.rows
        frontier = comp
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= rows[v]
            frontier = reach & allowed & ~comp
            comp |= frontier
        return comp
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in G.neighbors(v):
            if w not in seen and allowed >> w & 1:
                seen.add(w)
                queue.append(w)
    comp = 0
    for w in seen:
        comp |= 1 << w
    return comp


def components(G: CompactGraph, removed: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``G - removed``.

    Sorted by size descending, then by least member ascending.
    """
    if removed is None:
        removed = VertexSet.empty(G.order)
    _check_capacity(G, removed)
    rest = ((1 << G.order) - 1) & ~removed.bits
    parts = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = _component_of(G, start, rest)
        parts.append(VertexSet(comp, G.order))
        rest &= ~comp
    parts.sort(key=lambda p: (-len(p), p.min()))
    return parts


def is_connected_induced(G: CompactGraph, U: VertexSet) -> bool:
    """True iff ``G[U]`` is connected.  The empty set counts as connected."""
    _check_capacity(G, U)
    if not U:
        return True
    return _component_of(G, U.min(), U.bits) == U.bits


def girth(G: CompactGraph, roots: Iterable[int] | None = None) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests.

    BFS from every vertex by default.  For a vertex-transitive graph a single
    root is exact, so Cayley graphs may pass ``roots=[0]``.
    """
    best = float("inf")
    for r in range(G.order) if roots is None else roots:
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def common_neighbors(G: CompactGraph, u: int, w: int) -> VertexSet:
    if u == w:
        raise ValueError("common neighbours need two distinct vertices")
    if G.order <= _ROW_LIMIT:
        return VertexSet(G.rows[u] & G.rows[w], G.order)
    return G.vertex_set(set(G.neighbors(u)) & set(G.neighbors(w)))


def max_common_neighbors(G: CompactGraph) -> int:
    """Largest number of common neighbours over all vertex pairs.

    Pairs without a common neighbour contribute zero, so only pairs at
    distance two are examined.
    """
    best = 0
    for v in range(G.order):
        counts: dict[int, int] = {}
        for u in G.neighbors(v):
            for w in G.neighbors(u):
                if w != v:
                    counts[w] = counts.get(w, 0) + 1
        if counts:
            best = max(best, max(counts.values()))
    return best


@dataclass(frozen=True)
class ShapeClass:
    """Shape of a connected induced subgraph.

    ``kind`` is one of ``star``, ``path``, ``cycle``, ``other``.  ``anchors``
    holds the centre of a star or the two endpoints of a path.
    """

    kind: str
    anchors: tuple[int, ...] = ()

    @classmethod
    def star(cls, center: int) -> ShapeClass:
        return cls("star", (center,))

    @classmethod
    def path(cls, a: int, b: int) -> ShapeClass:
        return cls("path", tuple(sorted((a, b))))

    @property
    def is_star(self) -> bool:
        return self.kind == "star"

    def __str__(self) -> str:
        if self.anchors:
            return f"{self.kind}({','.join(map(str, self.anchors))})"
        return self.kind


def classify_induced(G: CompactGraph, U: VertexSet) -> ShapeClass:
    """Classify the connected induced subgraph ``G[U]``.

    Stars take precedence: a single vertex, a single edge and a 2-edge path
    are all reported as stars (``K_{1,0}``, ``K_{1,1}``, ``K_{1,2}``).
    """
    _check_capacity(G, U)
    if not U:
        raise ValueError("cannot classify an empty vertex set")
    if not is_connected_induced(G, U):
        raise ValueError("induced subgraph is disconnected")
    members = U.to_list()
    m = len(members)
    deg = {v: (G.rows[v] & U.bits).bit_count() if G.order <= _ROW_LIMIT
           else sum(1 for w in G.neighbors(v) if w in U) for v in members}
    n_edges = sum(deg.values()) // 2
    if m == 1:
        return ShapeClass.star(members[0])
    if n_edges == m - 1:
        hubs = [v for v in members if deg[v] == m - 1]
        if hubs:
            return ShapeClass.star(hubs[0])
        ends = [v for v in members if deg[v] == 1]
        if len(ends) == 2 and all(deg[v] in (1, 2) for v in members):
            return ShapeClass.path(*ends)
        return ShapeClass("other")
    if n_edges == m and m >= 3 and all(d == 2 for d in deg.values()):
        return ShapeClass("cycle")
    return ShapeClass("other")


def check_isomorphism_by_map(G: CompactGraph, H: CompactGraph, bijection: Sequence[int]) -> bool:
    """True iff ``bijection`` (index map ``V(G) -> V(H)``) is an isomorphism.

    Checks all pairs: every edge maps to an edge and the edge counts agree,
    which together with injectivity gives the converse direction.
    """
    if G.order != H.order:
        raise ValueError("orders differ")
    if len(bijection) != G.order or sorted(bijection) != list(range(H.order)):
        raise ValueError("map is not a bijection onto V(H)")
    if G.size != H.size:
        return False
    return all(H.has_edge(bijection[u], bijection[v]) for u, v in G.edges())


def induced_edge_count(G: CompactGraph, U: VertexSet) -> int:
    return sum(1 for u, v in combinations(U.to_list(), 2) if G.has_edge(u, v))
