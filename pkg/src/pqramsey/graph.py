"""Small undirected simple graphs stored as per-vertex bitset rows.

A :class:`SmallGraph` is immutable.  Row ``adj[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge.  Orders are capped at :data:`MAX_ORDER` so that
every row fits one machine word.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class GraphFormatError(ValueError):
    """Raised when a graph6 string cannot be decoded."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SmallGraph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.order <= MAX_ORDER:
            raise ValueError(f"order {self.order} outside [0, {MAX_ORDER}]")
        if len(self.adj) != self.order:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond the order")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    # -- constructors -------------------------------------------------

    @classmethod
    def _trusted(cls, order: int, adj: tuple[int, ...]) -> "SmallGraph":
        # skips validation; callers guarantee symmetry and range
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "SmallGraph":
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge {u}-{v} outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> "SmallGraph":
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> "SmallGraph":
        full = (1 << order) - 1
        return cls(order, tuple(full ^ (1 << v) for v in range(order)))

    @classmethod
    def path(cls, order: int) -> "SmallGraph":
        return cls.from_edges(order, ((i, i + 1) for i in range(order - 1)))

    @classmethod
    def cycle(cls, order: int) -> "SmallGraph":
        if order < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(order, ((i, (i + 1) % order) for i in range(order)))

    @classmethod
    def star(cls, leaves: int) -> "SmallGraph":
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def wheel(cls, rim: int) -> "SmallGraph":
        """Hub 0 joined to every vertex of the cycle 1..rim."""
        cyc = [(i, i % rim + 1) for i in range(1, rim + 1)]
        return cls.from_edges(rim + 1, cyc + [(0, i) for i in range(1, rim + 1)])

    # -- queries ------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v, row in enumerate(self.adj) for u in bits(row >> (v + 1) << (v + 1))]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    # -- derived graphs -----------------------------------------------

    def complement(self) -> "SmallGraph":
        full = self.vertex_mask
        return SmallGraph._trusted(self.order, tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)))

    def induced(self, vertices: Sequence[int]) -> "SmallGraph":
        """Subgraph induced on ``vertices``, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return SmallGraph._trusted(len(vertices), tuple(rows))

    def relabel(self, order: Sequence[int]) -> "SmallGraph":
        """Graph whose vertex ``i`` is old vertex ``order[i]``."""
        if sorted(order) != list(range(self.order)):
            raise ValueError("relabel needs a permutation of all vertices")
        return self.induced(order)

    def add_vertex(self, neighborhood: int) -> "SmallGraph":
        """Append a new vertex adjacent to the vertices in bitset ``neighborhood``."""
        new = self.order
        rows = tuple(row | (1 << new) if neighborhood >> v & 1 else row for v, row in enumerate(self.adj))
        if new >= MAX_ORDER or neighborhood >> new:
            raise ValueError("neighborhood outside the current vertex range")
        return SmallGraph._trusted(new + 1, rows + (neighborhood,))

    def disjoint_union(self, other: "SmallGraph") -> "SmallGraph":
        shift = self.order
        return SmallGraph(self.order + other.order, self.adj + tuple(row << shift for row in other.adj))

    # -- decomposition ------------------------------------------------

    def components(self) -> list[int]:
        return components_within(self.adj, self.vertex_mask)

    def odd_component_count(self) -> int:
        return sum(1 for comp in self.components() if comp.bit_count() % 2)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __repr__(self) -> str:
        return f"SmallGraph(order={self.order}, edges={self.edges()})"


def components_within(adj: Sequence[int], allowed: int) -> list[int]:
    """Connected components of the subgraph induced on ``allowed``.

    Components come back as bitsets, ordered by their least vertex.
    """
    comps = []
    remaining = allowed
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            grow &= allowed & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        remaining &= ~comp
    return comps


def clique_union(sizes: Iterable[int]) -> SmallGraph:
    """Disjoint union of complete graphs; zero sizes are dropped."""
    sizes = [s for s in sizes if s]
    if any(s < 0 for s in sizes):
        raise ValueError("clique sizes must be non-negative")
    total = sum(sizes)
    if total > MAX_ORDER:
        raise ValueError(f"clique union of order {total} exceeds the {MAX_ORDER}-vertex cap")
    g = SmallGraph.empty(0)
    for s in sizes:
        g = g.disjoint_union(SmallGraph.complete(s))
    return g


# -- graph6 -----------------------------------------------------------

def _size_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def graph6_encode(g: SmallGraph) -> bytes:
    """Encode without the optional ``>>graph6<<`` header or trailing newline."""
    upper = [g.adj[j] >> i & 1 for j in range(1, g.order) for i in range(j)]
    upper += [0] * (-len(upper) % 6)
    body = bytes(
        63 + sum(bit << (5 - k) for k, bit in enumerate(upper[i:i + 6]))
        for i in range(0, len(upper), 6)
    )
    return _size_header(g.order) + body


def graph6_decode(data: bytes | str) -> SmallGraph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if data.endswith(b"\n"):
        data = data[:-1]
    if not data:
        raise GraphFormatError("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise GraphFormatError("graph6 bytes must lie in 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise GraphFormatError("malformed graph6 size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= 62:
            raise GraphFormatError("long size header used for order below 63")
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_ORDER:
        raise GraphFormatError(f"graph6 order {n} exceeds the {MAX_ORDER}-vertex cap")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) < need:
        raise GraphFormatError(f"graph6 body too short: {len(body)} < {need} bytes")
    if len(body) > need:
        raise GraphFormatError(f"{len(body) - need} trailing bytes after graph6 body")
    stream = [(c - 63) >> (5 - k) & 1 for c in body for k in range(6)]
    if any(stream[nbits:]):
        raise GraphFormatError("non-zero graph6 padding bits")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return SmallGraph(n, tuple(rows))


def dot_export(g: SmallGraph, label: str = "G") -> str:
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    lines = [f'graph "{escaped}" {{']
    lines += [f"  {v};" for v in range(g.order)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def describe(g: SmallGraph) -> str:
    """Short human label such as ``2K_2 + K_1`` when ``g`` is a clique union."""
    comps = g.components()
    if not comps:
        return "K_0"
    sizes = []
    for comp in comps:
        k = comp.bit_count()
        if any((g.adj[v] & comp).bit_count() != k - 1 for v in bits(comp)):
            return f"graph on {g.order} vertices, {g.edge_count()} edges"
        sizes.append(k)
    parts = []
    for k in sorted(set(sizes), reverse=True):
        c = sizes.count(k)
        parts.append(f"{c if c > 1 else ''}K_{k}")
    return " + ".join(parts)
