"""Exact containment tests for paths, stars, linear forests, quasars, cycles and wheels.

All searches work on raw bitset rows restricted to an ``allowed`` vertex
mask, so neighbourhoods can be searched without building induced graphs.
Two symmetry devices keep the searches small on dense or highly symmetric
hosts:

* failure memos keyed on (used-vertex mask, endpoint), which turns path
  search into the usual subset dynamic programme over reachable states;
* twin pruning: among free vertices with identical neighbourhoods inside
  the allowed set, only the lowest-indexed one is ever branched on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .formulas import LinearForest
from .graph import SmallGraph, bits, components_within

# component size above which path search drops the state memo
DP_COMPONENT_CAP = 24


def _lower_twins(adj: Sequence[int], allowed: int) -> dict[int, int]:
    """Map each allowed vertex to the mask of lower-indexed twins in ``allowed``.

    Twins share their open neighbourhood (non-adjacent) or their closed
    neighbourhood (adjacent) within ``allowed``; swapping them is an
    automorphism of the induced subgraph.
    """
    open_seen: dict[int, int] = {}
    closed_seen: dict[int, int] = {}
    lower = {}
    for v in bits(allowed):
        nb = adj[v] & allowed
        closed = nb | (1 << v)
        lower[v] = open_seen.get(nb, 0) | closed_seen.get(closed, 0)
        open_seen[nb] = open_seen.get(nb, 0) | (1 << v)
        closed_seen[closed] = closed_seen.get(closed, 0) | (1 << v)
    return lower


def _prune_twins(cands: int, free: int, lower: dict[int, int]) -> int:
    out = 0
    for u in bits(cands):
        if not lower[u] & free:
            out |= 1 << u
    return out


# -- paths ------------------------------------------------------------

def _longest_in_component(adj: Sequence[int], comp: int, target: int) -> int:
    """Longest path order inside one component, stopping once ``target`` is reached."""
    size = comp.bit_count()
    goal = min(target, size)
    lower = _lower_twins(adj, comp)
    memo: dict[tuple[int, int], int] | None = {} if size <= DP_COMPONENT_CAP else None
    best = 0

    def extend(used: int, end: int) -> int:
        # vertices appendable after ``end``, capped at what still helps
        cap = goal - used.bit_count()
        if cap <= 0:
            return 0
        if memo is not None:
            key = (used, end)
            hit = memo.get(key)
            if hit is not None:
                return hit
        free = comp & ~used
        result = 0
        for u in bits(_prune_twins(adj[end] & free, free, lower)):
            got = 1 + extend(used | (1 << u), u)
            if got > result:
                result = got
                if result >= cap:
                    break
        if memo is not None:
            memo[key] = result
        return result

    for start in bits(_prune_twins(comp, comp, lower)):
        length = 1 + extend(1 << start, start)
        best = max(best, length)
        if best >= goal:
            break
    return best


def longest_path_order(g: SmallGraph, target: int | None = None) -> int:
    """Number of vertices on a longest simple path of ``g`` (0 for K_0).

    With ``target`` the search may stop as soon as a path of that order is
    found, in which case ``target`` is returned.
    """
    goal = g.order if target is None else min(target, g.order)
    best = 0
    comps = sorted(components_within(g.adj, g.vertex_mask), key=lambda c: -c.bit_count())
    for comp in comps:
        if comp.bit_count() <= best or best >= goal:
            break
        best = max(best, _longest_in_component(g.adj, comp, goal))
    return best


def contains_path(g: SmallGraph, n: int) -> bool:
    if n <= 1:
        return g.order >= n
    if n > g.order:
        return False
    if n == 2:
        return any(g.adj)
    if n == 3:
        return any(row.bit_count() >= 2 for row in g.adj)
    return longest_path_order(g, n) >= n


# -- stars ------------------------------------------------------------

def contains_star(g: SmallGraph, m: int) -> bool:
    return any(row.bit_count() >= m for row in g.adj)


def complement_contains_star(g: SmallGraph, m: int) -> bool:
    """Same as ``contains_star(g.complement(), m)`` without building the complement."""
    limit = g.order - 1 - m
    return any(row.bit_count() <= limit for row in g.adj)


# -- linear forests and quasars ------------------------------------------

def _forest_in(adj: Sequence[int], allowed: int, orders: Sequence[int]) -> bool:
    """Vertex-disjoint paths of the given orders inside ``allowed``."""
    orders = sorted(orders, reverse=True)
    ones = sum(1 for k in orders if k == 1)
    paths = [k for k in orders if k >= 2]
    demand = sum(orders)
    if allowed.bit_count() < demand:
        return False
    if not paths:
        return True
    lower = _lower_twins(adj, allowed)
    # remaining demand once component i is complete
    tail = [sum(paths[i + 1:]) + ones for i in range(len(paths))]
    failed: set[tuple[int, int, int]] = set()

    def place(used: int, idx: int, end: int, left: int) -> bool:
        # ``left`` more vertices go on component ``idx`` after ``end``;
        # end == -1 means the component has not started yet
        free = allowed & ~used
        if free.bit_count() < left + tail[idx]:
            return False
        if left == 0:
            if idx + 1 == len(paths):
                return True
            return place(used, idx + 1, -1, paths[idx + 1])
        key = (used, idx, end)
        if key in failed:
            return False
        cands = free if end < 0 else adj[end] & free
        for u in bits(_prune_twins(cands, free, lower)):
            if end < 0 and not adj[u] & free & ~(1 << u):
                continue
            if place(used | (1 << u), idx, u, left - 1):
                return True
        failed.add(key)
        return False

    return place(0, 0, -1, paths[0])


def linear_forest_embeds(g: SmallGraph, orders: Sequence[int]) -> bool:
    """True iff ``g`` has vertex-disjoint paths with exactly these orders."""
    if any(k < 1 for k in orders):
        raise ValueError(f"path orders must be >= 1, got {list(orders)}")
    return _forest_in(g.adj, g.vertex_mask, orders)


def contains_quasar(g: SmallGraph, forest: LinearForest) -> bool:
    """True iff some vertex's neighbourhood hosts the forest."""
    m = forest.total_order
    lower = _lower_twins(g.adj, g.vertex_mask)
    full = g.vertex_mask
    for v in bits(full):
        # a twin hub's neighbourhood is the image of this one under the swap
        if lower[v]:
            continue
        nb = g.adj[v]
        if nb.bit_count() >= m and _forest_in(g.adj, nb, forest.orders):
            return True
    return False


# -- cycles and wheels (oracle targets) ----------------------------------

def _cycle_in(adj: Sequence[int], allowed: int, length: int) -> bool:
    if length < 3 or allowed.bit_count() < length:
        return False
    failed: set[tuple[int, int]] = set()
    for start in bits(allowed):
        # cycles through ``start`` use only higher vertices
        higher = allowed & ~((2 << start) - 1)
        failed.clear()

        def walk(used: int, end: int, left: int) -> bool:
            if left == 0:
                return bool(adj[end] >> start & 1)
            key = (used, end)
            if key in failed:
                return False
            for u in bits(adj[end] & higher & ~used):
                if walk(used | (1 << u), u, left - 1):
                    return True
            failed.add(key)
            return False

        if walk(1 << start, start, length - 1):
            return True
    return False


def contains_cycle(g: SmallGraph, length: int) -> bool:
    """True iff ``g`` has a cycle on exactly ``length`` vertices."""
    return _cycle_in(g.adj, g.vertex_mask, length)


def contains_wheel(g: SmallGraph, rim: int) -> bool:
    return any(row.bit_count() >= rim and _cycle_in(g.adj, row, rim) for row in g.adj)


# -- target patterns ----------------------------------------------------

@dataclass(frozen=True)
class Path:
    n: int

    def found_in(self, g: SmallGraph) -> bool:
        return contains_path(g, self.n)

    def __str__(self) -> str:
        return f"path P_{self.n}"


@dataclass(frozen=True)
class Star:
    m: int

    def found_in(self, g: SmallGraph) -> bool:
        return contains_star(g, self.m)

    def in_complement(self, g: SmallGraph) -> bool:
        return complement_contains_star(g, self.m)

    def __str__(self) -> str:
        return f"star K_1,{self.m}"


@dataclass(frozen=True)
class Quasar:
    forest: LinearForest

    def found_in(self, g: SmallGraph) -> bool:
        return contains_quasar(g, self.forest)

    def __str__(self) -> str:
        return f"quasar K_1+[{self.forest}]"


@dataclass(frozen=True)
class Cycle:
    m: int

    def __post_init__(self) -> None:
        if self.m < 3:
            raise ValueError("cycle length must be >= 3")

    def found_in(self, g: SmallGraph) -> bool:
        return contains_cycle(g, self.m)

    def __str__(self) -> str:
        return f"cycle C_{self.m}"


@dataclass(frozen=True)
class Wheel:
    m: int

    def __post_init__(self) -> None:
        if self.m < 3:
            raise ValueError("wheel rim must be >= 3")

    def found_in(self, g: SmallGraph) -> bool:
        return contains_wheel(g, self.m)

    def __str__(self) -> str:
        return f"wheel W_{self.m}"


Target = Path | Star | Quasar | Cycle | Wheel


def complement_contains(g: SmallGraph, target: Target) -> bool:
    if isinstance(target, Star):
        return target.in_complement(g)
    return target.found_in(g.complement())
