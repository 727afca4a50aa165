"""Canonical relabelling for graphs of up to about a dozen vertices.

Disconnected graphs and graphs with disconnected complements are split and
their parts canonized recursively, which keeps the highly symmetric clique
unions and complete multipartite graphs cheap.  What remains (connected and
co-connected) goes through individualization-refinement; the canonical
labelling is the leaf with the lexicographically least relabelled rows.
"""
from __future__ import annotations

from typing import Sequence

from .graph import SmallGraph, bits, components_within


def _rows(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        row = 0
        for u in bits(adj[v]):
            i = pos.get(u)
            if i is not None:
                row |= 1 << i
        out.append(row)
    return tuple(out)


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Coarsest equitable refinement; new cells are ordered by neighbour counts."""
    while True:
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                sig = tuple((adj[v] & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            out.extend(groups[sig] for sig in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _search(adj: Sequence[int], mask: int) -> list[int]:
    best_code: tuple[int, ...] | None = None
    best_order: list[int] = []

    def visit(cells: list[int]) -> None:
        nonlocal best_code, best_order
        target = -1
        for i, cell in enumerate(cells):
            size = cell.bit_count()
            if size > 1 and (target < 0 or size < cells[target].bit_count()):
                target = i
        if target < 0:
            order = [c.bit_length() - 1 for c in cells]
            code = _rows(adj, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        for v in bits(cell):
            split = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            visit(_refine(adj, split))

    visit(_refine(adj, [mask]))
    return best_order


def _canonical_order(adj: Sequence[int], mask: int) -> list[int]:
    if mask & (mask - 1) == 0:
        return list(bits(mask))
    for rows in (adj, None):
        if rows is None:
            # complement restricted to mask
            rows = [mask & ~adj[v] & ~(1 << v) if mask >> v & 1 else 0 for v in range(len(adj))]
        parts = components_within(rows, mask)
        if len(parts) > 1:
            keyed = []
            for part in parts:
                order = _canonical_order(rows, part)
                keyed.append((part.bit_count(), _rows(rows, order), order))
            keyed.sort(key=lambda item: item[:2])
            return [v for _, _, order in keyed for v in order]
    return _search(adj, mask)


def canonical_order(g: SmallGraph) -> list[int]:
    """Vertex sequence such that ``g.relabel(order)`` is the same for all isomorphic ``g``."""
    return _canonical_order(g.adj, g.vertex_mask)


def canonical_form(g: SmallGraph) -> SmallGraph:
    return g.relabel(canonical_order(g))


def are_isomorphic(g: SmallGraph, h: SmallGraph) -> bool:
    return g.order == h.order and canonical_form(g).adj == canonical_form(h).adj
