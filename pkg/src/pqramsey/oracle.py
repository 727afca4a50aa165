"""Exhaustive Ramsey search over small graphs, independent of every formula.

R(P_n, H) is the least r such that no graph on r vertices is *good*, where
good means: no P_n inside, and no H inside the complement.  Both halves of
that condition survive deletion of a vertex, so the good graphs form a
hereditary class and can be grown one vertex at a time: every good graph on
k+1 vertices is a one-vertex extension of a good graph on k vertices.  Each
level is deduplicated by canonical form, so the level lists hold exactly one
graph per isomorphism class.  R is the first empty level.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path as FilePath
from typing import Callable, Iterable, Iterator, NamedTuple, Optional

from .canonical import canonical_form
from .detectors import Star, Target, complement_contains, contains_path
from .graph import SmallGraph, graph6_encode

HARD_CAP = 10


class CapacityError(RuntimeError):
    """The requested order exceeds the hard cap or the caller's cap."""

    def __init__(self, msg: str, counterexample: Optional[SmallGraph] = None):
        super().__init__(msg)
        self.counterexample = counterexample


class Arrow(NamedTuple):
    holds: bool
    counterexample: Optional[SmallGraph]


@dataclass(frozen=True)
class OracleResult:
    n: int
    target: Target
    ramsey_value: int
    counterexample: SmallGraph
    graphs_examined: int
    elapsed: float

    def log_record(self) -> dict:
        return {
            "n": self.n,
            "target": str(self.target),
            "r": self.ramsey_value,
            "value": self.ramsey_value,
            "counterexample": graph6_encode(self.counterexample).decode(),
            "graphs_examined": self.graphs_examined,
            "wall_time": round(self.elapsed, 6),
        }


def _check_order(r: int) -> None:
    if r > HARD_CAP:
        raise CapacityError(f"order {r} exceeds the hard cap of {HARD_CAP} vertices")


def _all_subsets(parent: SmallGraph) -> Iterator[int]:
    return iter(range(1 << parent.order))


def _star_subsets(parent: SmallGraph, m: int) -> Iterator[int]:
    """Neighbourhoods that keep every complement degree below ``m``."""
    k = parent.order
    # old vertices at the limit must see the new vertex
    forced = 0
    for v, row in enumerate(parent.adj):
        if k - 1 - row.bit_count() >= m - 1:
            forced |= 1 << v
    free = ((1 << k) - 1) & ~forced
    least = k - m + 1
    sub = free
    while True:
        s = forced | sub
        if s.bit_count() >= least:
            yield s
        if sub == 0:
            break
        sub = (sub - 1) & free


def _expand(parents: list[SmallGraph], n: int, target: Optional[Target]) -> tuple[dict, int]:
    """Canonical good children of ``parents``; ``target=None`` means P_n-free only."""
    seen: dict[tuple[int, ...], SmallGraph] = {}
    examined = 0
    star = target.m if isinstance(target, Star) else None
    for parent in parents:
        subsets = _star_subsets(parent, star) if star is not None else _all_subsets(parent)
        for s in subsets:
            child = parent.add_vertex(s)
            examined += 1
            if contains_path(child, n):
                continue
            if target is not None and star is None and complement_contains(child, target):
                continue
            canon = canonical_form(child)
            seen.setdefault(canon.adj, canon)
    return seen, examined


def _chunks(items: list, count: int) -> list[list]:
    return [items[i::count] for i in range(count)]


class GoodGraphLevels:
    """Level-by-level list of good graphs for one (n, target) query.

    ``target=None`` restricts only by P_n-freeness.  With ``workers > 1``
    each level is split across processes; merging is order-independent
    and the merged level is sorted, so results do not depend on
    ``workers``.
    """

    def __init__(self, n: int, target: Optional[Target], workers: int = 1):
        if n < 2:
            raise ValueError(f"path order must be >= 2, got {n}")
        self.n = n
        self.target = target
        self.workers = max(1, workers)
        self.levels: list[list[SmallGraph]] = [[SmallGraph.empty(0)]]
        self.examined = 0

    def level(self, k: int) -> list[SmallGraph]:
        _check_order(k)
        while len(self.levels) <= k:
            self.levels.append(self._grow(self.levels[-1]))
        return self.levels[k]

    def _grow(self, parents: list[SmallGraph]) -> list[SmallGraph]:
        if not parents:
            return []
        if self.workers == 1 or len(parents) < 2 * self.workers:
            seen, examined = _expand(parents, self.n, self.target)
        else:
            seen, examined = {}, 0
            with ProcessPoolExecutor(self.workers) as pool:
                jobs = [pool.submit(_expand, chunk, self.n, self.target) for chunk in _chunks(parents, self.workers)]
                for job in jobs:
                    part, count = job.result()
                    for key, g in part.items():
                        seen.setdefault(key, g)
                    examined += count
        self.examined += examined
        return [seen[key] for key in sorted(seen)]


def pick_counterexample(graphs: Iterable[SmallGraph]) -> SmallGraph:
    """Densest graph first, ties broken by least graph6 string."""
    return min(graphs, key=lambda g: (-g.edge_count(), graph6_encode(g)))


def enumerate_pn_free(r: int, n: int, workers: int = 1) -> Iterator[SmallGraph]:
    """One graph per isomorphism class on ``r`` vertices with no path on ``n`` vertices."""
    yield from GoodGraphLevels(n, None, workers).level(r)


def enumerate_good(r: int, n: int, target: Target, workers: int = 1) -> Iterator[SmallGraph]:
    """Isomorphism classes on ``r`` vertices with no P_n and no ``target`` in the complement."""
    yield from GoodGraphLevels(n, target, workers).level(r)


def arrows(r: int, n: int, target: Target, workers: int = 1) -> Arrow:
    """Does every graph on ``r`` vertices hold P_n or have ``target`` in its complement?"""
    _check_order(r)
    good = GoodGraphLevels(n, target, workers).level(r)
    if good:
        return Arrow(False, pick_counterexample(good))
    return Arrow(True, None)


def ramsey_exact(
    n: int,
    target: Target,
    r_cap: int = 9,
    workers: int = 1,
    log: Optional[FilePath | str] = None,
    progress: Optional[Callable[[int, int], None]] = None,
) -> OracleResult:
    """Least r <= r_cap such that ``arrows(r, n, target)`` holds.

    ``progress(k, size)`` is called after each level is built.
    """
    _check_order(r_cap)
    started = time.perf_counter()
    levels = GoodGraphLevels(n, target, workers)
    previous = levels.level(0)
    for r in range(1, r_cap + 1):
        current = levels.level(r)
        if progress:
            progress(r, len(current))
        if not current:
            result = OracleResult(
                n, target, r, pick_counterexample(previous), levels.examined, time.perf_counter() - started
            )
            if log is not None:
                append_log(log, result)
            return result
        previous = current
    raise CapacityError(
        f"R(P_{n}, {target}) exceeds the cap {r_cap}: good graphs exist on {r_cap} vertices",
        pick_counterexample(previous),
    )


def append_log(path: FilePath | str, result: OracleResult) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(result.log_record(), sort_keys=True) + "\n")


def read_log(path: FilePath | str) -> list[dict]:
    path = FilePath(path)
    if not path.exists():
        return []
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def certify(g: SmallGraph, n: int, target: Target) -> bool:
    """True iff ``g`` shows R(P_n, target) > g.order."""
    return not contains_path(g, n) and not complement_contains(g, target)


__all__ = [
    "Arrow",
    "CapacityError",
    "GoodGraphLevels",
    "HARD_CAP",
    "OracleResult",
    "append_log",
    "arrows",
    "certify",
    "enumerate_good",
    "enumerate_pn_free",
    "pick_counterexample",
    "ramsey_exact",
    "read_log",
]
