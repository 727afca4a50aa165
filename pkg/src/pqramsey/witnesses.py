"""Lower-bound witness graphs and their mechanical verification.

A witness for R(P_n, H) > r-1 is a graph on r-1 vertices with no P_n whose
complement has no H.  All witnesses built here are disjoint unions of
cliques.
"""
from __future__ import annotations

from dataclasses import dataclass

from .detectors import Quasar, Star, Target, complement_contains, contains_path
from .formulas import LinearForest, t_closed
from .graph import SmallGraph, clique_union


class WitnessConsistencyError(RuntimeError):
    """A construction that should always exist could not be built."""


@dataclass(frozen=True)
class WitnessReport:
    graph: SmallGraph
    n: int
    target: Target
    no_path: bool
    no_target_in_complement: bool

    @property
    def claimed_bound(self) -> int:
        return self.graph.order + 1

    @property
    def valid(self) -> bool:
        return self.no_path and self.no_target_in_complement


def star_partition(n: int, m: int) -> list[int]:
    """Clique sizes for the path-star witness, largest first.

    Sizes lie in ``[max(r-m, 1), n-1]`` and sum to ``r-1`` where
    ``r = t_closed(n, m)``; the fewest parts are used, balanced to
    differ by at most one.
    """
    r = t_closed(n, m)
    total = r - 1
    lo, hi = max(r - m, 1), n - 1
    if lo > hi:
        raise WitnessConsistencyError(f"empty part range [{lo}, {hi}] for n={n}, m={m}")
    k = -(-total // hi)
    if k * lo > total:
        raise WitnessConsistencyError(f"{total} is not a sum of parts from [{lo}, {hi}] (n={n}, m={m})")
    q, extra = divmod(total, k)
    return [q + 1] * extra + [q] * (k - extra)


def star_witness(n: int, m: int) -> SmallGraph:
    return clique_union(star_partition(n, m))


def quasar_witness_sizes(n: int, forest: LinearForest) -> list[list[int]]:
    m = forest.total_order
    if not (n >= 2 and n + 1 <= m <= 2 * n - 1):
        raise ValueError(f"quasar witnesses need n+1 <= m <= 2n-1, got n={n}, m={m}")
    odd = forest.odd_count
    if (m - odd) % 2:
        raise WitnessConsistencyError(f"m - o(F) = {m - odd} is odd")
    half = (m - odd) // 2 - 1
    return [
        [n - 1, n - 1],
        [m // 2, (m + 1) // 2 - 1, (m + 1) // 2 - 1],
        [n - 1, half, half],
    ]


def quasar_witnesses(n: int, forest: LinearForest) -> list[SmallGraph]:
    """The three clique unions bounding R(P_n, K_1 + F) from below."""
    return [clique_union(sizes) for sizes in quasar_witness_sizes(n, forest)]


def verify_witness(g: SmallGraph, n: int, target: Target) -> WitnessReport:
    return WitnessReport(
        graph=g,
        n=n,
        target=target,
        no_path=not contains_path(g, n),
        no_target_in_complement=not complement_contains(g, target),
    )


def star_report(n: int, m: int) -> WitnessReport:
    return verify_witness(star_witness(n, m), n, Star(m))


def quasar_reports(n: int, forest: LinearForest) -> list[WitnessReport]:
    target = Quasar(forest)
    return [verify_witness(g, n, target) for g in quasar_witnesses(n, forest)]
