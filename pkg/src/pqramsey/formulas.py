"""Closed forms, recursions and bounds for R(P_n, H) with H a star or quasar.

Notation used throughout: ``n`` is the order of the path P_n; for stars ``m``
is the number of leaves of K_{1,m}; for quasars K_1 + F the forest F has ``m``
vertices in total.  Every function works in exact integer arithmetic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# -- data types -------------------------------------------------------

@dataclass(frozen=True)
class LinearForest:
    """Disjoint union of paths, kept as path orders sorted descending.

    The forest must carry at least one edge (some order >= 2); isolated
    vertices may pad it.
    """

    orders: tuple[int, ...]

    def __init__(self, orders: Iterable[int]):
        orders = tuple(sorted((int(k) for k in orders), reverse=True))
        _require(all(k >= 1 for k in orders), f"path orders must be >= 1, got {orders}")
        _require(bool(orders) and orders[0] >= 2, f"forest {orders} has no edge")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def parse(cls, text: str) -> "LinearForest":
        """Parse ``"3,2,2"`` or the fan shorthand ``"4x2"`` (four copies of P_2).

        Terms may be mixed: ``"2x3,1"`` is P_3 + P_3 + P_1.
        """
        orders: list[int] = []
        for term in text.replace(" ", "").split(","):
            match = re.fullmatch(r"(?:(\d+)x)?(\d+)", term)
            if not match:
                raise ValueError(f"cannot parse forest term {term!r}")
            copies = int(match.group(1)) if match.group(1) else 1
            orders += [int(match.group(2))] * copies
        return cls(orders)

    @classmethod
    def fan(cls, copies: int) -> "LinearForest":
        return cls([2] * copies)

    @property
    def total_order(self) -> int:
        return sum(self.orders)

    @property
    def odd_count(self) -> int:
        return sum(1 for k in self.orders if k % 2)

    def __str__(self) -> str:
        return ",".join(map(str, self.orders))


@dataclass(frozen=True)
class RamseyAnswer:
    """An exact value, or a ``[lower, upper]`` pair when only bounds are known.

    ``source`` names the result that produced the answer.  Bounded answers
    may carry the conjectured exact value.
    """

    lower: int
    upper: int
    source: str
    is_exact: bool = False
    conjectured: Optional[int] = None

    def __post_init__(self) -> None:
        _require(1 <= self.lower <= self.upper, f"bad bounds [{self.lower}, {self.upper}]")
        _require(not self.is_exact or self.lower == self.upper, "exact answer with a gap")

    @classmethod
    def exact(cls, value: int, source: str) -> "RamseyAnswer":
        return cls(value, value, source, is_exact=True)

    @classmethod
    def bounds(cls, lower: int, upper: int, source: str, conjectured: Optional[int] = None) -> "RamseyAnswer":
        return cls(lower, upper, source, conjectured=conjectured)

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"only bounds are known: [{self.lower}, {self.upper}]")
        return self.lower

    def __contains__(self, r: int) -> bool:
        return self.lower <= r <= self.upper

    def __str__(self) -> str:
        if self.is_exact:
            return f"{self.lower} ({self.source})"
        text = f"BOUNDS [{self.lower},{self.upper}] ({self.source})"
        if self.conjectured is not None:
            text += f"; conjectured {self.conjectured}"
        return text


# -- interval-sum language --------------------------------------------

def interval_sum_contains(t: int, s: int, e: int) -> bool:
    """True iff ``t`` is a finite sum of integers drawn from ``[max(s, 1), e]``.

    The empty sum is allowed, so 0 always qualifies.
    """
    if t < 0:
        return False
    if t == 0:
        return True
    s = max(s, 1)
    if s > e:
        return False
    # t is a k-term sum iff k*s <= t <= k*e
    return _ceil_div(t, e) <= t // s


# -- path versus star -------------------------------------------------

def _check_path_star(n: int, m: int) -> None:
    _require(n >= 2 and m >= 2, f"need n >= 2 and m >= 2, got n={n}, m={m}")


def t_closed(n: int, m: int) -> int:
    _check_path_star(n, m)
    beta = _ceil_div(m - 1, n - 1)
    # (m-1)/(n-1) <= beta^2/(beta+1), cross-multiplied
    if (m - 1) * (beta + 1) <= beta * beta * (n - 1):
        return (n - 1) * beta + 1
    return (m - 1) // beta + m


def t_min_char(n: int, m: int) -> int:
    """Least ``t >= 1`` that is not a sum of integers from ``[t-m+1, n-1]``."""
    _check_path_star(n, m)
    t = 1
    while interval_sum_contains(t, t - m + 1, n - 1):
        t += 1
        if t > m + n - 1:
            raise AssertionError(f"no admissible t <= m+n-1 for n={n}, m={m}")
    return t


@lru_cache(maxsize=None)
def _parsons(n: int, m: int) -> int:
    if n == 2:
        return m + 1
    if m <= _ceil_div(n, 2):
        return n
    if m <= n:
        return 2 * m - 1
    return max(_parsons(n - 1, m), _parsons(n, m - n + 1) + n - 1)


def parsons_path_star(n: int, m: int) -> int:
    """Path-star Ramsey number from the classical three-case recursion."""
    _check_path_star(n, m)
    return _parsons(n, m)


def path_star(n: int, m: int, check: bool = False) -> int:
    """R(P_n, K_{1,m}).  With ``check`` the two independent routes must agree."""
    value = t_closed(n, m)
    if check:
        alt = (t_min_char(n, m), parsons_path_star(n, m))
        if alt != (value, value):
            raise AssertionError(f"characterizations disagree at n={n}, m={m}: {value} vs {alt}")
    return value


# -- reference formulas for cycles and wheels ---------------------------

def path_cycle(n: int, m: int) -> int:
    """R(P_n, C_m)."""
    _require(n >= 2 and m >= 3, f"need n >= 2 and m >= 3, got n={n}, m={m}")
    if n >= m:
        return 2 * n - 1 if m % 2 else n + m // 2 - 1
    if m % 2:
        return max(m + n // 2 - 1, 2 * n - 1)
    return m + n // 2 - 1


def path_wheel(n: int, m: int) -> int:
    """R(P_n, W_m) where the wheel has a rim of ``m`` vertices.

    The middle range is only valid from n = 3 on: at n = 2, m = 4 this
    returns 4 while exhaustive search gives R(P_2, W_4) = 5.
    """
    _require(n >= 2 and m >= 3, f"need n >= 2 and m >= 3, got n={n}, m={m}")
    if m <= n + 1:
        return 3 * n - 2 if m % 2 else 2 * n - 1
    if m <= 2 * n:
        return 3 * n - 2 if m % 2 else m + n - 2
    return t_closed(n, m)


# -- path versus quasar -----------------------------------------------

def quasar_lower_bound(n: int, forest: LinearForest) -> int:
    m = forest.total_order
    return max(2 * n - 1, _ceil_div(3 * m, 2) - 1, m + n - forest.odd_count - 2)


def path_quasar(n: int, forest: LinearForest) -> RamseyAnswer:
    """R(P_n, K_1 + F), exact where known and bounded otherwise."""
    _require(n >= 2, f"need n >= 2, got n={n}")
    m = forest.total_order
    if m <= n:
        return RamseyAnswer.exact(2 * n - 1, "quasar, small forest")
    if m >= 2 * n:
        return RamseyAnswer.exact(t_closed(n, m), "quasar, large forest")
    if forest.odd_count == 0:
        return RamseyAnswer.exact(m + n - 2, "quasar, even components")
    return RamseyAnswer.bounds(
        quasar_lower_bound(n, forest),
        m + n - 2 + m % 2,
        "quasar bounds",
        conjectured=conjecture_value(n, forest),
    )


def conjecture_value(n: int, forest: LinearForest) -> int:
    """Conjectured R(P_n, K_1 + F) for ``n+1 <= m <= 2n-1`` (unproven)."""
    m = forest.total_order
    _require(n + 1 <= m <= 2 * n - 1, f"conjecture covers n+1 <= m <= 2n-1, got n={n}, m={m}")
    return quasar_lower_bound(n, forest)


def path_fan(n: int, k: int) -> RamseyAnswer:
    """R(P_n, K_1 + kK_2); the fan's forest has 2k vertices."""
    _require(n >= 2 and k >= 1, f"need n >= 2 and k >= 1, got n={n}, k={k}")
    return path_quasar(n, LinearForest.fan(k))


# -- grid consistency ---------------------------------------------------

@dataclass(frozen=True)
class GridMismatch:
    n: int
    m: int
    values: dict[str, int]

    def __str__(self) -> str:
        shown = ", ".join(f"{name}={v}" for name, v in self.values.items())
        return f"n={self.n}, m={self.m}: {shown}"


STAR_ROUTES = {
    "closed form": t_closed,
    "least non-sum": t_min_char,
    "recursion": parsons_path_star,
}


def compare_routes(n_max: int, m_max: int, routes: Optional[dict] = None) -> tuple[int, Optional[GridMismatch]]:
    """Evaluate every route on ``2 <= n <= n_max, 2 <= m <= m_max``.

    Returns the number of cells checked and the first disagreement, if any
    (cells are visited row by row).
    """
    routes = STAR_ROUTES if routes is None else routes
    cells = 0
    for n in range(2, n_max + 1):
        for m in range(2, m_max + 1):
            cells += 1
            values = {name: fn(n, m) for name, fn in routes.items()}
            if len(set(values.values())) > 1:
                return cells, GridMismatch(n, m, values)
    return cells, None


def sandwich_violations(n_max: int, m_max: int) -> list[tuple[int, int, int]]:
    """Cells where ``m + floor(n/2) <= t(n,m) <= m + n - 1`` fails."""
    out = []
    for n in range(2, n_max + 1):
        for m in range(2, m_max + 1):
            t = t_closed(n, m)
            if not m + n // 2 <= t <= m + n - 1:
                out.append((n, m, t))
    return out
