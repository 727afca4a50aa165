import pytest
from hypothesis import given, strategies as st

from naive_refs import partitions, sums_of_interval
from pqramsey.formulas import (
    LinearForest,
    RamseyAnswer,
    compare_routes,
    conjecture_value,
    interval_sum_contains,
    parsons_path_star,
    path_cycle,
    path_fan,
    path_quasar,
    path_star,
    path_wheel,
    quasar_lower_bound,
    sandwich_violations,
    t_closed,
    t_min_char,
)


@pytest.mark.parametrize("t,s,e,expected", [
    (5, 2, 3, True),
    (7, 4, 5, False),
    (0, 4, 5, True),
    (9, 5, 4, False),
    (3, -2, 1, True),
    (0, 5, 4, True),
])
def test_interval_sum_examples(t, s, e, expected):
    assert interval_sum_contains(t, s, e) is expected


@given(st.integers(0, 60), st.integers(-5, 12), st.integers(-2, 12))
def test_interval_sum_matches_knapsack(t, s, e):
    assert interval_sum_contains(t, s, e) == (t in sums_of_interval(s, e, t))


@pytest.mark.parametrize("n,m,expected", [(5, 2, 5), (5, 4, 7), (2, 7, 8), (4, 8, 10), (3, 4, 5)])
def test_t_closed_examples(n, m, expected):
    assert t_closed(n, m) == expected


@pytest.mark.parametrize("n,m,expected", [(3, 4, 5), (5, 4, 7), (2, 2, 3)])
def test_t_min_char_examples(n, m, expected):
    assert t_min_char(n, m) == expected


@pytest.mark.parametrize("n,m,expected", [(5, 2, 5), (5, 6, 9), (2, 9, 10)])
def test_parsons_examples(n, m, expected):
    assert parsons_path_star(n, m) == expected


@pytest.mark.parametrize("n,m,expected", [(3, 3, 5), (3, 4, 5), (4, 2, 4)])
def test_path_star_examples(n, m, expected):
    assert path_star(n, m, check=True) == expected


@pytest.mark.parametrize("fn", [t_closed, t_min_char, parsons_path_star, path_star])
@pytest.mark.parametrize("n,m", [(1, 3), (3, 1), (0, 0)])
def test_path_star_domain(fn, n, m):
    with pytest.raises(ValueError):
        fn(n, m)


def test_min_char_against_knapsack_definition():
    # least t outside the sum set, computed without the k-interval shortcut
    for n in range(2, 9):
        for m in range(2, 20):
            t = 1
            while t in sums_of_interval(t - m + 1, n - 1, t):
                t += 1
            assert t_min_char(n, m) == t == t_closed(n, m), (n, m)


def test_three_routes_agree_on_grid():
    cells, mismatch = compare_routes(12, 40)
    assert cells == 429
    assert mismatch is None


def test_compare_routes_reports_first_perturbation():
    routes = {"closed": t_closed, "bent": lambda n, m: t_closed(n, m) + (n == 4 and m == 7)}
    cells, mismatch = compare_routes(12, 40, routes)
    assert (mismatch.n, mismatch.m) == (4, 7)
    assert mismatch.values == {"closed": 10, "bent": 11}


def test_closed_rows():
    for n in range(2, 13):
        for m in range(2, n + 1):
            expected = n if m <= -(-n // 2) else 2 * m - 1
            assert t_closed(n, m) == expected, (n, m)


def test_sandwich_holds_on_grid():
    assert sandwich_violations(12, 40) == []


def test_exact_rational_boundary():
    # n=4, m=5: alpha = 4/3 = gamma with beta = 2, so the first case applies
    assert t_closed(4, 5) == 3 * 2 + 1
    # n=5, m=10: alpha = 9/4 = gamma with beta = 3
    assert t_closed(5, 10) == 4 * 3 + 1


@pytest.mark.parametrize("n,m,expected", [(6, 3, 11), (6, 4, 7), (4, 7, 8), (4, 6, 7)])
def test_path_cycle(n, m, expected):
    assert path_cycle(n, m) == expected


@pytest.mark.parametrize("n,m,expected", [(5, 5, 13), (4, 8, 10), (3, 7, 9)])
def test_path_wheel(n, m, expected):
    assert path_wheel(n, m) == expected


@pytest.mark.parametrize("fn,n,m", [(path_cycle, 2, 2), (path_wheel, 1, 5)])
def test_reference_formula_domain(fn, n, m):
    with pytest.raises(ValueError):
        fn(n, m)


@pytest.mark.parametrize("n,orders,expected", [
    (5, [3], RamseyAnswer.exact(9, "quasar, small forest")),
    (3, [4], RamseyAnswer.exact(5, "quasar, even components")),
    (4, [8], RamseyAnswer.exact(10, "quasar, large forest")),
])
def test_path_quasar_exact(n, orders, expected):
    assert path_quasar(n, LinearForest(orders)) == expected


def test_path_quasar_bounds():
    ans = path_quasar(4, LinearForest([5]))
    assert not ans.is_exact
    assert (ans.lower, ans.upper, ans.conjectured) == (7, 8, 7)
    assert str(ans) == "BOUNDS [7,8] (quasar bounds); conjectured 7"
    with pytest.raises(ValueError):
        ans.value


@pytest.mark.parametrize("n,orders,expected", [(4, [5], 7), (4, [3, 2], 7), (5, [2, 2, 2], 9)])
def test_conjecture_value(n, orders, expected):
    assert conjecture_value(n, LinearForest(orders)) == expected


def test_conjecture_range():
    with pytest.raises(ValueError):
        conjecture_value(4, LinearForest([4]))
    with pytest.raises(ValueError):
        conjecture_value(4, LinearForest([8]))


@pytest.mark.parametrize("n,k,expected", [(5, 2, 9), (3, 2, 5), (2, 3, 7)])
def test_path_fan(n, k, expected):
    ans = path_fan(n, k)
    assert ans.is_exact and ans.value == expected


def test_fans_always_exact():
    for n in range(2, 15):
        for k in range(1, 30):
            assert path_fan(n, k).is_exact


def _forests(m):
    return [LinearForest(p) for p in partitions(m) if p[0] >= 2]


def test_boundary_splice_at_twice_n():
    for n in range(3, 9):
        for forest in _forests(2 * n):
            ans = path_quasar(n, forest)
            assert ans.value == t_closed(n, 2 * n) == 3 * n - 2 == 2 * n + n - 2


def test_bounds_contain_conjecture_and_stay_ordered():
    for n in range(2, 9):
        for m in range(n + 1, 2 * n):
            for forest in _forests(m):
                ans = path_quasar(n, forest)
                if forest.odd_count == 0:
                    assert ans.is_exact
                    continue
                assert ans.lower <= ans.upper
                assert ans.conjectured in ans


def test_lower_bound_monotone_in_odd_count():
    for n in range(2, 9):
        for m in range(n + 1, 2 * n):
            by_odd = {}
            for forest in _forests(m):
                by_odd.setdefault(forest.odd_count, set()).add(quasar_lower_bound(n, forest))
            # the bound depends on F only through o(F)
            assert all(len(v) == 1 for v in by_odd.values())
            odds = sorted(by_odd)
            values = [by_odd[o].pop() for o in odds]
            assert values == sorted(values, reverse=True)


def test_splice_fails_for_the_shortest_path():
    # m + n - 2 = 4 but R(P_2, K_1 + F) = m + 1 = 5 for every F on 4 vertices
    for forest in _forests(4):
        assert path_quasar(2, forest).value == t_closed(2, 4) == 5


def test_wheel_dominates_quasar_answers():
    for n in range(3, 9):
        for m in range(2, 3 * n):
            for forest in _forests(m):
                rim = m + m % 2
                if rim < 3:
                    continue
                assert path_quasar(n, forest).upper <= path_wheel(n, rim), (n, forest)


class TestLinearForest:
    def test_sorted_and_counts(self):
        f = LinearForest([2, 3, 1, 2])
        assert f.orders == (3, 2, 2, 1)
        assert f.total_order == 8
        assert f.odd_count == 2

    @given(st.lists(st.integers(1, 9), min_size=1, max_size=8).filter(lambda xs: max(xs) >= 2))
    def test_odd_count_parity(self, orders):
        f = LinearForest(orders)
        assert f.odd_count % 2 == f.total_order % 2

    @pytest.mark.parametrize("text,orders", [
        ("3,2,2", (3, 2, 2)),
        ("4x2", (2, 2, 2, 2)),
        ("2x3,1", (3, 3, 1)),
        ("1,5", (5, 1)),
    ])
    def test_parse(self, text, orders):
        assert LinearForest.parse(text).orders == orders

    def test_parse_round_trip_normalizes(self):
        assert str(LinearForest.parse("2,3,2")) == "3,2,2"

    @pytest.mark.parametrize("text", ["", "1,1", "a", "0,2", "3x"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            LinearForest.parse(text)
