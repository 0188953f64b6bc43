import pytest
from hypothesis import given, strategies as st

from mstsp import GridDims, MSTSPError, Tour, line_even, line_next, line_odd, min_edge, solve_exact
from mstsp.line import line_cycle_from, line_order


def gaps(order):
    return [abs(order[i] - order[i - 1]) for i in range(1, len(order))] + [abs(order[0] - order[-1])]


@pytest.mark.parametrize(
    "n, expected",
    [(5, [1, 4, 2, 5, 3]), (3, [1, 3, 2]), (7, [1, 5, 2, 6, 3, 7, 4])],
)
def test_line_odd_examples(n, expected):
    assert line_odd(n) == expected


@pytest.mark.parametrize(
    "n, expected",
    [(6, [1, 5, 3, 6, 2, 4]), (8, [1, 6, 3, 8, 4, 7, 2, 5]), (4, [1, 4, 2, 3])],
)
def test_line_even_examples(n, expected):
    assert line_even(n) == expected


def test_line_even_4_gap_pattern():
    assert gaps(line_even(4)) == [3, 2, 1, 2]


@pytest.mark.parametrize("n, j, expected", [(7, 2, 6), (8, 8, 4), (6, 3, 6)])
def test_line_next_examples(n, j, expected):
    assert line_next(n, j) == expected


@pytest.mark.parametrize("bad", [1, 2, 4, 6])
def test_line_odd_rejects(bad):
    with pytest.raises(MSTSPError):
        line_odd(bad)


@pytest.mark.parametrize("bad", [1, 2, 3, 5])
def test_line_even_rejects(bad):
    with pytest.raises(MSTSPError):
        line_even(bad)


@pytest.mark.parametrize("n, j", [(5, 0), (5, 6), (2, 1)])
def test_line_next_rejects(n, j):
    with pytest.raises(MSTSPError):
        line_next(n, j)


@given(st.integers(3, 400))
def test_line_next_is_single_cycle(n):
    seen, j = [], 1
    for _ in range(n):
        seen.append(j)
        j = line_next(n, j)
    assert j == 1
    assert sorted(seen) == list(range(1, n + 1))


@given(st.integers(3, 400))
def test_line_next_agrees_with_explicit_orders(n):
    order = line_order(n)
    for a, b in zip(order, order[1:] + order[:1]):
        assert line_next(n, a) == b
    assert line_cycle_from(n, 1) == order


@given(st.integers(1, 200))
def test_odd_gap_structure(k):
    g = gaps(line_odd(2 * k + 1))
    assert set(g) <= {k, k + 1}
    assert min(g) == k


@given(st.integers(2, 200))
def test_even_gap_structure(k):
    n = 2 * k
    order = line_even(n)
    g = gaps(order)
    assert set(g) <= {k - 1, k, k + 1}
    assert min(g) == k - 1

    def incident(col):
        i = order.index(col)
        return {abs(col - order[i - 1]), abs(col - order[(i + 1) % n])}

    assert incident(1) == {k, k + 1}
    assert incident(n) == {k, k + 1}
    assert incident(k) == {k - 1, k}
    assert incident(k + 1) == {k - 1, k}


@pytest.mark.parametrize("n", range(3, 11))
def test_line_tour_matches_oracle(n):
    k = n // 2
    want = k * k if n % 2 else (k - 1) ** 2
    dims = GridDims(1, n)
    assert solve_exact(dims).opt_sq == want
    assert min_edge(Tour(dims, [(1, c) for c in line_order(n)])) == want
