import random

import pytest

from hyperlap import (
    Hypergraph,
    WalkQuery,
    count_walks,
    cw_laplacian,
    hypergraph_laplacian,
    matrix_power,
    signed_count,
)
from hyperlap.model import IndexOutOfRangeError
from hyperlap.random_instances import random_cw_level, random_hypergraph
from hyperlap.walkcount import power_table


def test_power_zero_is_identity(fig1):
    even = hypergraph_laplacian(fig1, "even")
    p0 = matrix_power(even, 0)
    assert p0.entries == tuple(
        tuple(1 if i == j else 0 for j in range(4)) for i in range(4)
    )


def test_fig1_even_square(fig1):
    p2 = matrix_power(hypergraph_laplacian(fig1, "even"), 2)
    assert p2.entry(1, 1) == 42
    assert p2.entry(1, 4) == 45
    assert p2.entry(4, 4) == 63


def test_fig1_fourth_power_paper_value(fig1):
    p4 = matrix_power(hypergraph_laplacian(fig1, "even"), 4)
    assert p4.entry(1, 3) == 5886


def test_power_table_matches_binary_exponentiation(fig1):
    even = hypergraph_laplacian(fig1, "even")
    table = power_table(even, 5)
    for k in range(6):
        assert table[k].entries == matrix_power(even, k).entries


def test_count_walks_paper_values(fig1):
    q = WalkQuery(kind="vertex", from_index=1, to_index=3, length=4)
    assert count_walks(fig1, q).value == 5886
    q = WalkQuery(kind="edge", from_index=7, to_index=9, length=3)
    assert count_walks(fig1, q).value == 384


def test_count_walks_length_zero(fig1):
    assert count_walks(fig1, WalkQuery("vertex", 2, 2, 0)).value == 1
    assert count_walks(fig1, WalkQuery("vertex", 2, 3, 0)).value == 0


def test_count_walks_bad_index(fig1):
    with pytest.raises(IndexOutOfRangeError, match="5"):
        count_walks(fig1, WalkQuery("vertex", 5, 1, 1))
    with pytest.raises(IndexOutOfRangeError, match="10"):
        count_walks(fig1, WalkQuery("edge", 1, 10, 1))


def test_signed_count_fig2_published_queries(fig2):
    lower = WalkQuery(kind="lower", from_index=1, to_index=6, length=4, level=1)
    assert signed_count(fig2, lower).value == 0
    upper1 = WalkQuery(kind="upper", from_index=1, to_index=3, length=1, level=1)
    assert signed_count(fig2, upper1).value == 1


def test_signed_count_length_zero(fig2):
    q = WalkQuery(kind="lower", from_index=2, to_index=2, length=0, level=1)
    assert signed_count(fig2, q).value == 1


def test_signed_count_bad_level(fig2):
    from hyperlap.model import LevelOutOfRangeError

    with pytest.raises(LevelOutOfRangeError):
        signed_count(fig2, WalkQuery("lower", 1, 1, 1, level=2))


def test_power_trace_identity_fixtures(fig1, fig2):
    even = hypergraph_laplacian(fig1, "even")
    odd = hypergraph_laplacian(fig1, "odd")
    for k in range(1, 7):
        assert matrix_power(even, k).trace() == matrix_power(odd, k).trace()
    for d in (0, 1):
        ce = cw_laplacian(fig2, d, "even")
        co = cw_laplacian(fig2, d, "odd")
        for k in range(1, 7):
            assert matrix_power(ce, k).trace() == matrix_power(co, k).trace()


def test_power_trace_identity_random():
    rng = random.Random(2024)
    for _ in range(25):
        h = random_hypergraph(rng)
        even = hypergraph_laplacian(h, "even")
        odd = hypergraph_laplacian(h, "odd")
        for k in range(1, 7):
            assert matrix_power(even, k).trace() == matrix_power(odd, k).trace()
    for _ in range(25):
        x = random_cw_level(rng)
        even = cw_laplacian(x, 0, "even")
        odd = cw_laplacian(x, 0, "odd")
        for k in range(1, 7):
            assert matrix_power(even, k).trace() == matrix_power(odd, k).trace()


def test_diagonal_monotonicity(fig1):
    # diagonal walk counts can only grow when two steps are appended
    even = hypergraph_laplacian(fig1, "even")
    for i in range(1, 5):
        for k in range(0, 5):
            assert matrix_power(even, k + 2).entry(i, i) >= matrix_power(even, k).entry(i, i)


def test_counts_exceed_machine_word():
    # arbitrary precision: drive a dense instance far past 2^64
    h = Hypergraph(n=5, edges=tuple((1, 2, 3, 4, 5) for _ in range(6)))
    even = hypergraph_laplacian(h, "even")
    value = matrix_power(even, 30).entry(1, 1)
    assert value > 2**64
