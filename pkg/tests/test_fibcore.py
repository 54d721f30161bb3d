import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibpart import oracle
from fibpart.fibcore import (content, fib, is_two_partition, mu_first,
                             mu_last, shift_sigma, zeckendorf)


@pytest.mark.parametrize("i, value", [
    (0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 8), (10, 89), (26, 196418),
])
def test_fib_values(i, value):
    assert fib(i) == value


def test_fib_rejects_negative_index():
    with pytest.raises(ValueError):
        fib(-1)


@pytest.mark.parametrize("n, indices", [
    (0, ()),
    (1, (1,)),
    (24, (3, 7)),
    (100, (3, 5, 10)),
    (55, (9,)),
])
def test_zeckendorf_known(n, indices):
    assert zeckendorf(n) == indices


def test_zeckendorf_round_trip_small():
    for n in range(5000):
        z = zeckendorf(n)
        assert is_two_partition(z)
        assert content(z) == n


@given(st.integers(min_value=0, max_value=10 ** 30))
def test_zeckendorf_round_trip_big(n):
    z = zeckendorf(n)
    assert is_two_partition(z)
    assert content(z) == n


def test_zeckendorf_unique_gap2_partition():
    # among all partitions into distinct Fibonacci numbers, exactly one
    # satisfies the gap >= 2 condition, and the greedy codec finds it
    for n in range(10001):
        gapped = [p for p in oracle.brute_partitions(n) if is_two_partition(p)]
        assert gapped == [zeckendorf(n)], n


def test_content_examples():
    assert content(()) == 0
    assert content((3, 7)) == 24
    assert content((5, 9)) == 63


def test_content_rejects_bad_index_sets():
    with pytest.raises(ValueError):
        content((0, 2))
    with pytest.raises(ValueError):
        content((3, 3))
    with pytest.raises(ValueError):
        content((5, 2))


def test_shift_sigma():
    assert shift_sigma((5, 7), 5) == (10, 12)
    assert shift_sigma((), 9) == ()
    assert shift_sigma((3, 5), 7) == (10, 12)
    with pytest.raises(ValueError):
        shift_sigma((1, 3), -1)


def test_mu_first_last():
    assert (mu_first(24), mu_last(24)) == (3, 7)
    assert (mu_first(0), mu_last(0)) == (0, 0)
    assert (mu_first(55), mu_last(55)) == (9, 9)


def test_prefix_sum_identity():
    # f_1 + ... + f_r == f_{r+2} - 2
    for r in range(1, 41):
        assert sum(fib(i) for i in range(1, r + 1)) == fib(r + 2) - 2


def test_index_addition_identity():
    # f_{a+b} == f_a f_b + f_{a-1} f_{b-1}
    for a in range(1, 31):
        for b in range(1, 31):
            assert fib(a + b) == fib(a) * fib(b) + fib(a - 1) * fib(b - 1)
