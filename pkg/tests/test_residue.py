import pytest
from hypothesis import given, strategies as st

from coprime_pairs import ParameterError, RangeError, delta, delta_neg

moduli = st.integers(min_value=2, max_value=10**9)
ints = st.integers(min_value=-(10**12), max_value=10**12)


@pytest.mark.parametrize(
    "k, a, expected",
    [(5, 12, 2), (7, -3, 4), (13, 19, 6), (6, 35, 5), (2, -1, 1), (3, 0, 0)],
)
def test_delta_examples(k, a, expected):
    assert delta(k, a) == expected


def test_delta_idempotent_example():
    assert delta(6, delta(6, 35)) == 5


@pytest.mark.parametrize("k", [1, 0, -4])
def test_modulus_below_two_rejected(k):
    with pytest.raises(ParameterError):
        delta(k, 3)


def test_overflowing_product_rejected():
    with pytest.raises(RangeError):
        delta(7, 3 * 2**62)


def test_out_of_int64_rejected():
    with pytest.raises(RangeError):
        delta(5, 2**63)
    with pytest.raises(RangeError):
        delta(2**63, 1)
    assert delta(7, 2**63 - 1) == (2**63 - 1) % 7


def test_non_integer_rejected():
    with pytest.raises(ParameterError):
        delta(5, 2.0)
    with pytest.raises(ParameterError):
        delta(5, True)


@pytest.mark.parametrize("k, a, expected", [(6, 1, 5), (13, 4, 9), (5, -3, 3)])
def test_delta_neg(k, a, expected):
    assert delta_neg(k, a) == expected == delta(k, -a)


def test_delta_neg_needs_nonzero_residue():
    with pytest.raises(ParameterError):
        delta_neg(5, 10)


@given(moduli, ints)
def test_range_and_divisibility(k, a):
    r = delta(k, a)
    assert 0 <= r < k
    assert (a - r) % k == 0


@given(moduli, ints, st.integers(-(10**6), 10**6))
def test_periodicity(k, a, n):
    assert delta(k, a + k * n) == delta(k, a)


# keeps a*b inside the signed 64-bit range
small_ints = st.integers(min_value=-(2**31), max_value=2**31)


@given(moduli, ints, ints)
def test_additive(k, a, b):
    assert delta(k, a + b) == delta(k, delta(k, a) + delta(k, b))


@given(st.integers(2, 2**31), small_ints, small_ints)
def test_multiplicative(k, a, b):
    assert delta(k, a * b) == delta(k, a * delta(k, b))


@given(st.integers(2, 1000), st.integers(2, 1000), ints)
def test_nesting(r, m, a):
    k = r * m
    assert delta(r, delta(k, a)) == delta(r, a)
