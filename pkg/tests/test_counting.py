import pytest
from hypothesis import given, strategies as st

from brute import coprime_decompositions
from coprime_pairs import (
    LiftVector,
    ParameterError,
    case_data,
    compute_params,
    eta,
    eta_bar,
    g_closed,
    q_mixed,
    q_same,
    selector_h,
)

PRIMES = [5, 7, 11, 13, 17, 19, 23]


def test_selector_h():
    assert [selector_h(x) for x in (0, 1, 2)] == [3, 1, 5]
    assert all(selector_h(x) == 3 * x * x - 5 * x + 3 for x in range(3))
    with pytest.raises(ParameterError):
        selector_h(3)


@pytest.mark.parametrize(
    "n, p, fields",
    [(13, 5, (1, 4, 4, 0)), (6, 5, (0, 1, 1, 0)), (2, 5, (2, -1, 4, -1)), (1, 7, (1, 0, 0, 0))],
)
def test_case_data(n, p, fields):
    cd = case_data(n, p)
    assert (cd.n_mod3, cd.m, cd.r, cd.omega) == fields
    assert cd.m == p * cd.omega + cd.r


def test_case_data_rejects_nonpositive():
    with pytest.raises(ParameterError):
        case_data(0, 5)


def test_lift_vectors():
    assert eta(3) == LiftVector(4, 2)
    assert eta_bar(3) == LiftVector(3, 2)
    assert eta_bar(0) == (0, 0)
    assert eta(-1) == (0, 0)


def test_q_same_examples():
    p5 = compute_params(5)
    assert q_same(case_data(13, 5), p5) == 2
    assert q_same(case_data(1, 5), p5) == 1
    assert q_same(case_data(5, 5), p5) == 0
    with pytest.raises(ParameterError):
        q_same(case_data(6, 5), p5)


def test_q_mixed_examples():
    # pinned by brute-force enumeration of decompositions
    assert q_mixed(case_data(6, 5), compute_params(5)) == 1
    assert q_mixed(case_data(3, 5), compute_params(5)) == 0
    assert q_mixed(case_data(15, 7), compute_params(7)) == 4
    with pytest.raises(ParameterError):
        q_mixed(case_data(13, 5), compute_params(5))


@pytest.mark.parametrize(
    "two_n, p, expected", [(26, 5, 2), (2, 7, 1), (10, 5, 0), (12, 5, 1), (30, 7, 4)]
)
def test_g_closed_examples(two_n, p, expected):
    assert g_closed(two_n, p) == expected == len(coprime_decompositions(two_n, p))


@pytest.mark.parametrize("two_n", [0, -2, 27, 1])
def test_g_closed_rejects_bad_targets(two_n):
    with pytest.raises(ParameterError):
        g_closed(two_n, 5)


def test_g_closed_params_must_match():
    with pytest.raises(ParameterError):
        g_closed(26, 5, compute_params(7))


@pytest.mark.parametrize("p", PRIMES)
def test_matches_enumeration_small(p):
    params = compute_params(p)
    for two_n in range(2, 1201, 2):
        assert g_closed(two_n, p, params) == len(coprime_decompositions(two_n, p))


@given(st.integers(1, 10**15), st.sampled_from(PRIMES))
def test_nonnegative_and_bounded(n, p):
    g = g_closed(2 * n, p)
    # at most one admissible h per residue class mod 6 in each 6-block
    assert 0 <= g <= n
