import pytest

from brute import primes_between, scan_params
from coprime_pairs import ParameterError, compute_params, f_selector, is_prime


@pytest.mark.parametrize(
    "p, delta6, M, a_p, b_p",
    [(5, 5, 0, 4, 0), (7, 1, 1, 1, 5), (11, 5, 0, 9, 1), (13, 1, 1, 2, 10)],
)
def test_compute_params(p, delta6, M, a_p, b_p):
    prm = compute_params(p)
    assert (prm.p, prm.delta6, prm.M, prm.a_p, prm.b_p) == (p, delta6, M, a_p, b_p)


@pytest.mark.parametrize("p", [-7, 0, 1, 2, 3, 4, 9, 25, 91])
def test_rejects_non_primes_and_small_primes(p):
    with pytest.raises(ParameterError):
        compute_params(p)


def test_str_format():
    assert str(compute_params(7)) == "p=7 delta6=1 M=1 a=1 b=5"
    assert str(compute_params(5)) == "p=5 delta6=5 M=0 a=4 b=0"


def test_is_prime_against_sieve():
    sieve = set(primes_between(0, 2000))
    assert [n for n in range(2000) if is_prime(n)] == sorted(sieve)


def test_matches_scan_below_500():
    for p in primes_between(5, 500):
        prm = compute_params(p)
        assert (prm.a_p, prm.b_p) == scan_params(p)


def test_f_selector():
    assert f_selector(compute_params(7), 1) == 1
    assert f_selector(compute_params(7), 2) == 5
    assert f_selector(compute_params(5), 1) == 4
    with pytest.raises(ParameterError):
        f_selector(compute_params(5), 0)
