import pytest

from brute import coprime_decompositions
from coprime_pairs import ParameterError, g_oracle


@pytest.mark.parametrize("two_n, p, expected", [(26, 5, 2), (2, 11, 1), (10, 5, 0), (6, 5, 0)])
def test_examples(two_n, p, expected):
    assert g_oracle(two_n, p) == expected


def test_counted_pairs_are_ordered():
    for h, k in coprime_decompositions(200, 7):
        assert h <= k
    assert g_oracle(200, 7) == len(coprime_decompositions(200, 7))


@pytest.mark.parametrize("two_n, p", [(7, 5), (0, 5), (10, 4), (10, 3), (10, 9)])
def test_invalid_inputs(two_n, p):
    with pytest.raises(ParameterError):
        g_oracle(two_n, p)
