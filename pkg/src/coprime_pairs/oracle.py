"""Brute-force reference count of coprime decompositions.

Walks ``h = 1..n`` and tests both ``h`` and ``2n - h`` against ``6p`` with
a plain gcd. O(n) per call; this is the ground truth the closed form is
measured against, so it is kept deliberately literal.
"""

from math import gcd

from .counting import check_even
from .params import check_prime


def g_oracle(two_n: int, p: int) -> int:
    """
    >>> g_oracle(26, 5)
    2
    """
    check_even(two_n)
    check_prime(p)
    q = 6 * p
    total = 0
    for h in range(1, two_n // 2 + 1):
        if gcd(h, q) == 1 and gcd(two_n - h, q) == 1:
            total += 1
    return total
