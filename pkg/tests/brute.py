"""Enumeration oracles for the tests.

Nothing here imports the package: every function is a direct count or
scan, so it can serve as ground truth for the closed forms.
"""

from math import gcd


def pair_count(p, total, exclude_s, exclude_t, ordered_le):
    """Pairs (s, t) in {0..p-1}^2 with s + t == total, s != exclude_s,
    t != exclude_t, optionally with s <= t."""
    n = 0
    for s in range(p):
        t = total - s
        if not 0 <= t < p or s == exclude_s or t == exclude_t:
            continue
        if ordered_le and s > t:
            continue
        n += 1
    return n


def split_count(p, total, excluded):
    """(strict, diagonal) counts for s + t == total avoiding ``excluded``."""
    strict = diag = 0
    for s in range(p):
        t = total - s
        if not 0 <= t < p or excluded in (s, t) or s > t:
            continue
        if s < t:
            strict += 1
        else:
            diag += 1
    return strict, diag


def coprime_decompositions(two_n, p):
    q = 6 * p
    return [
        (h, two_n - h)
        for h in range(1, two_n // 2 + 1)
        if gcd(h, q) == 1 and gcd(two_n - h, q) == 1
    ]


def first_hits(k, a, b):
    """Scan x = 0..k-1 once; map each residue c to the ascending list of x
    with (a*x + b) mod k == c."""
    hits = [[] for _ in range(k)]
    for x in range(k):
        hits[(a * x + b) % k].append(x)
    return hits


def scan_params(p):
    a = next(x for x in range(p) if (6 * x + 1) % p == 0)
    b = next(x for x in range(p) if (6 * x + 5) % p == 0)
    return a, b


def primes_between(lo, hi):
    sieve = bytearray([1]) * hi
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(lo, hi) if sieve[i]]
