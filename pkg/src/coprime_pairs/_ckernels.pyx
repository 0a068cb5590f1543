# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled batch kernels.

Same contracts as ``_pykernels``. The closed form is a line-for-line C
port of ``counting.g_closed``; ``//`` and ``%`` keep Python floor
semantics (cdivision is off) because ``m`` goes negative for small n.
"""

cimport cython
import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef inline i64 H(i64 x) nogil:
    return 1 if x >= 0 else 0


cdef inline i64 Z(i64 x) nogil:
    return 1 if x == 0 else 0


cdef inline i64 diag(i64 r, i64 a):
    cdef i64 even = 1 - r % 2
    return even - even * Z(2 * a - r)


cdef i64 closed_one(i64 two_n, i64 p, i64 a_p, i64 b_p):
    cdef i64 n = two_n // 2
    cdef i64 q = n % 3
    cdef i64 h = 3 if q == 0 else (1 if q == 1 else 5)
    cdef i64 m = (n - h) // 3
    cdef i64 w = m // p
    cdef i64 r = m % p
    cdef i64 f, d, db, kap, kapb
    if q == 0:
        return ((w + 1) * (r + 1 - H(r - a_p) - H(r - b_p) + Z(a_p + b_p - r))
                + w * (p - r - 1 - H(a_p - r - 1) - H(b_p - r - 1)
                       + Z(a_p + b_p - p - r)))
    f = a_p if q == 1 else b_p
    kap = r // 2 + 1 - H(r - f)
    kapb = (p - r) // 2 - H(f - r - 1)
    d = diag(r, f)
    db = diag(p - r, f - r)
    return ((kap - d) * (w + 1) + d * (w // 2 + 1)
            + (kapb - db) * w + db * ((w - 1) // 2 + 1))


@cython.cdivision(True)
cdef inline i64 gcd(i64 a, i64 b) nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


def closed_form_one(i64 two_n, i64 p, i64 a_p, i64 b_p):
    return closed_one(two_n, p, a_p, b_p)


def closed_form_range(i64 max_even, i64 p, i64 a_p, i64 b_p):
    cdef Py_ssize_t count = max(max_even // 2, 0), i
    out = np.zeros(count, dtype=np.int64)
    cdef i64[::1] view = out
    for i in range(count):
        view[i] = closed_one(2 * i + 2, p, a_p, b_p)
    return out


@cython.cdivision(True)
cdef i64 oracle_with_table(i64 two_n, i64 q, const unsigned char[::1] ok) nogil:
    # ok[j] == (gcd(j, q) == 1); walk residues of h and two_n - h in step
    cdef i64 n = two_n // 2, h, total = 0
    cdef i64 hr = 1 % q
    cdef i64 kr = (two_n - 1) % q
    for h in range(1, n + 1):
        if ok[hr] and ok[kr]:
            total += 1
        hr += 1
        if hr == q:
            hr = 0
        kr -= 1
        if kr < 0:
            kr = q - 1
    return total


cdef cnp.ndarray coprime_table(i64 q):
    table = np.zeros(q, dtype=np.uint8)
    cdef unsigned char[::1] view = table
    cdef i64 j
    for j in range(q):
        view[j] = gcd(j, q) == 1
    return table


def oracle_one(i64 two_n, i64 p):
    cdef i64 q = 6 * p
    table = coprime_table(q)
    return oracle_with_table(two_n, q, table)


def oracle_range(i64 max_even, i64 p):
    cdef i64 q = 6 * p
    cdef Py_ssize_t count = max(max_even // 2, 0), i
    table = coprime_table(q)
    cdef const unsigned char[::1] ok = table
    out = np.zeros(count, dtype=np.int64)
    cdef i64[::1] view = out
    with nogil:
        for i in range(count):
            view[i] = oracle_with_table(2 * i + 2, q, ok)
    return out
