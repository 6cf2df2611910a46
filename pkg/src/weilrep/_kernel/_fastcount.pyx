# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2^s) counting kernel; mirrors counting.py exactly."""

import numpy as np


def build_tables_gf2(int s, long long modulus_mask, long long gen_mask):
    cdef long long Q = 1 << s
    cdef long long M = Q - 1
    exp_arr = np.empty(M, dtype=np.int64)
    log_arr = np.full(Q, -1, dtype=np.int64)
    cdef long long[::1] exp = exp_arr
    cdef long long[::1] log = log_arr
    cdef long long cur = 1, a, b, acc, i
    for i in range(M):
        exp[i] = cur
        log[cur] = i
        a = cur
        b = gen_mask
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a & Q:
                a ^= modulus_mask
        cur = acc
    return exp_arr, log_arr


def count_fibers(exp_arr, log_arr, coeffs, long long n, long long lo,
                 long long hi):
    cdef long long[::1] exp = exp_arr
    cdef long long[::1] log = log_arr
    cdef long long Q = log.shape[0]
    cdef long long M = Q - 1
    cdef long long g = _gcd(n, M)
    cdef long long[::1] cf = np.asarray(coeffs, dtype=np.int64)
    cdef int deg = cf.shape[0] - 1
    cdef long long x, val, total = 0, lx
    cdef int k
    roots = []
    for x in range(lo, hi):
        lx = log[x] if x else -1
        val = cf[deg]
        for k in range(deg - 1, -1, -1):
            if val != 0 and x != 0:
                val = exp[(log[val] + lx) % M]
            else:
                val = 0
            val ^= cf[k]
        if val == 0:
            roots.append(x)
        elif log[val] % g == 0:
            total += g
    return total, roots


cdef long long _gcd(long long a, long long b):
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a
