"""Numpy implementation of the GF(2^s) counting kernel.

Elements are coded as bitmasks of their coefficient vectors, so addition is
XOR and multiplication goes through exp/log tables.  This is the fallback
used when the compiled extension is unavailable; both implementations share
the same API and produce identical results.
"""

from math import gcd

import numpy as np


def build_tables_gf2(s, modulus_mask, gen_mask):
    """exp/log tables for GF(2^s) with the given modulus and generator.

    exp has length 2^s - 1 with exp[i] = gen^i (coded); log has length 2^s
    with log[0] = -1.
    """
    Q = 1 << s
    M = Q - 1
    exp = np.empty(M, dtype=np.int64)
    log = np.full(Q, -1, dtype=np.int64)
    cur = 1
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
    return exp, log


def count_fibers(exp, log, coeffs, n, lo, hi):
    """Fiber count of y^n = f(x) over the coded range lo <= x < hi.

    Returns (total, roots): total is the number of affine points with
    f(x) != 0, roots lists the coded x in range with f(x) = 0 (their fibers
    are handled separately by the caller, as is x = infinity).
    """
    Q = log.shape[0]
    M = Q - 1
    g = gcd(n, M)
    x = np.arange(lo, hi, dtype=np.int64)
    lx = log[x]
    val = np.full(x.shape, coeffs[-1], dtype=np.int64)
    for c in coeffs[-2::-1]:
        mask = (val != 0) & (x != 0)
        prod = np.zeros_like(val)
        prod[mask] = exp[(log[val[mask]] + lx[mask]) % M]
        val = prod ^ c
    nz = val != 0
    total = g * int(np.count_nonzero(log[val[nz]] % g == 0))
    return total, [int(r) for r in x[~nz]]
