#!/usr/bin/env python3
"""Compare the compiled counting kernel against the pure-Python/numpy one.

Benchmarks GF(2^s) exp/log table construction and fiber counting for the
genus-3 curve y^3 = x^4 + x over successively larger fields.
"""

import time

from weilrep import _kernel, fields
from weilrep._kernel import counting as py_impl

try:
    from weilrep._kernel import _fastcount as cy_impl
except ImportError:
    cy_impl = None


def bench(impl, name, s):
    F = fields.make_field(2, s)
    mask = 0
    for i, c in enumerate(F.modulus):
        mask |= (c % 2) << i
    gen = F.generator().coded()
    t0 = time.perf_counter()
    exp, log = impl.build_tables_gf2(s, mask, gen)
    t1 = time.perf_counter()
    # coefficients of x^4 + x, coded
    coeffs = [0, 1, 0, 0, 1]
    total = 0
    t2 = time.perf_counter()
    cnt, roots = impl.count_fibers(exp, log, coeffs, 3, 1, (1 << s))
    t3 = time.perf_counter()
    return t1 - t0, t3 - t2, cnt


def main():
    print("active implementation:", _kernel.IMPLEMENTATION)
    impls = [("python", py_impl)]
    if cy_impl is not None:
        impls.append(("cython", cy_impl))
    for s in (12, 16, 18, 20):
        row = ["s=%2d" % s]
        counts = set()
        for name, impl in impls:
            tb, tc, cnt = bench(impl, name, s)
            counts.add(cnt)
            row.append("%s: tables %7.1f ms, count %7.1f ms"
                       % (name, tb * 1e3, tc * 1e3))
        assert len(counts) == 1, "implementations disagree"
        print("  ".join(row))


if __name__ == "__main__":
    main()
