#!/usr/bin/env python3
"""Generate character tables for the fixture automorphism groups.

Both fixture groups have the shape G = A x| <h> with A abelian (generators
of finite order) and h acting on A; every irreducible character of such a
group is induced from a linear character of A x| S, S the stabilizer of an
A-character orbit.  Values are stored as rational vectors over the powers of
a primitive N-th root of unity (N = lcm of the generator orders and the
order of h), which is what the decomposition code consumes.

Usage: python3 tools/make_character_tables.py [outdir]
"""

import json
import math
import os
import sys
from itertools import product


def _act_pow(act, v, j, orders):
    """act^j applied to the exponent vector v (j may be negative)."""
    M = len(orders)
    j = j % _act_order(act, orders)
    for _ in range(j):
        out = [0] * M
        for i, e in enumerate(v):
            if e:
                img = act[i]
                for t in range(M):
                    out[t] = (out[t] + e * img[t]) % orders[t]
        v = out
    return list(v)


def _act_order(act, orders):
    n = 1
    cur = [list(row) for row in act]
    ident = [[1 if i == j else 0 for j in range(len(orders))]
             for i in range(len(orders))]

    def reduce(m):
        return [[m[i][j] % orders[j] for j in range(len(orders))]
                for i in range(len(orders))]

    cur = reduce(cur)
    while cur != ident:
        nxt = [[sum(cur[i][k] * act[k][j] for k in range(len(orders)))
                for j in range(len(orders))] for i in range(len(orders))]
        cur = reduce(nxt)
        n += 1
        assert n <= 64
    return n


class SemidirectSpec:
    """A x| C_M: generator names + orders for A, the action of h on the
    generators of A (as exponent vectors), and the name of h."""

    def __init__(self, name, gen_names, orders, action, h_name, h_order):
        self.name = name
        self.gen_names = gen_names
        self.orders = orders
        self.action = action  # action[i] = exponent vector of h(gen_i)
        self.h_name = h_name
        self.M = h_order
        self.A = [list(v) for v in product(*(range(o) for o in orders))]
        self.N = math.lcm(*orders, h_order)

    def act(self, v, j=1):
        return _act_pow(self.action, v, j, self.orders)

    def elements(self):
        return [(tuple(v), k) for v in self.A for k in range(self.M)]

    def conj(self, g, x):
        """g x g^-1 for g = (w, l), x = (v, k)."""
        (w, l), (v, k) = g, x
        out = [0] * len(self.orders)
        av = self.act(list(v), l)
        aw = self.act(list(w), k)
        for i in range(len(out)):
            out[i] = (w[i] + av[i] - aw[i]) % self.orders[i]
        return (tuple(out), k)

    def classes(self):
        seen = set()
        out = []
        for x in self.elements():
            if x in seen:
                continue
            cls = {self.conj(g, x) for g in self.elements()}
            seen |= cls
            out.append(sorted(cls))
        return out

    def word(self, el):
        v, k = el
        parts = ["%s^%d" % (n, e) for n, e in zip(self.gen_names, v) if e]
        if k:
            parts.append("%s^%d" % (self.h_name, k))
        return " ".join(parts) if parts else "id"

    def char_value_exp(self, w, v):
        """chi_w(v) as an exponent of zeta_N."""
        acc = 0
        for wi, vi, oi in zip(w, v, self.orders):
            acc += wi * vi * (self.N // oi)
        return acc % self.N

    def char_act(self, w):
        """w' with chi_{w'} = chi_w o act (indexing the <h>-orbit).

        chi_w(act(v)) is linear in v; its zeta_N-exponent coefficient at v_i
        is sum_t w_t A[i][t] * (N / o_t)."""
        res = []
        for i in range(len(w)):
            acc = 0
            for t in range(len(w)):
                acc += w[t] * self.action[i][t] * (self.N // self.orders[t])
            # acc is the zeta_N-exponent multiplier of v_i; convert back
            step = self.N // self.orders[i]
            assert acc % step == 0
            res.append((acc // step) % self.orders[i])
        return tuple(res)

    def irreducibles(self):
        """All irreducible characters: list of (dim, value-map on elements)
        with values as zeta_N coefficient vectors (ints)."""
        chars = [tuple(v) for v in self.A]
        seen = set()
        irreps = []
        for w in chars:
            if w in seen:
                continue
            orbit = [w]
            cur = self.char_act(w)
            while cur != w:
                orbit.append(cur)
                cur = self.char_act(cur)
            seen |= set(orbit)
            m0 = len(orbit)
            assert self.M % m0 == 0
            for lam in range(self.M // m0):
                # lambda = zeta_{M/m0}^lam  (an N-th root via scaling)
                lam_step = self.N // (self.M // m0)
                values = {}
                for el in self.elements():
                    v, k = el
                    vec = [0] * self.N
                    if k % m0 == 0:
                        t = k // m0
                        for j in range(m0):
                            vj = self.act(list(v), -j)
                            e = self.char_value_exp(w, vj)
                            vec[(e + lam * t * lam_step) % self.N] += 1
                    values[el] = vec
                irreps.append((m0, values))
        return irreps


def build_table(spec):
    classes = spec.classes()
    irreps = spec.irreducibles()
    order = len(spec.A) * spec.M
    assert sum(d * d for d, _ in irreps) == order
    assert len(irreps) == len(classes)
    # orthogonality self-check, numerically (exact check lives in the
    # library's decomposition path)
    import cmath
    zeta = [cmath.exp(2j * cmath.pi * t / spec.N) for t in range(spec.N)]

    def cval(vec):
        return sum(c * zeta[t] for t, c in enumerate(vec) if c)

    for a, (da, va) in enumerate(irreps):
        for b, (db, vb) in enumerate(irreps):
            acc = 0
            for cls in classes:
                rep = cls[0]
                acc += len(cls) * cval(va[rep]) * cval(vb[rep]).conjugate()
            acc /= order
            target = 1.0 if a == b else 0.0
            assert abs(acc - target) < 1e-8, (a, b, acc)

    return {
        "name": spec.name,
        "order": order,
        "exponent": spec.N,
        "classes": [{"rep": spec.word(cls[0]), "size": len(cls)}
                    for cls in classes],
        "characters": [
            {"label": "chi%d" % i, "dim": d,
             "values": [vals[cls[0]] for cls in classes]}
            for i, (d, vals) in enumerate(irreps)],
    }


SPECS = [
    SemidirectSpec(
        "picard72",
        ["tau1", "tau2", "sigma"], [2, 2, 3],
        # phi0: tau1 -> tau1, tau2 -> tau1*tau2, sigma -> sigma^2
        [[1, 0, 0], [1, 1, 0], [0, 0, 2]],
        "phi0", 6),
    SemidirectSpec(
        "chain24",
        ["tau1", "tau2", "sigma"], [2, 2, 3],
        # phi0: tau1 -> tau1, tau2 -> tau2, sigma -> sigma^2
        [[1, 0, 0], [0, 1, 0], [0, 0, 2]],
        "phi0", 2),
]


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else \
        os.path.join(os.path.dirname(__file__), "..", "fixtures")
    os.makedirs(outdir, exist_ok=True)
    for spec in SPECS:
        table = build_table(spec)
        path = os.path.join(outdir, "chartable_%s.json" % spec.name)
        with open(path, "w") as fh:
            json.dump(table, fh, indent=1, sort_keys=True)
            fh.write("\n")
        dims = [c["dim"] for c in table["characters"]]
        print("%s: order %d, %d classes, dims %s" %
              (spec.name, table["order"], len(table["classes"]),
               sorted(dims)))


if __name__ == "__main__":
    main()
