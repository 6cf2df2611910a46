import numpy as np

from weilrep import _kernel, fields
from weilrep._kernel import counting as py_impl


def _tables_for(s):
    F = fields.make_field(2, s)
    mask = 0
    for i, c in enumerate(F.modulus):
        if c:
            mask |= 1 << i
    return F, mask, F.generator().coded()


def test_table_agreement():
    for s in (3, 8, 11):
        F, mask, gen = _tables_for(s)
        exp_p, log_p = py_impl.build_tables_gf2(s, mask, gen)
        exp_a, log_a = _kernel.build_tables_gf2(s, mask, gen)
        assert np.array_equal(np.asarray(exp_p), np.asarray(exp_a))
        assert np.array_equal(np.asarray(log_p), np.asarray(log_a))


def test_tables_match_field_arithmetic():
    s = 6
    F, mask, gen = _tables_for(s)
    exp, log = _kernel.build_tables_gf2(s, mask, gen)
    g = F.generator()
    e = F.one()
    for i in range(2 ** s - 1):
        assert exp[i] == e.coded()
        assert log[e.coded()] == i
        e = e * g
    assert log[0] == -1


def test_count_agreement():
    s = 9
    F, mask, gen = _tables_for(s)
    exp, log = py_impl.build_tables_gf2(s, mask, gen)
    coeffs = [3, 1, 0, 7, 1]  # arbitrary coded coefficients
    for n in (2, 3, 5):
        tp = py_impl.count_fibers(np.asarray(exp), np.asarray(log),
                                  coeffs, n, 0, 1 << s)
        ta = _kernel.count_fibers(np.asarray(exp), np.asarray(log),
                                  coeffs, n, 0, 1 << s)
        assert tp[0] == ta[0]
        assert list(tp[1]) == list(ta[1])


def test_count_against_naive():
    s = 5
    F, mask, gen = _tables_for(s)
    exp, log = _kernel.build_tables_gf2(s, mask, gen)
    from weilrep.polynomials import Poly
    f = Poly.from_vectors(F, [[1, 1, 0, 1], [0, 1], [1], [0, 0, 1, 1]])
    coeffs = [c.coded() for c in f.coeffs]
    n = 3
    total, roots = _kernel.count_fibers(np.asarray(exp), np.asarray(log),
                                        coeffs, n, 0, 1 << s)
    naive = 0
    naive_roots = []
    for x in F.elements():
        v = f(x)
        if v.is_zero():
            naive_roots.append(x.coded())
        else:
            naive += sum(1 for y in F.elements() if y ** n == v)
    assert total == naive
    assert sorted(roots) == sorted(naive_roots)
