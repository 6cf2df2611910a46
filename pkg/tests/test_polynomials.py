import random

from hypothesis import given, settings
from hypothesis import strategies as st

from weilrep import fields
from weilrep.polynomials import Poly


def test_basic_arithmetic():
    F = fields.make_field(5, 1)
    f = Poly.from_ints(F, [1, 2, 3])
    g = Poly.from_ints(F, [4, 1])
    assert (f * g) % g == Poly.zero(F)
    assert (f * g) // g == f
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree() < g.degree()


def test_gcd():
    F = fields.make_field(2, 1)
    x = Poly.x(F)
    one = Poly.one(F)
    f = (x + one) * (x ** 2 + x + one)
    g = (x + one) * x
    assert f.gcd(g) == (x + one)


def test_evaluation_and_compose():
    F = fields.make_field(3, 2)
    f = Poly.from_ints(F, [1, 0, 2, 1])
    a, b = F.generator(), F.one()
    g = f.compose_linear(a, b)
    for e in list(F.elements())[:9]:
        assert g(e) == f(a * e + b)


def test_frobenius_of_poly():
    F = fields.make_field(2, 3)
    f = Poly(F, [F.generator(), F.one(), F.generator() ** 3])
    g = f.frob(1)
    for e in F.elements():
        assert g(e ** 2) == f(e) ** 2


def test_pth_root():
    F = fields.make_field(3, 2)
    for e in F.elements():
        r = e ** (3 ** (F.s - 1))  # cube root via Frobenius inverse
        assert r ** 3 == e


@st.composite
def poly_over_small_field(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    s = draw(st.integers(1, 2))
    F = fields.make_field(p, s)
    deg = draw(st.integers(1, 6))
    coeffs = [draw(st.integers(0, F.order - 1)) for _ in range(deg)] + [1]
    return Poly(F, [F.from_coded(c) for c in coeffs])


@given(poly_over_small_field())
@settings(max_examples=60, deadline=None)
def test_squarefree_decomposition_roundtrip(f):
    F = f.field
    dec = f.squarefree_decomposition()
    # product of g_i^i times the leading coefficient recovers f
    prod = Poly.constant(f.lc())
    for mult, g in dec.items():
        assert g.gcd(g.derivative()).degree() == 0 or g.derivative().is_zero()
        prod = prod * g ** mult
    assert prod == f
    # the g_i are pairwise coprime
    items = sorted(dec.items())
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            assert items[i][1].gcd(items[j][1]).degree() == 0


def test_squarefree_known_pattern():
    F = fields.make_field(2, 1)
    x = Poly.x(F)
    one = Poly.one(F)
    f = (x + one) ** 4 * x ** 3 * (x ** 2 + x + one)
    dec = f.squarefree_decomposition()
    assert dec[4] == x + one
    assert dec[3] == x
    assert dec[1] == x ** 2 + x + one
