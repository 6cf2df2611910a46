import pytest

from weilrep import curve, fields
from weilrep.automorphisms import (AutGroup, ComponentMap, RatFunc,
                                   SemilinearAut, affine_map, compose,
                                   identity_aut, pure_frobenius,
                                   validate_automorphism)
from weilrep.curve import CurveModel, SuperellipticComponent
from weilrep.errors import EquationMismatch, GroupCapExceeded, ValidationError
from weilrep.polynomials import Poly


def picard_setup():
    F2 = fields.make_field(2, 1)
    F4 = fields.make_field(2, 2)
    comp = SuperellipticComponent("Y0", 3, Poly.from_ints(F2, [0, 1, 0, 0, 1]))
    model = CurveModel.simple(F2, [comp])
    z3 = F4.generator()
    one, zero = F4.one(), F4.zero()
    sigma = SemilinearAut(F4, 0, [0], [affine_map(one, zero, z3)], ("sigma",))
    tau1 = SemilinearAut(F4, 0, [0], [affine_map(one, one, one)], ("tau1",))
    tau2 = SemilinearAut(F4, 0, [0], [affine_map(one, z3, one)], ("tau2",))
    phi0 = pure_frobenius(F4, 1, 1)
    return model, F4, sigma, tau1, tau2, phi0


def test_validate_generators():
    model, F4, sigma, tau1, tau2, phi0 = picard_setup()
    for g in (sigma, tau1, tau2, phi0):
        validate_automorphism(model, g)


def test_invalid_translation_rejected():
    model, F4, *_ = picard_setup()
    # x -> zeta3 * x multiplies f by zeta3, so leaving y alone breaks the
    # equation
    bad = SemilinearAut(F4, 0, [0],
                        [affine_map(F4.generator(), F4.zero(),
                                    F4.one())], ("bad",))
    with pytest.raises(EquationMismatch):
        validate_automorphism(model, bad)


def test_group_order_and_classes():
    model, F4, sigma, tau1, tau2, phi0 = picard_setup()
    G = AutGroup({"sigma": sigma, "tau1": tau1, "tau2": tau2, "phi0": phi0},
                 6, F4, 1)
    assert G.order() == 72
    assert len(G.conjugacy_classes()) == 27
    assert sum(len(c) for c in G.conjugacy_classes()) == 72


def test_group_relations():
    model, F4, sigma, tau1, tau2, phi0 = picard_setup()
    G = AutGroup({"sigma": sigma, "tau1": tau1, "tau2": tau2, "phi0": phi0},
                 6, F4, 1)
    # phi0 sigma phi0^-1 = sigma^2, phi0 tau2 phi0^-1 = tau1 tau2
    lhs = G.multiply(G.multiply(phi0, sigma), G.inverse(phi0))
    assert G.lookup(lhs) == G.lookup(G.resolve_word("sigma^2"))
    lhs = G.multiply(G.multiply(phi0, tau2), G.inverse(phi0))
    assert G.lookup(lhs) == G.lookup(G.resolve_word("tau1 tau2"))
    # inertia generators commute (translations and the y-scaling)
    for a, b in [(tau1, tau2), (tau1, sigma), (tau2, sigma)]:
        assert G.lookup(compose(a, b)) == G.lookup(compose(b, a))


def test_inverse_and_identity():
    model, F4, sigma, tau1, tau2, phi0 = picard_setup()
    G = AutGroup({"sigma": sigma, "tau1": tau1, "tau2": tau2, "phi0": phi0},
                 6, F4, 1)
    for g in G.elements[:12]:
        assert G.lookup(compose(g, G.inverse(g))) == 0


def test_resolve_word_inverses():
    model, F4, sigma, tau1, tau2, phi0 = picard_setup()
    G = AutGroup({"sigma": sigma, "tau1": tau1, "tau2": tau2, "phi0": phi0},
                 6, F4, 1)
    assert G.lookup(G.resolve_word("sigma^-1")) == \
        G.lookup(G.resolve_word("sigma^2"))
    assert G.lookup(G.resolve_word("id")) == 0


def test_apply_point_respects_equation():
    model, F4, sigma, tau1, tau2, phi0 = picard_setup()
    comp = model.orbits[0].component
    E = fields.make_field(2, 6)
    fE = comp.f.embed_into(E)
    pts = [(x, y) for x in E.elements() for y in E.elements()
           if (y ** 3) == fE(x)][:8]
    for g in (sigma, tau1, phi0, compose(phi0, tau2)):
        for x, y in pts:
            i, X, Y = g.apply_point(0, x, y)
            assert (Y ** 3) == fE(X)


def test_frobenius_conjugation_of_unit():
    # an automorphism with a non-constant y-unit: x -> 1/x on y^2 = x^6 + 1
    F5 = fields.make_field(5, 1)
    comp = SuperellipticComponent("H", 2,
                                  Poly.from_ints(F5, [1, 0, 0, 0, 0, 0, 1]))
    model = CurveModel.simple(F5, [comp])
    one, zero = F5.one(), F5.zero()
    x = Poly.x(F5)
    inv = SemilinearAut(
        F5, 0, [0],
        [ComponentMap((zero, one, one, zero), one,
                      RatFunc(Poly.one(F5), x ** 3))], ("w",))
    validate_automorphism(model, inv)
    # it is an involution
    sq = compose(inv, inv)
    assert sq.key(1) == identity_aut(F5, 1).key(1)


def test_group_cap():
    model, F4, sigma, tau1, tau2, phi0 = picard_setup()
    with pytest.raises(GroupCapExceeded):
        AutGroup({"sigma": sigma, "tau1": tau1, "tau2": tau2,
                  "phi0": phi0}, 6, F4, 1, cap=10)


def test_permutation_action(chain24):
    G = chain24.build_group()
    assert G.order() == 24
    tau1 = G.resolve_word("tau1")
    assert tau1.perm == (0, 2, 1)
    validate_automorphism(chain24.model, tau1)
