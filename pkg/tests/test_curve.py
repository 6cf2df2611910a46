import math
import random

import pytest

from weilrep import curve, fields
from weilrep.curve import (CurveModel, OrbitComponent, SuperellipticComponent,
                           validate_component)
from weilrep.errors import (ConstantF, ExponentDivisibleByP,
                            NotAbsolutelyIrreducible, ValidationError)
from weilrep.polynomials import Poly


def comp(p, s, n, ints, label="C"):
    F = fields.make_field(p, s)
    return SuperellipticComponent(label, n, Poly.from_ints(F, ints))


def test_validation_rejects_bad_exponent():
    with pytest.raises(ExponentDivisibleByP):
        validate_component(comp(2, 1, 2, [0, 1, 1]))


def test_validation_rejects_constant_f():
    with pytest.raises(ConstantF):
        validate_component(comp(3, 1, 2, [1]))


def test_validation_rejects_common_multiplicity():
    # f = x^2 (x+1)^4: every multiplicity shares a factor with n = 2
    F = fields.make_field(3, 1)
    x = Poly.x(F)
    one = Poly.one(F)
    f = x ** 2 * (x + one) ** 4
    with pytest.raises(NotAbsolutelyIrreducible):
        validate_component(SuperellipticComponent("C", 2, f))


def test_validation_rejects_high_multiplicity():
    # a factor with multiplicity >= n makes the model non-normal
    F = fields.make_field(5, 1)
    x = Poly.x(F)
    f = x ** 3 * (x + Poly.one(F))
    with pytest.raises(ValidationError):
        validate_component(SuperellipticComponent("C", 3, f))


def test_genus_picard():
    # y^3 = quartic with distinct roots: genus 3
    assert curve.genus(comp(2, 1, 3, [0, 1, 0, 0, 1])) == 3


def test_genus_elliptic():
    assert curve.genus(comp(2, 1, 3, [0, 1, 1])) == 1
    assert curve.genus(comp(5, 1, 2, [1, 1, 0, 1])) == 1


def test_genus_hyperelliptic():
    # y^2 = degree-5 squarefree over F_5: genus 2
    assert curve.genus(comp(5, 1, 2, [1, 2, 0, 0, 0, 1])) == 2


def test_known_counts():
    c = comp(2, 1, 3, [0, 1, 0, 0, 1])
    assert [curve.count_component(c, m) for m in (1, 2, 3)] == [3, 5, 9]


def test_count_with_jobs_deterministic():
    c = comp(2, 1, 3, [0, 1, 0, 0, 1])
    for m in (3, 5):
        assert curve.count_component(c, m, jobs=4) == \
            curve.count_component(c, m, jobs=1)


def _random_squarefree_component(rng):
    while True:
        p = rng.choice([2, 3, 5])
        n = rng.choice([n for n in (2, 3, 4, 5, 6) if math.gcd(n, p) == 1])
        s = rng.choice([s for s in (1, 2, 3, 4) if p ** s <= 16])
        F = fields.make_field(p, s)
        deg = rng.randint(1, 8)
        coeffs = [F.from_coded(rng.randrange(F.order)) for _ in range(deg)]
        coeffs.append(F.from_coded(rng.randrange(1, F.order)))
        f = Poly(F, coeffs)
        if f.degree() < 1:
            continue
        if f.gcd(f.derivative()).degree() != 0:
            continue  # keep it squarefree so the oracle applies
        try:
            c = SuperellipticComponent("R", n, f)
            validate_component(c)
        except ValidationError:
            continue
        return c


def test_counts_match_bruteforce_oracle():
    rng = random.Random(11)
    for _ in range(40):
        c = _random_squarefree_component(rng)
        for m in (1, 2):
            if c.field.order ** m > 700:
                continue
            assert curve.count_component(c, m) == \
                curve.count_component_bruteforce(c, m), (c.label, c.n, m)


def test_weil_bound_on_random_components():
    rng = random.Random(5)
    for _ in range(25):
        c = _random_squarefree_component(rng)
        g = curve.genus(c)
        q = c.field.order
        n1 = curve.count_component(c, 1)
        assert abs(n1 - (q + 1)) <= 2 * g * math.isqrt(q) + 2 * g


def test_orbit_counting():
    # one orbit of length 2: points only exist over even-degree extensions
    F2 = fields.make_field(2, 1)
    F4 = fields.make_field(2, 2)
    c = SuperellipticComponent("O", 3,
                               Poly(F4, [F4.generator(), F4.one()]))
    model = CurveModel(F2, [OrbitComponent(2, c)])
    assert curve.count_points(model, 1) == 0
    assert curve.count_points(model, 2) == 2 * curve.count_component(c, 1)


def test_bruteforce_rejects_non_squarefree():
    F = fields.make_field(3, 1)
    x = Poly.x(F)
    f = x ** 2 * (x + Poly.one(F))
    c = SuperellipticComponent("NS", 4, f)
    with pytest.raises(ValidationError):
        curve.count_component_bruteforce(c, 1)


def test_ramification_data():
    c = comp(2, 1, 3, [0, 1, 0, 0, 1])
    ram = curve.ramification_data(c, 1)
    # x = 0 is the only rational root of x^4 + x ... plus x = 1
    assert all(f.count in (1, 3) for f in ram)
