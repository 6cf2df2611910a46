"""Superelliptic curve models and point counting.

A component is an affine model y^n = f(x) over a finite field, smooth and
projective implicitly: every fiber is completed with its ramified points and
the points above x = infinity.  A CurveModel is a disjoint union of
Frobenius-orbits of components: an orbit of length r is stored by one
representative over the degree-r extension of the model's base field.
"""

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _kernel, fields
from .errors import (ConstantF, ExponentDivisibleByP, MathInconsistencyError,
                     NotAbsolutelyIrreducible, ValidationError)
from .polynomials import Poly

CHUNK = 1 << 15


@dataclass(frozen=True)
class SuperellipticComponent:
    label: str
    n: int
    f: Poly

    @property
    def field(self):
        return self.f.field


@dataclass(frozen=True)
class OrbitComponent:
    length: int
    component: SuperellipticComponent


class CurveModel:
    def __init__(self, base, orbits):
        self.base = base
        self.orbits = list(orbits)
        for orb in self.orbits:
            F = orb.component.field
            if F.p != base.p or F.s != base.s * orb.length:
                raise ValidationError(
                    "orbit representative %r must live over the degree-%d "
                    "extension of the base field" % (orb.component.label,
                                                     orb.length))

    @classmethod
    def simple(cls, base, components):
        return cls(base, [OrbitComponent(1, c) for c in components])

    def components(self):
        return [orb.component for orb in self.orbits]


def validate_component(comp):
    """Raise a ValidationError if y^n = f does not define a geometrically
    irreducible superelliptic curve in normalized form."""
    F = comp.field
    if comp.n < 2:
        raise ValidationError("exponent n must be >= 2")
    if comp.n % F.p == 0:
        raise ExponentDivisibleByP(
            "n = %d is divisible by the characteristic %d" % (comp.n, F.p))
    if comp.f.is_zero() or comp.f.is_constant():
        raise ConstantF("f must be non-constant")
    decomp = comp.f.squarefree_decomposition()
    mults = sorted(decomp)
    if any(m >= comp.n for m in mults):
        raise NotAbsolutelyIrreducible(
            "f has a factor of multiplicity >= n; divide out n-th powers "
            "first", multiplicities=mults)
    g = comp.n
    for m in mults:
        g = math.gcd(g, m)
    if g > 1:
        raise NotAbsolutelyIrreducible(
            "gcd of n and all multiplicities is %d > 1" % g,
            multiplicities=mults)


def genus(comp):
    """Genus of the smooth projective model, by Riemann-Hurwitz over the
    degree-n covering of the x-line."""
    n = comp.n
    decomp = comp.f.squarefree_decomposition()
    total = -2 * n + (n - math.gcd(n, comp.f.degree()))
    for mult, factor in decomp.items():
        total += factor.degree() * (n - math.gcd(n, mult))
    if total % 2:
        raise MathInconsistencyError("odd value 2g - 2 = %d" % total)
    g = (total + 2) // 2
    if g < 0:
        raise MathInconsistencyError("negative genus")
    return g


@dataclass(frozen=True)
class RamifiedFiber:
    place: object  # x-coordinate, or the string "inf"
    multiplicity: int
    d: int  # gcd(n, multiplicity), the local fiber size parameter
    unit: object  # field element whose d-th roots are counted
    count: int


def ramification_data(comp, ext=1, max_bits=fields.MAX_FIELD_BITS):
    """Ramified fibers (roots of f and x = infinity) over the degree-ext
    extension of the component's field."""
    E = fields.extension_of(comp.field, ext, max_bits=max_bits)
    fE = comp.f.embed_into(E)
    out = []
    for x0 in _roots(fE):
        a = 0
        g = fE
        lin = Poly(E, [-x0, E.one()])
        while True:
            q, r = divmod(g, lin)
            if not r.is_zero():
                break
            g = q
            a += 1
        d = math.gcd(comp.n, a)
        unit = g(x0)
        out.append(RamifiedFiber(x0, a, d, unit,
                                 fields.count_power_roots(unit, d)))
    deg = fE.degree()
    a_inf = comp.n * ((deg + comp.n - 1) // comp.n) - deg
    d_inf = math.gcd(comp.n, deg)
    unit = fE.lc()
    out.append(RamifiedFiber("inf", a_inf, d_inf, unit,
                             fields.count_power_roots(unit, d_inf)))
    return out


def _roots(fE):
    E = fE.field
    tables = E.gf2_tables()
    if tables is not None:
        exp, log = tables
        coeffs = [c.coded() for c in fE.coeffs]
        _, roots = _kernel.count_fibers(exp, log, coeffs, 1, 0, E.order)
        return [E.from_coded(r) for r in roots]
    return [x for x in E.elements() if fE(x).is_zero()]


def count_component(comp, ext=1, jobs=1, max_bits=fields.MAX_FIELD_BITS):
    """Number of points of the smooth projective model over the degree-ext
    extension of the component's field."""
    E = fields.extension_of(comp.field, ext, max_bits=max_bits)
    fE = comp.f.embed_into(E)
    n = comp.n
    tables = E.gf2_tables()
    total = 0
    roots = []
    if tables is not None:
        exp, log = tables
        coeffs = [c.coded() for c in fE.coeffs]
        chunks = [(lo, min(lo + CHUNK, E.order))
                  for lo in range(0, E.order, CHUNK)]
        if jobs > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(
                    lambda c: _kernel.count_fibers(exp, log, coeffs, n, *c),
                    chunks))
        else:
            results = [_kernel.count_fibers(exp, log, coeffs, n, lo, hi)
                       for lo, hi in chunks]
        for t, rs in results:
            total += t
            roots.extend(E.from_coded(r) for r in rs)
    else:
        M = E.order - 1
        g = math.gcd(n, M)
        cof = M // g
        one = E.one()
        for x in E.elements():
            v = fE(x)
            if v.is_zero():
                roots.append(x)
            elif (v ** cof) == one:
                total += g
    # ramified fibers above the roots of f, then infinity
    for x0 in roots:
        a = 0
        g0 = fE
        lin = Poly(E, [-x0, E.one()])
        while True:
            q, r = divmod(g0, lin)
            if not r.is_zero():
                break
            g0 = q
            a += 1
        total += fields.count_power_roots(g0(x0), math.gcd(n, a))
    deg = fE.degree()
    total += fields.count_power_roots(fE.lc(), math.gcd(n, deg))
    return total


def count_points(model, ext=1, jobs=1, max_bits=fields.MAX_FIELD_BITS):
    """Points of the model over the degree-ext extension of its base field.
    An orbit of length r contributes r copies of its representative's count
    when r | ext and nothing otherwise."""
    total = 0
    for orb in model.orbits:
        if ext % orb.length == 0:
            total += orb.length * count_component(
                orb.component, ext // orb.length, jobs=jobs,
                max_bits=max_bits)
    return total


def geometric_component_count(model):
    return sum(orb.length for orb in model.orbits)


def count_component_bruteforce(comp, ext=1):
    """Independent enumeration oracle: tally y^n over all y, then sum fiber
    sizes pointwise; infinity handled by the same direct enumeration.

    Only valid for squarefree f, where the affine model is already smooth;
    with multiple roots the plane model undercounts the normalization."""
    decomp = comp.f.squarefree_decomposition()
    if any(m > 1 for m in decomp):
        raise ValidationError("brute-force oracle requires squarefree f")
    E = fields.extension_of(comp.field, ext)
    fE = comp.f.embed_into(E)
    n = comp.n
    powers = Counter((y ** n).coded() for y in E.elements())
    total = 0
    for x in E.elements():
        total += powers[fE(x).coded()]
    # points above infinity on the smooth model: w^d = leading coefficient
    d = math.gcd(n, fE.degree())
    lc = fE.lc()
    total += sum(1 for w in E.elements()
                 if not w.is_zero() and (w ** d) == lc)
    if lc.is_zero():
        raise MathInconsistencyError("zero leading coefficient")
    return total
