"""Twisted models for Frobenius elements.

Given the stable-reduction model over F_q with automorphism group data and a
Frobenius element phi = phi0^f * g, this module produces a model over
F_{q^f} whose F_{q^(f m)}-point counts compute the traces of phi^m on the
Weil representation.

The inertia part must first be brought to one of two canonical shapes on
every orbit representative (conjugating phi inside the group changes nothing
about the counts):

* tame:  x -> xi * x,   y -> zeta * y    (xi, zeta roots of unity)
* wild:  x -> x + xi,   y -> zeta * y

The twisted equation is y^n = B * f(alpha^(-1) x) (tame) or
y^n = B * f(x - alpha) (wild), where alpha solves the relevant descent
equation and B = beta^n normalizes the y-coordinate.  B is computed in a
bounded-size field even when beta itself only exists far above the field
bound (see fields.solve_unit_power)."""

import math
from dataclasses import dataclass, field as dc_field

from . import fields
from .automorphisms import compose, pure_frobenius
from .curve import CurveModel, OrbitComponent, SuperellipticComponent
from .errors import (FieldBoundExceeded, NoCanonicalShape, ShapeIncompatible,
                     ValidationError)
from .polynomials import Poly


@dataclass(frozen=True)
class CanonicalShape:
    kind: str  # "tame" or "wild"
    xi: object
    zeta: object


def map_shape(cmap):
    """CanonicalShape of a ComponentMap, or None if it is neither a scaling
    nor a translation with constant y-unit."""
    a, b, c, d = cmap.mobius
    if not c.is_zero() or d.is_zero():
        return None
    dinv = d.inverse()
    a, b = a * dinv, b * dinv
    cu, num, den = cmap.y_unit.normalize()
    if not (num.is_constant() and den.is_constant()):
        return None
    zeta = cmap.y_scale * cu
    if a.is_zero() or zeta.is_zero():
        return None
    if b.is_zero():
        return CanonicalShape("tame", a, zeta)
    if a == a.field.one():
        return CanonicalShape("wild", b, zeta)
    return None


def check_shape(comp, shape):
    """Verify the twisting preconditions of a component against a canonical
    shape; raises ShapeIncompatible.  Returns the exponent residue m of the
    tame case (support of f constant mod ord(xi), zeta^n = xi^m)."""
    amb = shape.xi.field
    f = comp.f.embed_into(amb)
    n = comp.n
    if shape.kind == "tame":
        ord_xi = fields.element_order(shape.xi)
        residues = {k % ord_xi for k in range(f.degree() + 1)
                    if not f.coeff(k).is_zero()}
        if len(residues) != 1:
            raise ShapeIncompatible(
                "support of f is not constant modulo ord(xi) = %d" % ord_xi,
                residues=sorted(residues))
        m = residues.pop()
        if shape.zeta ** n != shape.xi ** m:
            raise ShapeIncompatible("zeta^n != xi^m", m=m)
        return m
    else:
        if f.compose_linear(amb.one(), shape.xi) != f:
            raise ShapeIncompatible("f(x + xi) != f(x)")
        if shape.zeta ** n != amb.one():
            raise ShapeIncompatible("zeta^n != 1 in the wild case")
        return None


@dataclass
class OrbitTwist:
    component: SuperellipticComponent
    length: int
    shape_kind: str
    alpha_coeffs: tuple
    alpha_field_degree: int
    unit_constant_coded: int
    virtual_degree: int
    work_degree: int


@dataclass
class TwistResult:
    model: CurveModel
    f_power: int
    conjugator_word: tuple
    orbits: list = dc_field(default_factory=list)


def twist_component(comp, shape, q_rel, max_bits=fields.MAX_FIELD_BITS):
    """Twisted equation of one component for a canonical inertia shape and
    relative Frobenius size q_rel.  Returns (component over the canonical
    field of q_rel elements, OrbitTwist audit)."""
    p = comp.field.p
    s_q = round(math.log(q_rel, p))
    if p ** s_q != q_rel:
        raise ValidationError("q_rel must be a power of p")
    check_shape(comp, shape)
    n = comp.n

    def finish(W, alpha, B, v):
        fW = comp.f.embed_into(W)
        if shape.kind == "tame":
            ainv = alpha.inverse()
            coeffs = [B * c * ainv ** k for k, c in enumerate(fW.coeffs)]
            f1 = Poly(W, coeffs)
        else:
            f1_scaled = fW.compose_linear(W.one(), -alpha)
            f1 = Poly(W, [B * c for c in f1_scaled.coeffs])
        target = fields.make_field(p, s_q, max_bits=max_bits)
        down = []
        for c in f1.coeffs:
            if c ** q_rel != c:
                raise ValidationError(
                    "twisted coefficient not fixed by the relative Frobenius")
            down.append(fields.restrict(c, target))
        new = SuperellipticComponent(comp.label + "'", n, Poly(target, down))
        audit = OrbitTwist(new, 1, shape.kind, tuple(alpha.coeffs), W.s,
                           B.coded(), v, W.s)
        return new, audit

    base_deg = math.lcm(comp.field.s, shape.xi.field.s, s_q)
    mult = 1
    while p ** (base_deg * mult) < (1 << max_bits):
        W = fields.make_field(p, base_deg * mult, max_bits=max_bits)
        if shape.kind == "tame":
            alpha = fields.kummer_solve_in(W, shape.xi, q_rel)
        else:
            alpha = fields.artin_schreier_solve_in(W, shape.xi, q_rel)
        if alpha is None:
            mult += 1
            continue
        res = fields.solve_unit_power(shape.zeta, n, q_rel, W)
        if res is None:
            mult += 1
            continue
        return finish(W, alpha, res[0], res[1])
    if shape.kind == "wild":
        # The descent datum alpha may only exist far above the enumeration
        # bound, but finding it is linear algebra over F_p, and the twisted
        # coefficients restrict back down to F_{q_rel}, so a large work
        # field is harmless: nothing in it is ever enumerated.
        for mult in range(1, 9):
            deg = base_deg * mult
            bits = deg * max(1, p.bit_length()) + 2
            if p ** deg < (1 << max_bits):
                continue  # already tried above
            W = fields.make_field(p, deg, max_bits=max(max_bits, bits))
            alpha = fields.artin_schreier_solve_in(W, shape.xi, q_rel)
            if alpha is None:
                continue
            res = fields.solve_unit_power(shape.zeta, n, q_rel, W)
            if res is None:
                continue
            return finish(W, alpha, res[0], res[1])
    raise FieldBoundExceeded(
        "no twisting data within 2^%d" % max_bits, max_bits=max_bits)


def _orbits(perm):
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        out.append(cyc)
    return out


def _inertia_map(phi_r, i):
    """Component map of the inertia part of phi_r = phi0^j * u at a fixed
    component i (u = phi_r with the coefficient Frobenius undone)."""
    return phi_r.maps[i].frob(-phi_r.frob)


def twist_model(model, g, G, f_power, max_bits=fields.MAX_FIELD_BITS):
    """Twisted model of the Frobenius element phi0^f_power * g.

    The element (conjugated inside G if necessary, which leaves all point
    counts unchanged) must act by a canonical shape on every orbit
    representative.  The result lives over the canonical field with q^f
    elements; a perm-orbit of length r is represented by one component over
    the degree-r extension."""
    base = model.base
    if any(orb.length != 1 for orb in model.orbits):
        raise ValidationError("twisting applies to the base reduction model")
    s0 = base.s
    p = base.p
    ncomp = len(model.orbits)
    if g.frob % s0:
        raise ValidationError("element Frobenius exponent not a power of q")
    j_eff = f_power + g.frob // s0
    if j_eff < 1:
        raise ValidationError("need a genuine Frobenius element (f >= 1)")
    phi = compose(pure_frobenius(G.ambient, ncomp, f_power * s0), g)

    chosen = None
    inv = G.inverse_indices()
    for hi, h in enumerate(G.elements):
        cand = compose(compose(h, phi), G.elements[inv[hi]])
        orbs = _orbits(cand.perm)
        shapes = []
        for cyc in orbs:
            phi_r = cand
            for _ in range(len(cyc) - 1):
                phi_r = compose(phi_r, cand)
            sh = map_shape(_inertia_map(phi_r, cyc[0]))
            if sh is None:
                break
            shapes.append((cyc, sh))
        else:
            chosen = (h, cand, shapes)
            break
    if chosen is None:
        raise NoCanonicalShape(
            "no conjugate of the element is canonical on all orbits")
    h, phi_c, shapes = chosen

    new_base = fields.make_field(p, s0 * j_eff, max_bits=max_bits)
    result = TwistResult(None, f_power, h.word)
    orbits = []
    comps = model.components()
    for cyc, sh in shapes:
        r = len(cyc)
        q_rel = base.order ** (j_eff * r)
        comp = comps[cyc[0]]
        new_comp, audit = twist_component(comp, sh, q_rel, max_bits=max_bits)
        audit.length = r
        orbits.append(OrbitComponent(r, new_comp))
        result.orbits.append(audit)
    result.model = CurveModel(new_base, orbits)
    return result


def same_equation_up_to_unit(comp_a, comp_b):
    """Whether two components over one field differ only by an n-th-power
    constant: f_a = c * f_b with c an n-th power.  Returns (bool, c)."""
    if comp_a.n != comp_b.n or comp_a.field != comp_b.field:
        return False, None
    fa, fb = comp_a.f, comp_b.f
    if fa.degree() != fb.degree():
        return False, None
    c = None
    for k in range(fa.degree() + 1):
        x, y = fa.coeff(k), fb.coeff(k)
        if x.is_zero() != y.is_zero():
            return False, None
        if not x.is_zero():
            ratio = x * y.inverse()
            if c is None:
                c = ratio
            elif c != ratio:
                return False, None
    ok = c is not None and fields.count_power_roots(c, comp_a.n) > 0
    return ok, c
