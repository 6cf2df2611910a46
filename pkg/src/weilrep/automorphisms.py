"""Semilinear automorphisms of a stable reduction and the finite groups they
generate.

An element acts on a disjoint union of superelliptic components as

    P = (x, y) on component i  |-->  (A(x^p^j), lam * u(x^p^j) * y^p^j)
                                      on component perm[i],

where j is the Frobenius exponent, A a Moebius transformation and lam * u(x)
a scalar times a rational function (the y-unit).  All coefficient data lives
in one ambient field; models and points over extensions are handled by
embedding.
"""

from dataclasses import dataclass

from . import fields
from .errors import (EquationMismatch, GroupCapExceeded, SingularMobius,
                     ValidationError)
from .polynomials import Poly


class RatFunc:
    """Quotient of two polynomials, den != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def one(cls, field):
        return cls(Poly.one(field), Poly.one(field))

    @classmethod
    def constant(cls, c):
        return cls(Poly.constant(c), Poly.one(c.field))

    def __mul__(self, other):
        return RatFunc(self.num * other.num, self.den * other.den)

    def frob(self, j):
        return RatFunc(self.num.frob(j), self.den.frob(j))

    def __eq__(self, other):
        return (isinstance(other, RatFunc)
                and self.num * other.den == other.num * self.den)

    def normalize(self):
        """(c, n, d) with self = c * n/d, n and d coprime monic."""
        if self.num.is_zero():
            f = self.num.field
            return f.zero(), Poly.zero(f), Poly.one(f)
        g = self.num.gcd(self.den)
        n = self.num // g
        d = self.den // g
        c = n.lc() * d.lc().inverse()
        return c, n.monic(), d.monic()

    def compose_mobius(self, a, b, c, d):
        """self((a*x + b)/(c*x + d)) as a RatFunc."""
        F = self.num.field
        top = Poly(F, [b, a])
        bot = Poly(F, [d, c])
        D = max(self.num.degree(), self.den.degree(), 0)

        def clear(poly):
            acc = Poly.zero(F)
            for k in range(poly.degree() + 1):
                acc = acc + Poly.constant(poly.coeff(k)) * top ** k * bot ** (D - k)
            return acc

        return RatFunc(clear(self.num), clear(self.den))

    def __call__(self, x):
        dv = self.den(x)
        if dv.is_zero():
            raise ZeroDivisionError("pole of y-unit")
        return self.num(x) * dv.inverse()


@dataclass(frozen=True)
class ComponentMap:
    """The per-component data (A, lam, u) of a semilinear automorphism."""

    mobius: tuple  # (a, b, c, d) field elements, ad - bc != 0
    y_scale: object  # lam
    y_unit: RatFunc

    def normalized_key(self):
        a, b, c, d = self.mobius
        lead = next(v for v in (a, b, c, d) if not v.is_zero())
        inv = lead.inverse()
        mob = tuple((v * inv).coeffs for v in self.mobius)
        cu, n, dpoly = self.y_unit.normalize()
        lam = self.y_scale * cu
        return (mob, lam.coeffs, n.coeffs, dpoly.coeffs)

    def frob(self, j):
        a, b, c, d = self.mobius
        fp = fields.frobenius_power
        return ComponentMap(
            (fp(a, j), fp(b, j), fp(c, j), fp(d, j)),
            fp(self.y_scale, j), self.y_unit.frob(j))

    def mobius_apply(self, x):
        a, b, c, d = self.mobius
        E = x.field
        num = fields.embed(a, E) * x + fields.embed(b, E)
        den = fields.embed(c, E) * x + fields.embed(d, E)
        if den.is_zero():
            raise ZeroDivisionError("point maps to infinity")
        return num * den.inverse()


def identity_map(ambient):
    one, zero = ambient.one(), ambient.zero()
    return ComponentMap((one, zero, zero, one), one, RatFunc.one(ambient))


def affine_map(a, b, y_scale):
    """x -> a*x + b, y -> y_scale * y, all in one field."""
    F = a.field
    return ComponentMap((a, b, F.zero(), F.one()), y_scale, RatFunc.one(F))


class SemilinearAut:
    __slots__ = ("ambient", "frob", "perm", "maps", "word")

    def __init__(self, ambient, frob, perm, maps, word=()):
        self.ambient = ambient
        self.frob = frob
        self.perm = tuple(perm)
        self.maps = tuple(maps)
        self.word = tuple(word)

    def key(self, frob_period=None):
        j = self.frob if frob_period is None else self.frob % frob_period
        return (j, self.perm, tuple(m.normalized_key() for m in self.maps))

    def __repr__(self):
        w = " ".join(self.word) if self.word else "?"
        return "<aut %s frob=%d perm=%s>" % (w, self.frob, self.perm)

    def n_components(self):
        return len(self.perm)

    def apply_point(self, i, x, y):
        """Image of the point (x, y) on component i; coordinates live in any
        common extension of the ambient field."""
        j = self.frob
        X = fields.frobenius_power(x, j)
        Y = fields.frobenius_power(y, j)
        m = self.maps[i]
        E = x.field
        ux = RatFunc(m.y_unit.num.embed_into(E), m.y_unit.den.embed_into(E))(X)
        return self.perm[i], m.mobius_apply(X), fields.embed(m.y_scale, E) * ux * Y


def identity_aut(ambient, ncomp):
    return SemilinearAut(ambient, 0, range(ncomp),
                         [identity_map(ambient)] * ncomp, ())


def pure_frobenius(ambient, ncomp, j, name="phi0"):
    return SemilinearAut(ambient, j, range(ncomp),
                         [identity_map(ambient)] * ncomp, (name,))


def compose(g, h):
    """g after h.  Frobenius exponents add (kept as raw integers here; groups
    reduce them modulo the Frobenius period)."""
    if g.ambient != h.ambient:
        raise ValidationError("composing automorphisms over different fields")
    jg = g.frob
    perm = tuple(g.perm[h.perm[i]] for i in range(len(h.perm)))
    maps = []
    for i in range(len(h.perm)):
        gm = g.maps[h.perm[i]]
        hm = h.maps[i].frob(jg)
        ga, gb, gc, gd = gm.mobius
        ha, hb, hc, hd = hm.mobius
        mob = (ga * ha + gb * hc, ga * hb + gb * hd,
               gc * ha + gd * hc, gc * hb + gd * hd)
        unit = gm.y_unit.compose_mobius(*hm.mobius) * hm.y_unit
        maps.append(ComponentMap(mob, gm.y_scale * hm.y_scale, unit))
    return SemilinearAut(g.ambient, jg + h.frob, perm, maps,
                         g.word + h.word)


def validate_automorphism(model, g):
    """Check that g preserves the curve equations of `model` (a CurveModel
    whose components all live over subfields of g's ambient field).  Raises
    EquationMismatch / SingularMobius on failure."""
    amb = g.ambient
    comps = [orb.component for orb in model.orbits]
    if len(comps) != len(g.perm):
        raise ValidationError("component count mismatch")
    if sorted(g.perm) != list(range(len(g.perm))):
        raise ValidationError("perm is not a permutation")
    for i, comp in enumerate(comps):
        tgt = comps[g.perm[i]]
        if comp.n != tgt.n:
            raise EquationMismatch(
                "components %d -> %d have different exponents" % (i, g.perm[i]))
        m = g.maps[i]
        a, b, c, d = m.mobius
        if (a * d - b * c).is_zero():
            raise SingularMobius("Moebius map of component %d is singular" % i)
        if m.y_scale.is_zero():
            raise EquationMismatch("zero y-scale on component %d" % i)
        f_src = comp.f.embed_into(amb).frob(g.frob)
        f_tgt = tgt.f.embed_into(amb)
        n = comp.n
        D = f_tgt.degree()
        top = Poly(amb, [b, a])
        bot = Poly(amb, [d, c])
        lhs_num = Poly.zero(amb)
        for k in range(D + 1):
            lhs_num = lhs_num + (Poly.constant(f_tgt.coeff(k))
                                 * top ** k * bot ** (D - k))
        lhs_den = bot ** D
        scale = Poly.constant(m.y_scale ** n)
        rhs_num = scale * m.y_unit.num ** n * f_src
        rhs_den = m.y_unit.den ** n
        if lhs_num * rhs_den != rhs_num * lhs_den:
            raise EquationMismatch(
                "map does not carry component %d onto component %d"
                % (i, g.perm[i]))


class AutGroup:
    """Finite group generated by semilinear automorphisms, with Frobenius
    exponents taken modulo frob_period."""

    def __init__(self, generators, frob_period, ambient, ncomp, cap=10000):
        self.generators = dict(generators)
        self.frob_period = frob_period
        self.ambient = ambient
        self.identity = identity_aut(ambient, ncomp)
        self.elements = [self.identity]
        self.index = {self.identity.key(frob_period): 0}
        queue = [self.identity]
        while queue:
            cur = queue.pop(0)
            for name, gen in self.generators.items():
                new = compose(cur, gen)
                k = new.key(frob_period)
                if k not in self.index:
                    if len(self.elements) >= cap:
                        raise GroupCapExceeded(
                            "group generation exceeded cap %d" % cap)
                    new = SemilinearAut(ambient, new.frob % frob_period,
                                        new.perm, new.maps, new.word)
                    self.index[k] = len(self.elements)
                    self.elements.append(new)
                    queue.append(new)
        self._inv = None
        self._classes = None

    def order(self):
        return len(self.elements)

    def lookup(self, g):
        """Index of the stored element equal to g (frob taken mod period)."""
        k = g.key(self.frob_period)
        if k not in self.index:
            raise ValidationError("element does not belong to the group")
        return self.index[k]

    def multiply(self, a, b):
        return self.elements[self.lookup(compose(a, b))]

    def inverse(self, g):
        return self.elements[self.inverse_indices()[self.lookup(g)]]

    def inverse_indices(self):
        if self._inv is None:
            inv = [None] * len(self.elements)
            for i, e in enumerate(self.elements):
                cur = e
                while self.lookup(cur) != 0:
                    prev = cur
                    cur = self.multiply(cur, e)
                inv[i] = self.lookup(prev) if i else 0
            self._inv = inv
        return self._inv

    def resolve_word(self, text):
        """Element named by a word like "phi0^2 tau1 sigma"; "1" or "id" is
        the identity."""
        text = text.strip()
        if text in ("", "1", "id", "e"):
            return self.identity
        acc = self.identity
        for token in text.split():
            if "^" in token:
                name, exp = token.split("^", 1)
                exp = int(exp)
            else:
                name, exp = token, 1
            if name not in self.generators:
                raise ValidationError("unknown generator %r" % name)
            g = self.generators[name]
            if exp < 0:
                g = self.inverse(self.elements[self.lookup(g)])
                exp = -exp
            for _ in range(exp):
                acc = compose(acc, g)
        return self.elements[self.lookup(acc)]

    def conjugacy_classes(self):
        """List of classes, each a sorted list of element indices."""
        if self._classes is None:
            inv = self.inverse_indices()
            seen = [False] * len(self.elements)
            classes = []
            for i, e in enumerate(self.elements):
                if seen[i]:
                    continue
                cls = set()
                for j, h in enumerate(self.elements):
                    k = self.lookup(compose(compose(h, e),
                                            self.elements[inv[j]]))
                    cls.add(k)
                    seen[k] = True
                classes.append(sorted(cls))
            self._classes = classes
        return self._classes
