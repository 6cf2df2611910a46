"""Univariate polynomials with finite-field coefficients.

Coefficients are stored low degree first with no trailing zeros; the zero
polynomial has an empty coefficient tuple.  Includes the characteristic-p
squarefree decomposition needed for curve validation.
"""

from . import fields
from .errors import ValidationError


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(c) for c in ints])

    @classmethod
    def from_vectors(cls, field, vectors):
        return cls(field, [field.element(v) for v in vectors])

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one()])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero(), field.one()])

    @classmethod
    def constant(cls, c):
        return cls(c.field, [c])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one()

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lc(self):
        if not self.coeffs:
            raise ValidationError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero()

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.key, self.coeffs))

    def __repr__(self):
        return "Poly(%r)" % ([list(c.coeffs) for c in self.coeffs],)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        F = self.field
        out = [F.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(F, out)

    def scale(self, c):
        return Poly(self.field, [a * c for a in self.coeffs])

    def __pow__(self, e):
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree()
        inv_lc = other.lc().inverse()
        quot = [F.zero()] * max(0, len(rem) - db)
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv_lc
            off = len(rem) - 1 - db
            quot[off] = c
            for i in range(db + 1):
                rem[off + i] = rem[off + i] - c * other.coeffs[i]
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.lc().inverse())

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            c = F.from_int(i)
            out.append(self.coeffs[i] * c)
        return Poly(F, out)

    def __call__(self, x):
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        """self(inner(x)) for a polynomial inner."""
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def compose_linear(self, a, b):
        """self(a*x + b)."""
        return self.compose(Poly(self.field, [b, a]))

    def frob(self, j):
        """Coefficientwise p^j-power Frobenius."""
        return Poly(self.field,
                    [fields.frobenius_power(c, j) for c in self.coeffs])

    def embed_into(self, dst):
        return Poly(dst, [fields.embed(c, dst) for c in self.coeffs])

    def pth_root(self):
        """The polynomial g with g^p = self; self must have all exponents
        divisible by p."""
        F = self.field
        p = F.p
        out = []
        for i, c in enumerate(self.coeffs):
            if i % p:
                if not c.is_zero():
                    raise ValidationError("polynomial is not a p-th power")
            else:
                # c^(p^(s-1)) is the p-th root of c
                out.append(fields.frobenius_power(c, F.s - 1))
        return Poly(F, out)

    def squarefree_decomposition(self):
        """{multiplicity: monic squarefree factor} with the leading
        coefficient dropped; the product of factor^mult equals self.monic().

        Uses the characteristic-p variant of Yun's algorithm: multiplicities
        prime to p come out of the gcd chain, the p-th-power part is handled
        by recursion on the p-th root.
        """
        f = self.monic()
        if f.is_constant():
            return {}
        d = f.derivative()
        if d.is_zero():
            sub = f.pth_root().squarefree_decomposition()
            return {m * self.field.p: g for m, g in sub.items()}
        out = {}
        c = f.gcd(d)
        w = f // c
        i = 1
        while not w.is_one():
            y = w.gcd(c)
            z = w // y
            if z.degree() > 0:
                out[i] = out.get(i, Poly.one(self.field)) * z
            c = c // y
            w = y
            i += 1
        if not c.is_one():
            for m, g in c.pth_root().squarefree_decomposition().items():
                m *= self.field.p
                out[m] = out.get(m, Poly.one(self.field)) * g
        return out
