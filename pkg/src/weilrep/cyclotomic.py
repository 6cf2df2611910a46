"""Exact arithmetic in cyclotomic fields Q(zeta_L).

Values are stored as rational vectors over the powers zeta_L^0..zeta_L^(L-1)
(the group algebra of Z/L); equality and rationality tests reduce modulo the
L-th cyclotomic polynomial, which is exactly the kernel of evaluation.  This
is all the algebra needed to make character inner products and trace values
exact: square roots of integers enter through quadratic Gauss sums.
"""

import math
from fractions import Fraction
from functools import lru_cache

import sympy


class Cyc:
    __slots__ = ("L", "vec")

    def __init__(self, L, vec):
        self.L = L
        self.vec = tuple(Fraction(v) for v in vec)
        assert len(self.vec) == L

    @classmethod
    def zero(cls, L):
        return cls(L, [0] * L)

    @classmethod
    def rational(cls, L, q):
        v = [Fraction(0)] * L
        v[0] = Fraction(q)
        return cls(L, v)

    @classmethod
    def root_of_unity(cls, L, k, coeff=1):
        v = [Fraction(0)] * L
        v[k % L] = Fraction(coeff)
        return cls(L, v)

    def promote(self, L2):
        if L2 == self.L:
            return self
        if L2 % self.L:
            raise ValueError("cannot promote %d -> %d" % (self.L, L2))
        step = L2 // self.L
        v = [Fraction(0)] * L2
        for i, c in enumerate(self.vec):
            v[i * step] = c
        return Cyc(L2, v)

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(self.L, other)
        L = math.lcm(self.L, other.L)
        return self.promote(L), other.promote(L)

    def __add__(self, other):
        a, b = self._pair(other)
        return Cyc(a.L, [x + y for x, y in zip(a.vec, b.vec)])

    def __sub__(self, other):
        a, b = self._pair(other)
        return Cyc(a.L, [x - y for x, y in zip(a.vec, b.vec)])

    def __neg__(self):
        return Cyc(self.L, [-x for x in self.vec])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.L, [x * other for x in self.vec])
        a, b = self._pair(other)
        out = [Fraction(0)] * a.L
        for i, x in enumerate(a.vec):
            if x:
                for j, y in enumerate(b.vec):
                    if y:
                        out[(i + j) % a.L] += x * y
        return Cyc(a.L, out)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return Cyc(self.L, [x / k for x in self.vec])

    def conj(self):
        out = [Fraction(0)] * self.L
        for i, x in enumerate(self.vec):
            out[(-i) % self.L] = x
        return Cyc(self.L, out)

    def reduced(self):
        """Canonical representative: remainder modulo Phi_L, ascending
        coefficients (length phi(L))."""
        phi = _cyclotomic_coeffs(self.L)
        rem = list(self.vec)
        deg_phi = len(phi) - 1
        while len(rem) > deg_phi:
            c = rem[-1]
            if c:
                off = len(rem) - 1 - deg_phi
                for i in range(deg_phi + 1):
                    rem[off + i] -= c * phi[i]
            rem.pop()
        return rem

    def is_zero(self):
        return all(c == 0 for c in self.reduced())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(self.L, other)
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("unhashable")

    def as_rational(self):
        """The value as a Fraction if it is rational, else None."""
        red = self.reduced()
        if any(red[1:]):
            return None
        return red[0] if red else Fraction(0)

    def is_real(self):
        return (self - self.conj()).is_zero()

    def to_complex(self):
        import cmath
        acc = 0j
        for i, c in enumerate(self.vec):
            if c:
                acc += float(c) * cmath.exp(2j * cmath.pi * i / self.L)
        return acc

    def __repr__(self):
        return "Cyc(%d, %r)" % (self.L, [str(c) for c in self.reduced()])


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(L):
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(L, x), x)
    return [Fraction(int(c)) for c in reversed(poly.all_coeffs())]


def sqrt_prime(p):
    """sqrt(p) as an exact cyclotomic number (via quadratic Gauss sums)."""
    if p == 2:
        # zeta_8 + zeta_8^-1
        return Cyc(8, [0, 1, 0, 0, 0, 0, 0, 1])
    g = Cyc.zero(p)
    for a in range(1, p):
        sign = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
        g = g + Cyc.root_of_unity(p, a, sign)
    if p % 4 == 1:
        return g
    # g = i*sqrt(p); multiply by -i = zeta_4^-1 in Q(zeta_4p)
    return g.promote(4 * p) * Cyc.root_of_unity(4 * p, 3 * p)


def sqrt_prime_power(q):
    """sqrt(q) for a prime power q, exactly."""
    fac = sympy.factorint(q)
    assert len(fac) == 1
    (p, s), = fac.items()
    out = Cyc.rational(1, p ** (s // 2))
    if s % 2:
        out = out * sqrt_prime(p)
    return out
