"""Exact finite field arithmetic.

Fields F_{p^s} are presented as F_p[x]/(m(x)) with m monic irreducible.  When
no modulus is supplied the canonical one is used: the lexicographically
smallest monic irreducible of degree s, coefficients compared from the
constant term up.  Elements are coefficient vectors (low degree first); the
"coded" form of an element is the integer sum c_i * p^i, which gives a
deterministic total order on every field.

All solvers in this module verify their answer before returning it.
"""

import math
from functools import lru_cache

import sympy
from sympy.ntheory.modular import crt as _sympy_crt

from .errors import (FieldBoundExceeded, NoEmbedding, NotPrime,
                     ReducibleModulus, ValidationError)

MAX_FIELD_BITS = 32

# fields up to this size get exp/log tables (p=2 only)
TABLE_LIMIT = 1 << 20

_FIELD_CACHE = {}
_EMBED_ROOT_CACHE = {}
_RESTRICT_CACHE = {}


@lru_cache(maxsize=None)
def _factorint(n):
    return tuple(sorted(sympy.factorint(n).items()))


# ---------------------------------------------------------------------------
# integer-coefficient polynomial helpers (coefficients mod p, low degree
# first), used only for modulus bookkeeping
# ---------------------------------------------------------------------------

def _itrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _imul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _itrim(out)


def _imod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        if c:
            off = len(a) - 1 - dm
            for i in range(dm + 1):
                a[off + i] = (a[off + i] - c * m[i]) % p
        a.pop()
    return _itrim(a)


def _ipowmod(a, e, m, p):
    result = [1]
    base = _imod(a, m, p)
    while e:
        if e & 1:
            result = _imod(_imul(result, base, p), m, p)
        e >>= 1
        base = _imod(_imul(base, base, p), m, p)
    return result


def _igcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # make b monic for the reduction
        inv = pow(b[-1], -1, p)
        bm = [(c * inv) % p for c in b]
        a, b = bm, _imod(a, bm, p)
    return a


def _is_irreducible(m, p):
    """m monic of degree s >= 1 over F_p."""
    s = len(m) - 1
    if s == 0:
        return False
    x = [0, 1]
    # x^(p^s) == x mod m
    t = x
    for _ in range(s):
        t = _ipowmod(t, p, m, p)
    if _itrim(list(t)) != _itrim(list(_imod(x, m, p))):
        return False
    # gcd(m, x^(p^d) - x) == 1 for proper divisors d of s
    for d in range(1, s):
        if s % d:
            continue
        t = x
        for _ in range(d):
            t = _ipowmod(t, p, m, p)
        diff = list(t) + [0] * max(0, 2 - len(t))
        diff[1] = (diff[1] - 1) % p
        diff = _itrim(diff)
        if not diff:
            return False
        g = _igcd(m, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


def _canonical_modulus(p, s):
    """Lexicographically smallest monic irreducible of degree s over F_p,
    coefficients compared from the constant term up."""
    if s == 1:
        return (0, 1)
    # enumerate low-order coefficient vectors in lex order
    for code in range(p ** s):
        coeffs = []
        c = code
        for _ in range(s):
            coeffs.append(c % p)
            c //= p
        m = coeffs + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# presentations and elements
# ---------------------------------------------------------------------------

class FieldPresentation:
    """A concrete presentation of F_{p^s}.

    Presentations with equal (p, s, modulus) compare and hash equal, so
    independently constructed copies are interchangeable.
    """

    def __init__(self, p, s, modulus=None, max_bits=MAX_FIELD_BITS):
        if not sympy.isprime(p):
            raise NotPrime("p = %r is not prime" % (p,))
        if s < 1:
            raise ValidationError("degree must be >= 1")
        if p ** s >= (1 << max_bits):
            raise FieldBoundExceeded(
                "field size %d^%d exceeds 2^%d" % (p, s, max_bits),
                p=p, s=s, max_bits=max_bits)
        if modulus is None:
            modulus = _canonical_modulus(p, s)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != s + 1 or modulus[-1] != 1:
                raise ValidationError("modulus must be monic of degree s")
            if not _is_irreducible(list(modulus), p):
                raise ReducibleModulus(
                    "modulus %r is reducible over F_%d" % (modulus, p))
        self.p = p
        self.s = s
        self.modulus = modulus
        self.order = p ** s
        self.key = (p, s, modulus)
        # x^(s+j) mod modulus for j = 0 .. s-2, used in product reduction
        red = []
        cur = [(-c) % p for c in modulus[:s]]  # x^s
        red.append(tuple(cur))
        for _ in range(s - 2):
            cur = [0] + cur
            c = cur.pop()
            if c:
                cur = [(cur[i] + c * red[0][i]) % p for i in range(s)]
            red.append(tuple(cur))
        self._xk = red
        self._gen = None
        self._tables = None
        self._zero = FieldElement(self, (0,) * s)
        self._one = FieldElement(self, (1,) + (0,) * (s - 1))

    def __eq__(self, other):
        return isinstance(other, FieldPresentation) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.s)

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def element(self, coeffs):
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) > self.s:
            if any(coeffs[self.s:]):
                raise ValidationError("coefficient vector too long")
            coeffs = coeffs[:self.s]
        coeffs = coeffs + (0,) * (self.s - len(coeffs))
        return FieldElement(self, coeffs)

    def from_int(self, n):
        return self.element((n % self.p,))

    def from_coded(self, code):
        coeffs = []
        for _ in range(self.s):
            coeffs.append(code % self.p)
            code //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        for code in range(self.order):
            yield self.from_coded(code)

    # -- multiplicative structure --

    def generator(self):
        """Smallest (in coded order) generator of the multiplicative group."""
        if self._gen is None:
            n = self.order - 1
            if n == 1:
                self._gen = self.one()
            else:
                primes = [l for l, _ in _factorint(n)]
                for code in range(2, self.order):
                    e = self.from_coded(code)
                    if all(e ** (n // l) != self._one for l in primes):
                        self._gen = e
                        break
        return self._gen

    def gf2_tables(self):
        """(exp, log) numpy tables for p = 2 fields under TABLE_LIMIT, built
        on the cached generator; None otherwise."""
        if self.p != 2 or self.order > TABLE_LIMIT or self.order == 2:
            return None
        if self._tables is None:
            from . import _kernel
            modulus_mask = 0
            for i, c in enumerate(self.modulus):
                if c:
                    modulus_mask |= 1 << i
            self._tables = _kernel.build_tables_gf2(
                self.s, modulus_mask, self.generator().coded())
        return self._tables

    def dlog(self, e):
        """Discrete log of e base self.generator()."""
        if e.is_zero():
            raise ValidationError("dlog of zero")
        n = self.order - 1
        if n == 1:
            return 0
        tables = self.gf2_tables()
        if tables is not None:
            return int(tables[1][e.coded()])
        return _pohlig_hellman(self.generator(), e, n)


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def __repr__(self):
        return "%r%r" % (list(self.coeffs), self.field)

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field.key == other.field.key
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.key, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def coded(self):
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.field.p + c
        return code

    def __add__(self, other):
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        F = self.field
        p, s = F.p, F.s
        a, b = self.coeffs, other.coeffs
        prod = [0] * (2 * s - 1) if s > 1 else [0]
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        res = list(prod[:s])
        for k in range(s, 2 * s - 1):
            ck = prod[k]
            if ck:
                red = F._xk[k - s]
                for i in range(s):
                    res[i] = (res[i] + ck * red[i]) % p
        return FieldElement(F, tuple(res))

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e):
        F = self.field
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return F.one()
        if self.is_zero():
            return F.zero()
        e %= (F.order - 1)
        if e == 0:
            return F.one()
        result = F.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            base = base * base
        return result


def _pohlig_hellman(g, e, n):
    residues, moduli = [], []
    for l, k in _factorint(n):
        pk = l ** k
        g_l = g ** (n // pk)
        e_l = e ** (n // pk)
        gamma = g_l ** (l ** (k - 1))  # order l
        x = 0
        for i in range(k):
            h = (e_l * (g_l ** (-x))) ** (l ** (k - 1 - i))
            x += _bsgs(gamma, h, l) * l ** i
        residues.append(x)
        moduli.append(pk)
    sol = _sympy_crt(moduli, residues)
    assert sol is not None
    return int(sol[0])


def _bsgs(base, target, order):
    """Solve base^x = target with base of prime order `order`."""
    m = math.isqrt(order - 1) + 1
    table = {}
    cur = base.field.one()
    for j in range(m):
        table.setdefault(cur.coded(), j)
        cur = cur * base
    giant = base ** (-m)
    cur = target
    for i in range(m):
        j = table.get(cur.coded())
        if j is not None:
            return (i * m + j) % order
        cur = cur * giant
    raise ValidationError("dlog: target not in subgroup")


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def make_field(p, s, modulus=None, max_bits=MAX_FIELD_BITS):
    key = (p, s, tuple(modulus) if modulus is not None else None)
    F = _FIELD_CACHE.get(key)
    if F is None or (1 << max_bits) <= F.order:
        F = FieldPresentation(p, s, modulus, max_bits=max_bits)
        _FIELD_CACHE[key] = F
        _FIELD_CACHE[(p, s, F.modulus)] = F
    return F


def extension_of(F, k, max_bits=MAX_FIELD_BITS):
    """Canonical presentation of the degree-k extension of F."""
    return make_field(F.p, F.s * k, max_bits=max_bits)


def embed(e, dst):
    """Image of e under the cached embedding of its field into dst.

    The embedding sends x (mod src modulus) to the root of the source modulus
    in dst with smallest coded value; this makes repeated embeddings between
    the same pair of presentations consistent.
    """
    src = e.field
    if src == dst:
        return e
    if src.p != dst.p or dst.s % src.s:
        raise NoEmbedding("no embedding GF(%d^%d) -> GF(%d^%d)"
                          % (src.p, src.s, dst.p, dst.s))
    root = _embedding_root(src, dst)
    acc = dst.zero()
    for c in reversed(e.coeffs):
        acc = acc * root + dst.from_int(c)
    return acc


def _embedding_root(src, dst):
    key = (src.key, dst.key)
    root = _EMBED_ROOT_CACHE.get(key)
    if root is None:
        if src.s == 1:
            # prime field: the modulus is x - c
            root = dst.from_int(-src.modulus[0])
        else:
            g = dst.generator()
            step = (dst.order - 1) // (src.order - 1)
            delta = g ** step
            best = None
            cand = dst.one()
            for _ in range(src.order - 1):
                val = dst.zero()
                for c in reversed(src.modulus):
                    val = val * cand + dst.from_int(c)
                if val.is_zero():
                    code = cand.coded()
                    if best is None or code < best[0]:
                        best = (code, cand)
                cand = cand * delta
            if best is None:
                raise NoEmbedding("modulus has no root in target field")
            root = best[1]
        _EMBED_ROOT_CACHE[key] = root
    return root


def restrict(e, target):
    """Inverse of embed: the element of `target` mapping to e, or raise."""
    dst = e.field
    if dst == target:
        return e
    key = (target.key, dst.key)
    lookup = _RESTRICT_CACHE.get(key)
    if lookup is None:
        lookup = {embed(t, dst).coded(): t for t in target.elements()}
        _RESTRICT_CACHE[key] = lookup
    r = lookup.get(e.coded())
    if r is None:
        raise NoEmbedding("element does not lie in the subfield")
    return r


def frobenius_power(e, j):
    """e^(p^j); j may be any integer (the Frobenius has order s)."""
    F = e.field
    j %= F.s
    if j == 0:
        return e
    return e ** (F.p ** j)


def count_power_roots(c, d):
    """Number of w in the field of c with w^d = c."""
    F = c.field
    if c.is_zero():
        return 1
    n = F.order - 1
    g = math.gcd(d, n)
    return g if (c ** (n // g)) == F.one() else 0


def element_order(e):
    if e.is_zero():
        raise ValidationError("order of zero element")
    n = e.field.order - 1
    for l, _ in _factorint(n):
        while n % l == 0 and (e ** (n // l)) == e.field.one():
            n //= l
    return n


def kummer_solve_in(F, xi, q_rel):
    """Solution alpha in F of alpha^(q_rel - 1) = xi^(-1), or None."""
    target = embed(xi, F).inverse()
    n = F.order - 1
    d = math.gcd(q_rel - 1, n)
    z = F.dlog(target)
    if z % d:
        return None
    if n // d > 1:
        a = (z // d) * pow((q_rel - 1) // d, -1, n // d) % (n // d)
    else:
        a = 0
    alpha = F.generator() ** a
    assert alpha ** (q_rel - 1) == target
    return alpha


def solve_tame(xi, q_rel, max_bits=MAX_FIELD_BITS):
    """Smallest-degree extension solution alpha of alpha^(q_rel - 1) =
    xi^(-1), together with the extension degree used (over xi's field)."""
    if xi.is_zero():
        raise ValidationError("tame parameter must be nonzero")
    src = xi.field
    e = 1
    while src.p ** (src.s * e) < (1 << max_bits):
        F = extension_of(src, e, max_bits=max_bits)
        alpha = kummer_solve_in(F, xi, q_rel)
        if alpha is not None:
            return alpha, e
        e += 1
    raise FieldBoundExceeded(
        "no solution to alpha^(q-1) = xi^(-1) within 2^%d" % max_bits,
        q_rel=q_rel, max_bits=max_bits)


def solve_wild(xi, q_rel, max_bits=MAX_FIELD_BITS):
    """Solution alpha of alpha^q_rel - alpha = -xi (Artin-Schreier-type
    equation solved as an F_p-linear system), with auto-extension."""
    src = xi.field
    p = src.p
    s_q = round(math.log(q_rel, p))
    if p ** s_q != q_rel:
        raise ValidationError("q_rel must be a power of p")
    deg = math.lcm(src.s, max(s_q, 1))
    for _ in range(3):
        if p ** deg >= (1 << max_bits):
            break
        F = make_field(p, deg, max_bits=max_bits)
        alpha = artin_schreier_solve_in(F, xi, q_rel)
        if alpha is not None:
            return alpha, deg // src.s
        deg *= p
    raise FieldBoundExceeded(
        "no Artin-Schreier solution within 2^%d" % max_bits,
        q_rel=q_rel, max_bits=max_bits)


def artin_schreier_solve_in(F, xi, q_rel):
    """Solution alpha in F of alpha^q_rel - alpha = -xi, or None."""
    x = embed(xi, F)
    # columns of the matrix of T(a) = a^q_rel - a on the power basis
    cols = []
    for i in range(F.s):
        b = F.element((0,) * i + (1,))
        cols.append((b ** q_rel - b).coeffs)
    sol = _solve_mod_p(cols, (-x).coeffs, F.p, F.s)
    if sol is None:
        return None
    alpha = F.element(sol)
    assert alpha ** q_rel - alpha == -x
    return alpha


def _solve_mod_p(cols, rhs, p, n):
    """Solve M a = rhs over F_p with M given by columns; None if
    inconsistent.  Free variables are set to zero."""
    aug = [[cols[j][i] for j in range(n)] + [rhs[i]] for i in range(n)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if aug[i][n]:
            return None
    sol = [0] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return sol


def solve_unit_power(zeta, n, q_rel, work, v_max=16):
    """Return B = beta^n where beta solves beta^(q_rel - 1) = zeta^(-1),
    choosing beta so that B lands in the field `work` -- without ever
    constructing the (possibly huge) field containing beta itself.

    The computation runs in exponent arithmetic relative to a virtual degree-v
    extension of `work`: writing g for the cached generator of `work` and
    positing a generator G of the extension with G^((Q^v-1)/(Q-1)) = g, every
    candidate beta is G^b for an explicit integer b, and B = beta^n lies in
    `work` exactly when (Q^v-1)/(Q-1) divides n*b.  The result is independent
    of the choice of G up to the inherent n-th-power ambiguity of beta.

    Returns (B, v) or None if no solution exists for v <= v_max.
    """
    z = work.dlog(embed(zeta, work).inverse())
    Q1 = work.order - 1
    g = work.generator()
    for v in range(1, v_max + 1):
        MV = work.order ** v - 1
        R = MV // Q1
        zV = z * R
        d = math.gcd(q_rel - 1, MV)
        if zV % d:
            continue
        step = MV // d
        b0 = (zV // d) * pow((q_rel - 1) // d, -1, step) % step
        # adjust b0 by multiples of step so that R | n*b
        a = (n * step) % R
        need = (-n * b0) % R
        dd = math.gcd(a, R)
        if need % dd:
            continue
        t = (need // dd) * pow((a // dd) % (R // dd), -1, R // dd) % (R // dd) \
            if R // dd > 1 else 0
        b = b0 + step * t
        assert (n * b) % R == 0
        B = g ** ((n * b // R) % Q1)
        assert B ** (q_rel - 1) == embed(zeta, work).inverse() ** n
        return B, v
    return None
