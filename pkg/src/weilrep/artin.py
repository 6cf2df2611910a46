"""Splitting the Weil representation into Artin part and unramified twist.

From the local polynomial of the base model one reads off the eigenvalue
class (f, c): all Frobenius eigenvalues become equal after raising to the
f-th power, with common value c.  The unramified character chi sends a
q-Frobenius element to gamma, the principal f-th root of c; the Artin
representation rho0 = rho (x) chi^(-1) then has finite image, and its traces
are computed exactly in Q(gamma) from twisted point counts.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import curve, zeta
from .automorphisms import compose, pure_frobenius
from .cyclotomic import Cyc, sqrt_prime_power
from .errors import (ClassMismatch, MathInconsistencyError,
                     NonIntegralDimension, NonIntegralMultiplicity,
                     UnclassifiableRoot, ValidationError)
from .twist import twist_model


def artin_order(P, tolerance=1e-9):
    """The order f of the eigenvalue class of P: the minimal f >= 1 such
    that all Frobenius eigenvalues have the same f-th power."""
    return zeta.single_class(P, tolerance).order


def gamma_cyc(q, f, c, k=1):
    """gamma^k as an exact cyclotomic number, where gamma is the principal
    f-th root of c: |c|^(1/f) = sqrt(q), rotated by pi/f when c < 0."""
    if c * c != q ** f:
        raise UnclassifiableRoot(
            "class constant %d does not have |c| = q^(f/2)" % c, q=q, f=f)
    k = int(k)
    if k < 0:
        raise ValueError("negative gamma power; reduce via gamma^f = c")
    out = Cyc.rational(1, q ** (k // 2))
    if k % 2:
        out = out * sqrt_prime_power(q)
    if c < 0:
        out = out * Cyc.root_of_unity(2 * f, k % (2 * f))
    return out


@dataclass
class ClassTrace:
    rep_word: tuple
    size: int
    element_indices: tuple
    j_prime: int
    d: int
    count: int
    trace_int: int  # trace of rho at phi0^j' * (inertia part)
    rho0_power: int  # k with rho0-trace = rho0_rational * gamma^k
    rho0_rational: Fraction
    rho0_cyc: Cyc


@dataclass
class TraceTable:
    f: int
    c: int
    q: int
    genus: int
    base_polynomial: tuple
    classes: list

    def gamma_complex(self):
        import cmath
        mag = abs(self.c) ** (1.0 / self.f)
        return mag * cmath.exp(1j * cmath.pi / self.f) if self.c < 0 \
            else complex(mag)

    def class_of_element(self, idx):
        for ct in self.classes:
            if idx in ct.element_indices:
                return ct
        raise ValidationError("element index %d not classified" % idx)


def trace_table(model, G, jobs=1, max_bits=32, tolerance=1e-9):
    """Exact rho0-traces on every conjugacy class of G.

    Each class representative w = phi0^j * u is rewritten with j' in 1..f
    congruent to j mod f (the same element of the finite quotient), twisted,
    and counted; the trace of rho is d(q^j' + 1) - N and the rho0-trace is
    that divided by gamma^j'."""
    base = model.base
    s0 = base.s
    q = base.order
    P = zeta.local_polynomial(model, jobs=jobs, max_bits=max_bits,
                              tolerance=tolerance)
    cls = zeta.single_class(P, tolerance)
    f, c = cls.order, cls.constant
    if G.frob_period != f * s0:
        raise ValidationError(
            "group Frobenius period %d != f*[k:F_p] = %d"
            % (G.frob_period, f * s0))
    table = TraceTable(f, c, q, P.genus, P.coeffs, [])
    ncomp = len(model.orbits)
    for idxs in G.conjugacy_classes():
        rep = G.elements[idxs[0]]
        if rep.frob % s0:
            raise ValidationError("class representative has bad Frobenius")
        j_q = rep.frob // s0
        j_prime = ((j_q - 1) % f) + 1
        u = compose(pure_frobenius(G.ambient, ncomp, -rep.frob), rep)
        tw = twist_model(model, u, G, j_prime, max_bits=max_bits)
        N = curve.count_points(tw.model, 1, jobs=jobs, max_bits=max_bits)
        d = sum(1 for orb in tw.model.orbits if orb.length == 1)
        t = d * (q ** j_prime + 1) - N
        k = f - j_prime
        rat = Fraction(t, c)
        cyc = gamma_cyc(q, f, c, k) * rat
        table.classes.append(ClassTrace(
            rep.word, len(idxs), tuple(idxs), j_prime, d, N, t, k, rat, cyc))
    # sanity: the identity class must give trace 2g
    ident = table.class_of_element(0)
    if ident.rho0_rational * 1 != 2 * P.genus or ident.rho0_power != 0:
        raise MathInconsistencyError(
            "identity trace %s != 2g = %d" % (ident.rho0_rational,
                                              2 * P.genus))
    return table


@dataclass
class Decomposition:
    multiplicities: list  # ints, parallel to the character table
    dims: list
    labels: list
    residual: float
    conjugation_ambiguous: list  # labels only defined up to conjugation


def decompose(table, char_table, G):
    """Multiplicities of the irreducible characters in rho0.

    char_table is the parsed external table: keys "order", "exponent",
    "classes" (rep word + size) and "characters" (dim, label, values as
    rational vectors over powers of zeta_N, N the exponent).  Inner products
    are computed exactly in a common cyclotomic field."""
    if char_table["order"] != G.order():
        raise ClassMismatch("character table order %d != group order %d"
                            % (char_table["order"], G.order()))
    L = char_table["exponent"]
    gclasses = G.conjugacy_classes()
    used = set()
    matched = []  # per char-table class: (size, ClassTrace)
    for entry in char_table["classes"]:
        el = G.resolve_word(entry["rep"])
        idx = G.lookup(el)
        ct = table.class_of_element(idx)
        if entry["size"] != ct.size:
            raise ClassMismatch(
                "class %r has size %d, table says %d"
                % (entry["rep"], ct.size, entry["size"]))
        key = ct.element_indices
        if key in used:
            raise ClassMismatch("two table classes map to one group class")
        used.add(key)
        matched.append(ct)
    if len(matched) != len(gclasses):
        raise ClassMismatch("character table has %d classes, group has %d"
                            % (len(matched), len(gclasses)))
    order = G.order()
    mults, dims, labels, ambiguous = [], [], [], []
    chars = char_table["characters"]
    char_values = []
    for ch in chars:
        char_values.append([Cyc(L, [Fraction(v) for v in vec])
                            for vec in ch["values"]])
    for ch, vals in zip(chars, char_values):
        acc = Cyc.zero(1)
        for ct, val in zip(matched, vals):
            acc = acc + (ct.rho0_cyc * val.conj()) * ct.size
        m = (acc / order).as_rational()
        if m is None or m.denominator != 1 or m < 0:
            raise NonIntegralMultiplicity(
                "multiplicity of %r is %r" % (ch.get("label"), m))
        mults.append(int(m))
        dims.append(ch["dim"])
        labels.append(ch.get("label", ""))
        if int(m) and not all(v.is_real() for v in vals):
            ambiguous.append(ch.get("label", ""))
    # exact re-check: the multiplicities reproduce every trace
    for j, ct in enumerate(matched):
        acc = Cyc.zero(1)
        for m, vals in zip(mults, char_values):
            if m:
                acc = acc + vals[j] * m
        if not (acc - ct.rho0_cyc).is_zero():
            raise MathInconsistencyError(
                "character expansion does not reproduce the trace on class "
                "%r" % (ct.rep_word,))
    if sum(m * d for m, d in zip(mults, dims)) != 2 * table.genus:
        raise NonIntegralMultiplicity(
            "dimensions sum to %d != 2g"
            % sum(m * d for m, d in zip(mults, dims)))
    return Decomposition(mults, dims, labels, 0.0, ambiguous)


def fixed_space_dim(table, G, generator_words):
    """dim of the subspace fixed by the subgroup generated by the given
    words (exact; must come out a nonnegative integer)."""
    gens = [G.lookup(G.resolve_word(w)) for w in generator_words]
    for gi in gens:
        if G.elements[gi].frob % G.frob_period:
            raise ValidationError(
                "fixed-space subgroups must avoid the coefficient Frobenius")
    subgroup = {0}
    frontier = [0]
    while frontier:
        cur = frontier.pop()
        for gi in gens:
            nxt = G.lookup(compose(G.elements[cur], G.elements[gi]))
            if nxt not in subgroup:
                subgroup.add(nxt)
                frontier.append(nxt)
    acc = Cyc.zero(1)
    for idx in subgroup:
        acc = acc + table.class_of_element(idx).rho0_cyc
    dim = (acc / len(subgroup)).as_rational()
    if dim is None or dim.denominator != 1 or dim < 0:
        raise NonIntegralDimension("fixed-space dimension %r" % (dim,))
    return int(dim)
