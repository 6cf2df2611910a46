"""Local polynomials from point counts.

P(T) = prod (1 - alpha_i T) has degree 2g, integer coefficients, and
Frobenius eigenvalues alpha_i of absolute value sqrt(q).  The first g
coefficients come from the power sums t_m = d*(q^m + 1) - N_m via Newton's
identities; the rest from the functional equation a_{2g-i} = q^{g-i} a_i.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import curve
from .errors import (MultipleEigenvalueClasses, NonIntegralCoefficient,
                     UnclassifiableRoot, WeilViolation)


@dataclass(frozen=True)
class LocalPolynomial:
    coeffs: tuple  # integers, ascending, length 2g + 1
    q: int
    genus: int
    d: int  # number of geometric components

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def inverse_roots(self):
        """The alpha_i (numpy complex array).

        The polynomial is factored exactly over the integers first, so
        repeated factors never degrade the numeric accuracy; numpy then only
        sees squarefree factors.  (In numpy's descending-order convention an
        ascending coefficient list of h represents its reversal, whose roots
        are the inverse roots of h.)"""
        if self.genus == 0:
            return np.array([])
        import sympy
        T = sympy.Symbol("T")
        _, factors = sympy.factor_list(
            sympy.Poly(list(reversed(self.coeffs)), T))
        out = []
        for fac, mult in factors:
            asc = list(reversed([int(c) for c in fac.all_coeffs()]))
            if len(asc) < 2:
                continue
            rts = np.roots(asc)
            for _ in range(mult):
                out.extend(rts)
        return np.array(out)


def counts_to_traces(counts, q, d):
    """t_m = d*(q^m + 1) - N_m for m = 1, 2, ..."""
    return [d * (q ** (m + 1) + 1) - n for m, n in enumerate(counts)]


def traces_to_polynomial(traces, q, g, d=1):
    """Coefficients of P from the first g power sums of the alpha_i.

    Newton's identities give e_1..e_g; a_k = (-1)^k e_k; the functional
    equation fills in a_{g+1}..a_{2g}."""
    if g == 0:
        return LocalPolynomial((1,), q, 0, d)
    if len(traces) < g:
        raise ValueError("need at least g = %d traces" % g)
    e = [Fraction(1)]
    for k in range(1, g + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * traces[i - 1]
        e.append(acc / k)
    a = [0] * (2 * g + 1)
    a[0] = 1
    for k in range(1, g + 1):
        v = (-1) ** k * e[k]
        if v.denominator != 1:
            raise NonIntegralCoefficient(
                "Newton identity gives non-integral coefficient a_%d = %s"
                % (k, v), traces=list(traces))
        a[k] = int(v)
    for i in range(g):
        a[2 * g - i] = q ** (g - i) * a[i]
    return LocalPolynomial(tuple(a), q, g, d)


def power_sum_transform(P, m_max):
    """Power sums sum_i alpha_i^m for m = 1..m_max, exactly (integers)."""
    g2 = 2 * P.genus
    e = [(-1) ** k * P.coeffs[k] for k in range(g2 + 1)]
    p = []
    for m in range(1, m_max + 1):
        acc = 0
        for i in range(1, m):
            if i <= g2:
                acc += (-1) ** (i - 1) * e[i] * p[m - i - 1]
        if m <= g2:
            acc += (-1) ** (m - 1) * m * e[m]
        p.append(acc)
    return p


def predicted_counts(P, m_max):
    """N_m implied by P for m = 1..m_max."""
    sums = power_sum_transform(P, m_max)
    return [P.d * (P.q ** m + 1) - sums[m - 1] for m in range(1, m_max + 1)]


def verify_weil(P, tolerance=1e-9):
    """Report on the Weil invariants of P; raises nothing itself."""
    g, q = P.genus, P.q
    issues = []
    if len(P.coeffs) != 2 * g + 1:
        issues.append("degree != 2g")
    if P.coeffs[0] != 1:
        issues.append("constant term != 1")
    if g and P.coeffs[2 * g] != q ** g:
        issues.append("leading coefficient != q^g")
    for i in range(g + 1):
        if P.coeffs[2 * g - i] != q ** (g - i) * P.coeffs[i]:
            issues.append("functional equation fails at i = %d" % i)
            break
    max_err = 0.0
    if g:
        mags = np.abs(P.inverse_roots())
        max_err = float(np.max(np.abs(mags - math.sqrt(q))))
        if max_err > math.sqrt(q) * max(tolerance * 10, 1e-10):
            issues.append("root of absolute value %.6g != sqrt(q)"
                          % float(mags[np.argmax(np.abs(mags - math.sqrt(q)))]))
    return {"ok": not issues, "issues": issues,
            "max_root_magnitude_error": max_err}


def component_polynomial(comp, jobs=1, max_bits=32, tolerance=1e-9):
    """P(T) of a single component over its own field."""
    g = curve.genus(comp)
    q = comp.field.order
    counts = [curve.count_component(comp, m, jobs=jobs, max_bits=max_bits)
              for m in range(1, g + 1)]
    traces = counts_to_traces(counts, q, 1)
    P = traces_to_polynomial(traces, q, g, 1)
    rep = verify_weil(P, tolerance)
    if not rep["ok"]:
        raise WeilViolation("component %r: %s" % (comp.label, rep["issues"]),
                            coeffs=P.coeffs)
    return P


def local_polynomial(model, jobs=1, max_bits=32, tolerance=1e-9):
    """P(T) of a curve model over its base field: the product over orbits of
    P_rep(T^r), where P_rep is computed over the orbit representative's own
    field (the degree-r extension of the base)."""
    q = model.base.order
    coeffs = [1]
    g_total = 0
    d_total = 0
    for orb in model.orbits:
        P_rep = component_polynomial(orb.component, jobs=jobs,
                                     max_bits=max_bits, tolerance=tolerance)
        r = orb.length
        # substitute T -> T^r
        factor = [0] * (r * (len(P_rep.coeffs) - 1) + 1)
        for k, c in enumerate(P_rep.coeffs):
            factor[r * k] = c
        coeffs = _poly_mul_int(coeffs, factor)
        g_total += r * P_rep.genus
        d_total += r
    P = LocalPolynomial(tuple(coeffs), q, g_total, d_total)
    rep = verify_weil(P, tolerance)
    if not rep["ok"]:
        raise WeilViolation("assembled polynomial: %s" % rep["issues"],
                            coeffs=P.coeffs)
    return P


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class EigenvalueClass:
    order: int  # minimal N with all alpha_i^N equal
    constant: int  # the common value c = alpha_i^N
    size: int
    indices: tuple
    exact: bool  # confirmed against exact power sums


def eigenvalue_classes(P, tolerance=1e-9):
    """Partition the inverse roots of P into classes whose pairwise ratios
    are roots of unity, with for each class the minimal N such that alpha^N
    is constant on the class."""
    g = P.genus
    if g == 0:
        return []
    alphas = P.inverse_roots()
    n_max = max(4 * g * g, 8)
    scale = math.sqrt(P.q)

    def unity_order(z):
        # smallest M <= n_max with z^M ~ 1, else None
        for M in range(1, n_max + 1):
            if abs(z ** M - 1) < 1e-6:
                return M
        return None

    m = len(alphas)
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(m):
        for j in range(i + 1, m):
            if unity_order(alphas[i] / alphas[j]) is not None:
                parent[find(i)] = find(j)

    groups = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)

    classes = []
    for idx in sorted(groups.values(), key=min):
        cluster = [alphas[i] for i in idx]
        N = None
        for cand in range(1, n_max + 1):
            powers = [a ** cand for a in cluster]
            if max(abs(p - powers[0]) for p in powers) < 1e-6 * scale ** cand:
                N = cand
                break
        if N is None:
            raise UnclassifiableRoot(
                "no common power of order <= %d" % n_max,
                roots=[complex(a) for a in cluster])
        c_approx = sum(a ** N for a in cluster) / len(cluster)
        if abs(c_approx.imag) > 1e-6 * abs(c_approx) + 1e-9:
            raise UnclassifiableRoot(
                "class constant %r is not real" % c_approx)
        c = round(c_approx.real)
        exact = False
        if len(idx) == m:
            # single class: confirm via exact power sums of P
            sums = power_sum_transform(P, 2 * N)
            exact = (sums[N - 1] == m * c and sums[2 * N - 1] == m * c * c)
            if not exact:
                raise UnclassifiableRoot(
                    "exact power sums reject class constant %d" % c,
                    sums=(sums[N - 1], sums[2 * N - 1]))
        classes.append(EigenvalueClass(N, c, len(idx), tuple(idx), exact))
    return classes


def single_class(P, tolerance=1e-9):
    """The unique eigenvalue class of P, or raise."""
    classes = eigenvalue_classes(P, tolerance)
    if len(classes) != 1:
        raise MultipleEigenvalueClasses(
            "%d eigenvalue classes" % len(classes),
            orders=[c.order for c in classes])
    return classes[0]


def principal_gamma(cls_):
    """Declared complex embedding of gamma: |c|^(1/N), rotated by pi/N when
    c < 0."""
    N, c = cls_.order, cls_.constant
    mag = abs(c) ** (1.0 / N)
    if c < 0:
        return mag * cmath.exp(1j * math.pi / N)
    return complex(mag)
