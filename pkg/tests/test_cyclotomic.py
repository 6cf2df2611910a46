import cmath
from fractions import Fraction

from weilrep.cyclotomic import Cyc, sqrt_prime, sqrt_prime_power


def test_root_of_unity_relations():
    z = Cyc.root_of_unity(5, 1)
    acc = Cyc.zero(5)
    for k in range(5):
        acc = acc + Cyc.root_of_unity(5, k)
    assert acc.is_zero()
    assert (z * z * z * z * z) == 1


def test_mixed_order_arithmetic():
    a = Cyc.root_of_unity(3, 1)
    b = Cyc.root_of_unity(4, 1)
    prod = a * b
    assert prod.L == 12
    assert prod == Cyc.root_of_unity(12, 7)


def test_rationality_detection():
    z = Cyc.root_of_unity(8, 1)
    assert (z * z * z * z).as_rational() == -1
    assert (z + z.conj()).as_rational() is None  # sqrt(2) is irrational
    assert Cyc.rational(6, Fraction(3, 2)).as_rational() == Fraction(3, 2)


def test_conjugation_and_reality():
    z = Cyc.root_of_unity(7, 2)
    assert (z + z.conj()).is_real()
    assert not z.is_real()
    assert abs((z.conj()).to_complex() - z.to_complex().conjugate()) < 1e-12


def test_sqrt_primes():
    for p in (2, 3, 5, 7, 11, 13):
        s = sqrt_prime(p)
        assert (s * s).as_rational() == p
        assert abs(s.to_complex() - cmath.sqrt(p)) < 1e-9


def test_sqrt_prime_powers():
    for q in (4, 8, 9, 27, 25):
        s = sqrt_prime_power(q)
        assert (s * s).as_rational() == q
        assert abs(s.to_complex().real - q ** 0.5) < 1e-9
        assert abs(s.to_complex().imag) < 1e-9


def test_equality_mod_cyclotomic_relation():
    # 1 + zeta3 + zeta3^2 = 0 makes different vectors equal
    a = Cyc(3, [1, 1, 0])
    b = Cyc(3, [0, 0, -1])
    assert a == b
