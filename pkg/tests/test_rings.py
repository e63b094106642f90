from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from comodules import GF, QQ, ZZ, Zmod, ring_from_string
from comodules.errors import UnsupportedRing


def test_constructors_and_str():
    assert str(QQ) == "Q"
    assert str(ZZ) == "Z"
    assert str(GF(7)) == "GF(7)"
    assert str(Zmod(6)) == "Z/6"


def test_ring_from_string():
    assert ring_from_string("Q") == QQ
    assert ring_from_string("Z") == ZZ
    assert ring_from_string("GF(5)") == GF(5)
    assert ring_from_string("F_5") == GF(5)
    assert ring_from_string("Z/8") == Zmod(8)
    with pytest.raises(ValueError):
        ring_from_string("R")


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        Zmod(1)


def test_classification_flags():
    assert QQ.is_field and QQ.is_qf and not QQ.is_finite
    assert GF(3).is_field and GF(3).is_qf and GF(3).is_finite
    assert not ZZ.is_field and not ZZ.is_qf
    zn = Zmod(4)
    assert not zn.is_field and zn.is_qf and zn.is_finite and zn.is_modular


def test_normalize():
    assert Zmod(4).normalize(-1) == 3
    assert Zmod(4).normalize(6) == 2
    assert QQ.normalize(2) == Fraction(2)
    assert ZZ.normalize(True) == 1


def test_units_and_inverses():
    r = Zmod(12)
    assert r.is_unit(5) and r.inv(5) == 5
    assert not r.is_unit(4)
    with pytest.raises(ZeroDivisionError):
        r.inv(4)
    assert GF(7).inv(3) == 5
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_exact_div():
    r = Zmod(12)
    # 4 = q * 8 mod 12 has solution q = 2 (gcd(8, 12) = 4 divides 4)
    q = r.exact_div(4, 8)
    assert (q * 8) % 12 == 4
    assert r.exact_div(5, 8) is None
    assert ZZ.exact_div(6, 3) == 2
    assert ZZ.exact_div(5, 3) is None


def test_element_strings():
    assert QQ.element_from_string("2/3") == Fraction(2, 3)
    assert QQ.element_to_string(Fraction(-1, 2)) == "-1/2"
    assert Zmod(7).element_from_string("-2") == 5
    assert ZZ.element_to_string(-3) == "-3"


@given(a=st.integers(-40, 40), b=st.integers(-40, 40), c=st.integers(-40, 40))
def test_ring_axioms_mod12(a, b, c):
    r = Zmod(12)
    a, b, c = r.normalize(a), r.normalize(b), r.normalize(c)
    assert r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
    assert r.add(a, r.neg(a)) == r.zero
    assert r.mul(r.one, a) == a


def test_unsupported_ring_is_importable():
    # the exception type is part of the public API surface
    assert issubclass(UnsupportedRing, Exception)
