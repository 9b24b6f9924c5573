from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import poly_add, poly_mul
from projmet.errors import DivisionByZero, FieldTooLarge, NotPrime, ReducibleModulus
from projmet.field import FiniteField, field_new, gf, is_irreducible, prime_power

EXTRA_MODULI = {32: (1, 0, 1, 0, 0, 1), 49: (1, 0, 1), 64: (1, 1, 0, 0, 0, 0, 1)}
ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64]


def field(q):
    return gf(q, EXTRA_MODULI.get(q))


fields = st.sampled_from(ORDERS).map(field)


@st.composite
def field_and_elems(draw, k=3):
    f = draw(fields)
    return (f, *[draw(st.integers(0, f.q - 1)) for _ in range(k)])


@given(field_and_elems())
def test_ring_axioms(args):
    f, a, b, c = args
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    assert f.sub(f.add(a, b), b) == a


@given(field_and_elems(1))
def test_inverse_and_frobenius(args):
    f, a = args
    if a:
        assert f.mul(a, f.inv(a)) == 1
        assert f.div(a, a) == 1
    # Frobenius x -> x^p is additive, and x^q = x
    assert f.pow(a, f.q) == a
    b = (a * 7 + 3) % f.q
    assert f.pow(f.add(a, b), f.p) == f.add(f.pow(a, f.p), f.pow(b, f.p))


@pytest.mark.parametrize("q", [q for q in ORDERS if prime_power(q)[1] > 1])
def test_tables_match_polynomial_arithmetic(q):
    f = field(q)
    for a in range(q):
        for b in range(q):
            assert f.mul(a, b) == poly_mul(a, b, f.p, f.e, f.modulus)
            assert f.add(a, b) == poly_add(a, b, f.p, f.e)


def test_f4_known_products():
    f = gf(4)
    x, x1 = 2, 3
    assert f.mul(x, x1) == 1
    assert f.mul(x, x) == x1
    assert f.add(x, x1) == 1


def test_prime_field_inverse():
    assert gf(7).inv(3) == 5


def test_vectorized_matches_scalar():
    for q in (5, 9, 16):
        f = gf(q)
        a = np.arange(q)[:, None]
        b = np.arange(q)[None, :]
        add, mul = f.vadd(a, b), f.vmul(a, b)
        for i in range(q):
            for j in range(q):
                assert add[i, j] == f.add(i, j)
                assert mul[i, j] == f.mul(i, j)


def test_large_field_without_dense_tables():
    f = field_new(2, 10, (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1))
    a, b = 513, 77
    assert f.mul(a, b) == poly_mul(a, b, 2, 10, f.modulus)
    assert f.mul(a, f.inv(a)) == 1


def test_element_wrapper():
    f = gf(4)
    x = f(2)
    assert int(x * (x + 1)) == 1
    assert int(x / x) == 1
    assert int(gf(5)(7)) == 2
    with pytest.raises(ValueError):
        f(4)


def test_errors():
    with pytest.raises(NotPrime):
        field_new(6)
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, (1, 0, 1))
    with pytest.raises(FieldTooLarge):
        field_new(2, 40, (1,) * 41)
    with pytest.raises(DivisionByZero):
        gf(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        gf(4).div(1, 0)


def test_irreducibility():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)
    assert is_irreducible((1, 1, 0, 0, 1), 2)
    assert not is_irreducible((1, 0, 1, 0, 1), 2)  # (x^2+x+1)^2


def test_json_roundtrip_and_identity():
    f = gf(9)
    assert FiniteField.from_json(f.to_json()) == f
    assert gf(9) is gf(9)
    assert gf(4) != gf(2)
