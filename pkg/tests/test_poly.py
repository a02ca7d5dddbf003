from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tgrs import GF, Poly
from tgrs.gf import DivisionByZero, FieldMismatch

F9 = GF(3, 2, [2, 1, 1])
FIELDS = [GF(7), GF(2, 4), F9, GF(5, 2)]


def polys(field, max_len=7):
    return st.lists(st.integers(0, field.q - 1), max_size=max_len).map(lambda c: Poly(field, c))


def test_zero_polynomial():
    z = Poly(F9, [0, 0, 0])
    assert z.is_zero
    assert z.to_list() == []
    with pytest.raises(ValueError):
        z.degree()
    assert z(5) == 0


def test_trailing_zeros_trimmed():
    p = Poly(F9, [1, 2, 0, 0])
    assert p.degree() == 1
    assert p == Poly(F9, [1, 2])


def test_f9_product_and_quotient():
    # (1 + 2x)(1 + (1+z)x + z x^2) = 1 + z x + 2 x^2 + 2z x^3
    d = Poly(F9, [1, 2])
    f = Poly(F9, [1, 4, 3])
    g = d * f
    assert g.to_list() == [1, 3, 2, 6]
    q, r = divmod(g, d)
    assert q == f and r.is_zero
    assert d(1) == 0


def test_f16_twisted_evaluation():
    f16 = GF(2, 4, [1, 1, 0, 0, 1])
    z = f16(2)
    # f(x) = 1 + z^2 x + z^2 x^2 at x = z + 1
    f = Poly(f16, [1, (z**2).value, (z**2).value])
    x = f16(3)
    assert f(x) == f16.one + z**2 * x + z**2 * x * x


def test_from_roots_and_roots():
    roots = [F9(0), F9(4), F9(7)]
    p = Poly.from_roots(F9, roots)
    assert p.degree() == 3
    assert p.coefficient(3) == 1
    assert sorted(r.value for r in p.roots()) == [0, 4, 7]


def test_monomial_and_coefficient():
    p = Poly.monomial(GF(7), 4, 3)
    assert p.to_list() == [0, 0, 0, 0, 3]
    assert p.coefficient(10) == 0


def test_scalar_multiplication():
    f7 = GF(7)
    p = Poly(f7, [1, 2, 3])
    assert (p * f7(3)).to_list() == [3, 6, 2]
    assert (f7(3) * p) == p * f7(3)
    assert (p * f7(0)).is_zero


def test_division_by_zero_polynomial():
    with pytest.raises((DivisionByZero, ZeroDivisionError)):
        divmod(Poly(F9, [1, 2]), Poly(F9, []))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Poly(GF(7), [1]) + Poly(GF(5), [1])


def test_pretty():
    assert Poly(GF(7), [1, 3, 2]).pretty() == "2*x^2 + 3*x + 1"
    assert Poly(GF(7), []).pretty() == "0"


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_ring_laws(field, data):
    a, b, c = (data.draw(polys(field)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert (-a) + a == Poly(field, [])


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_division_identity(field, data):
    a = data.draw(polys(field, 9))
    b = data.draw(polys(field, 5).filter(lambda p: not p.is_zero))
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero or r.degree() < b.degree()
    assert a // b == q and a % b == r


@pytest.mark.parametrize("field", FIELDS, ids=repr)
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_evaluation_is_a_ring_homomorphism(field, data):
    a, b = data.draw(polys(field)), data.draw(polys(field))
    x = field(data.draw(st.integers(0, field.q - 1)))
    assert (a + b)(x) == a(x) + b(x)
    assert (a * b)(x) == a(x) * b(x)


@pytest.mark.parametrize("field", FIELDS, ids=repr)
def test_eval_many_matches_scalar(field):
    rng = np.random.default_rng(0)
    p = Poly(field, rng.integers(0, field.q, 6))
    xs = np.arange(field.q)
    assert p.eval_many(xs).tolist() == [p(int(x)).value for x in xs]


@pytest.mark.parametrize("field,k", [(GF(2, 2), 3), (GF(5), 3), (GF(3, 2), 2)], ids=repr)
def test_evaluation_at_k_points_is_injective(field, k):
    # exhaustive: a polynomial of degree < k is fixed by k values
    points = np.arange(k)
    seen = {}
    for coeffs in itertools.product(range(field.q), repeat=k):
        values = tuple(Poly(field, coeffs).eval_many(points).tolist())
        assert values not in seen
        seen[values] = coeffs
    assert len(seen) == field.q**k
