from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from nmdsdesigns.acceptance import FACTOR_CASES
from nmdsdesigns.field import build_field, embedding, prime_power
from nmdsdesigns.poly import (Poly, PolyError, coset, cyclotomic_cosets, factor_xn_minus_1,
                              minimal_polynomial, nth_root_context, poly_product, xn_minus_1)

F3 = build_field(3, 1)
F9 = build_field(3, 2)


def polys(F, max_deg=6):
    return st.lists(st.integers(0, F.order - 1), max_size=max_deg + 1).map(lambda cs: Poly(F, cs))


@given(polys(F9), polys(F9))
def test_divmod_identity(a, b):
    if b.is_zero:
        with pytest.raises(ZeroDivisionError):
            divmod(a, b)
        return
    qt, r = divmod(a, b)
    assert qt * b + r == a
    assert r.is_zero or r.degree < b.degree


@given(polys(F3, 5), polys(F3, 5))
def test_gcd_lcm(a, b):
    if a.is_zero or b.is_zero:
        return
    g, l = a.gcd(b), a.lcm(b)
    assert (a % g).is_zero and (b % g).is_zero
    assert (l % a).is_zero and (l % b).is_zero
    assert g * l == (a * b).monic()


@pytest.mark.parametrize("n,q", [(10, 3), (17, 2), (28, 3), (65, 2), (11, 3)])
def test_cosets_partition(n, q):
    t = cyclotomic_cosets(n, q)
    allm = sorted(x for c in t.cosets.values() for x in c)
    assert allm == list(range(n))
    for leader, c in t.cosets.items():
        assert leader == min(c)
        assert {x * q % n for x in c} == set(c)


def test_coset_examples():
    assert coset(1, 10, 3) == (1, 3, 7, 9)
    assert coset(1, 17, 2) == (1, 2, 4, 8, 9, 13, 15, 16)
    assert coset(1, 11, 3) == (1, 3, 4, 5, 9)
    with pytest.raises(PolyError):
        cyclotomic_cosets(12, 3)


@pytest.mark.parametrize("n,q", [c for c in FACTOR_CASES if c[1] <= 27])
def test_factors_multiply_to_xn_minus_1(n, q):
    p, m = prime_power(q)
    F = build_field(p, m)
    fs = factor_xn_minus_1(F, n)
    assert poly_product(F, fs) == xn_minus_1(F, n)
    assert sum(f.degree for f in fs) == n
    assert all(f.lead == 1 for f in fs)


def test_minimal_polynomial_root():
    ext, beta = nth_root_context(F3, 11)
    assert ext.order_of(beta) == 11
    m = minimal_polynomial(ext, F3, beta, coset(1, 11, 3))
    assert m.coeffs == (2, 0, 1, 2, 1, 1)
    emb = embedding(F3, ext)
    for i in coset(1, 11, 3):
        assert m.eval(ext.pow(beta, i), ext=ext, embed_map=emb) == 0


def test_non_closed_coset_rejected():
    ext, beta = nth_root_context(F3, 11)
    with pytest.raises(PolyError):
        minimal_polynomial(ext, F3, beta, (1,))


def test_poly_basics():
    p = Poly(F9, [1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert Poly(F9).degree == -1
    assert Poly.x_power(F9, 3).coeffs == (0, 0, 0, 1)
    assert Poly.from_json(F9, p.to_json()) == p
    assert Poly(F3, [0, 0, 0, 1]).derivative() == Poly(F3, [])       # 3x^2 = 0 in char 3
    with pytest.raises(PolyError):
        Poly(F3, [5])
    with pytest.raises(PolyError):
        Poly(F3, [1]) + Poly(F9, [1])
