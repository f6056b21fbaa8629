from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given

from helpers import small_codes
from nmdsdesigns import linalg
from nmdsdesigns.codes import (CodeError, LinearCode, bch, bch_parity_rows, dual, extend,
                               from_generator_poly, lift, satisfies_parity_rows, sphere_packing_check,
                               subfield_subcode, trace_code, trace_dual_code, trace_dual_word)
from nmdsdesigns.field import build_field, extension
from nmdsdesigns.poly import Poly, nth_root_context, xn_minus_1
from nmdsdesigns.search import min_distance

F2, F3, F9, F16, F27 = (build_field(2, 1), build_field(3, 1), build_field(3, 2),
                        build_field(2, 4), build_field(3, 3))


def test_parity_sum_code():
    C = from_generator_poly(Poly(F3, [2, 1]), 4)          # x - 1
    assert (C.n, C.k) == (4, 3)
    assert C.contains([1, 1, 1, 0]) and not C.contains([1, 0, 0, 0])


def test_zero_code_from_xn_minus_1():
    C = from_generator_poly(xn_minus_1(F3, 5), 5)
    assert C.k == 0 and C.parity.shape == (5, 5)
    E = extend(C)
    assert (E.n, E.k) == (6, 0)


def test_non_divisor_rejected():
    with pytest.raises(CodeError):
        from_generator_poly(Poly(F3, [1, 1, 1]), 5)


@pytest.mark.parametrize("F,n,k", [(F9, 10, 6), (F2, 17, 9), (F3, 28, 16), (F27, 28, 24), (F16, 17, 13),
                                   (build_field(2, 3), 9, 5)])
def test_bch_dimensions(F, n, k):
    C = bch(F, n, 3)
    assert C.k == k
    assert C.gen_poly.degree == n - k
    assert (xn_minus_1(F, n) % C.gen_poly).is_zero


def test_golay_generator():
    G = bch(F3, 11, 2)
    assert G.gen_poly.coeffs == (2, 0, 1, 2, 1, 1)
    assert G.label == "bch:q=3^1,n=11,delta=2,h=1"


def test_bch_rejects_bad_parameters():
    with pytest.raises(CodeError):
        bch(F3, 11, 1)
    with pytest.raises(Exception):
        bch(F3, 12, 3)


def test_cyclic_rows_shift_gen_poly():
    C = bch(F9, 10, 3)
    M = C.cyclic_generator_matrix()
    assert LinearCode(F9, M) == C
    # right rotation of every generator row stays in the code
    for row in C.gen:
        assert C.contains(np.roll(row, 1))


@given(small_codes())
def test_dual_is_an_involution(C):
    D = dual(C)
    assert D.k == C.n - C.k
    assert dual(D) == C
    if D.k:
        assert not np.any(linalg.matmul(C.field, C.gen, D.gen.T))


@given(small_codes(max_n=7, limit=1 << 10))
def test_lift_keeps_codewords(C):
    ext = extension(C.field, 2)
    L = lift(C, ext)
    assert L.k == C.k
    d, dl = min_distance(C), min_distance(L)
    assert dl <= d
    assert lift(C, C.field) == C


def test_extend_golay():
    E = extend(bch(F3, 11, 2))
    assert (E.n, E.k) == (12, 6)
    assert min_distance(E) == 6
    assert all(F3.sum(int(x) for x in row) == 0 for row in E.gen)


@pytest.mark.parametrize("F,sub,n,k", [(F16, F2, 17, 9), (F9, F3, 10, 2), (F27, F3, 28, 16)])
def test_subfield_subcodes(F, sub, n, k):
    C = bch(F, n, 3)
    S = subfield_subcode(C, sub)
    assert (S.n, S.k) == (n, k)
    h = F.abs_degree // sub.abs_degree
    assert C.k >= S.k >= n - h * (n - C.k)
    # every subcode word lies in the parent code
    emb = np.array([x for x in range(sub.order)])
    for row in S.gen:
        assert C.contains(emb[row])


def test_subfield_of_same_field_is_identity():
    C = bch(F9, 10, 3)
    assert subfield_subcode(C, F9) == C
    with pytest.raises(CodeError):
        subfield_subcode(C, F2)


@pytest.mark.parametrize("F,n", [(F9, 10), (F27, 28), (F16, 17)])
def test_delsarte(F, n):
    C = bch(F, n, 3)
    sub = build_field(F.p, 1)
    assert subfield_subcode(C, sub) == dual(trace_code(dual(C), sub))


@pytest.mark.parametrize("F,n", [(F9, 10), (F27, 28), (F16, 17)])
def test_subcode_equals_small_field_bch_with_shared_root(F, n):
    sub = build_field(F.p, 1)
    shared = nth_root_context(F, n)
    assert subfield_subcode(bch(F, n, 3), sub) == bch(sub, n, 3, root=shared)


def test_trace_of_lifted_code_is_itself():
    G = bch(F3, 11, 2)
    assert trace_code(lift(G, F9), F3) == G


@pytest.mark.parametrize("F", [F9, F16, F27, build_field(2, 3)])
def test_parity_rows_and_trace_dual(F):
    q = F.order
    C = bch(F, q + 1, 3)
    ext, H = bch_parity_rows(F)
    assert H.shape == (2, q + 1)
    assert H[:, 0].tolist() == [1, 1]
    assert satisfies_parity_rows(C, ext, H)
    T = trace_dual_code(F)
    assert T.k == 4
    assert T == dual(C)


def test_trace_dual_word_is_dual_codeword():
    C = bch(F9, 10, 3)
    D = dual(C)
    for a, b in [(1, 0), (0, 1), (5, 7), (80, 3)]:
        assert D.contains(trace_dual_word(F9, a, b))


def test_sphere_packing():
    r = sphere_packing_check(17, 9, 5, 2)
    assert r["holds"] and r["k_max"] == 9 and r["volume"] == 154
    assert 2 ** 9 * 154 == 78848
    assert sphere_packing_check(7, 4, 3, 2)["perfect"]
    r = sphere_packing_check(10, 3, 1, 3)
    assert r["holds"] and r["k_max"] == 10
    with pytest.raises(CodeError):
        sphere_packing_check(5, 2, 0, 2)


def test_code_validation():
    with pytest.raises(CodeError):
        LinearCode(F3, [[0, 1, 3]])
    with pytest.raises(CodeError):
        LinearCode(F3, [[1, 0, 0]], parity=[[1, 0, 0], [0, 1, 0]])
    C = LinearCode(F3, [[1, 1, 0], [2, 2, 0]])
    assert C.k == 1
