from __future__ import annotations

import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nmdsdesigns.codes import bch, dual, extend
from nmdsdesigns.designs import (CHAR2_EVEN, CHAR3, Design, DesignError, assmus_mattson, char2_excluded_set,
                                 complementary_design, complete_quadruple, coverage_counts,
                                 det_identity_oracle, lambda_s, sqs_bruteforce, sqs_direct, steiner_check,
                                 support_design, unit_circle, verify_t_design)
from nmdsdesigns.field import build_field
from nmdsdesigns.weights import BudgetExceeded, weight_distribution

F3, F9, F16, F27 = build_field(3, 1), build_field(3, 2), build_field(2, 4), build_field(3, 3)
GOLAY = bch(F3, 11, 2)


def test_design_validation():
    D = Design(5, 2, [[1, 0], [3, 4]])
    assert D.blocks == ((0, 1), (3, 4)) and D.b == 2
    assert D.to_json() == {"v": 5, "k": 2, "blocks": [[0, 1], [3, 4]]}
    for bad in ([[0, 0]], [[0, 5]], [[0, 1], [1, 0]], [[0, 1, 2]]):
        with pytest.raises(DesignError):
            Design(5, 2, bad)


def test_support_design_golay():
    D = support_design(GOLAY, 5)
    assert (D.v, D.b) == (11, 66)
    assert support_design(GOLAY, 3).b == 0
    chk = verify_t_design(D, 4)
    assert chk.is_t_design and chk.lam == 1


@pytest.mark.parametrize("q,F,t,lam,comp_lam", [(9, F9, 3, 1, 5), (16, F16, 2, 6, 78), (27, F27, 3, 1, 506)])
def test_family_min_weight_designs(q, F, t, lam, comp_lam):
    C = bch(F, q + 1, 3)
    D = support_design(C, 4)
    assert D == sqs_direct(q)
    chk = verify_t_design(D, t)
    assert chk.lam == lam
    assert not D.is_complete()
    Dc = complementary_design(D)
    assert verify_t_design(Dc, t).lam == comp_lam
    # the dual minimum-weight design is exactly the complement
    assert support_design(dual(C), q - 3) == Dc
    for s in range(t + 1):
        lambda_s(t, q + 1, 4, lam, s)


def test_weight_five_design_q9():
    D = support_design(bch(F9, 10, 3), 5)
    chk = verify_t_design(D, 3)
    assert (D.b, chk.lam) == (72, 6)


def test_not_a_one_design():
    E = extend(bch(F9, 10, 3))
    chk = verify_t_design(support_design(E, 5), 1)
    assert not chk.is_t_design
    (s1, c1), (s2, c2) = chk.counterexample
    assert c1 != c2
    D = support_design(E, 5)
    for s, c in ((s1, c1), (s2, c2)):
        assert sum(set(s) <= set(b) for b in D.blocks) == c
    assert chk.to_json()["counterexample"][0]["subset"] == list(s1)


def test_verify_errors_and_workers():
    D = sqs_direct(9)
    with pytest.raises(DesignError):
        verify_t_design(D, 5)
    with pytest.raises(BudgetExceeded):
        verify_t_design(D, 3, budget=10)
    assert np.array_equal(coverage_counts(D, 3, 1), coverage_counts(D, 3, 3))


def test_lambda_s():
    assert lambda_s(3, 10, 4, 1, 0) == 30
    assert lambda_s(3, 10, 4, 1, 3) == 1
    assert lambda_s(3, 28, 4, 1, 0) == 819 == 21294 // 26
    with pytest.raises(DesignError):
        lambda_s(3, 11, 4, 1, 0)       # 165 / 4


def test_complement_and_steiner():
    D = sqs_direct(9)
    assert complementary_design(complementary_design(D)) == D
    assert steiner_check(verify_t_design(D, 3))
    assert not steiner_check(verify_t_design(sqs_direct(16), 2))
    full = Design(4, 2, list(itertools.combinations(range(4), 2)))
    assert full.is_complete() and steiner_check(verify_t_design(full, 2))
    single = Design(3, 1, [[0], [1], [2]])
    assert not steiner_check(verify_t_design(single, 1))
    with pytest.raises(DesignError):
        steiner_check(verify_t_design(support_design(extend(bch(F9, 10, 3)), 5), 1))


def _wds(C):
    return weight_distribution(C)[0], weight_distribution(dual(C))[0]


def test_assmus_mattson_examples():
    C = bch(F9, 10, 3)
    wd, wdd = _wds(C)
    am = assmus_mattson(10, 9, 4, 6, wd, wdd, 3)
    assert am.applies and am.s == 1
    assert am.design_weights == (4,) and am.design_weights_dual == (6,)
    C = bch(F16, 17, 3)
    wd, wdd = _wds(C)
    am = assmus_mattson(17, 16, 4, 13, wd, wdd, 2)
    assert not am.applies and am.s == 3
    wd, wdd = _wds(GOLAY)
    am = assmus_mattson(11, 3, 5, 6, wd, wdd, 4)
    assert am.applies and am.s == 1
    with pytest.raises(DesignError):
        assmus_mattson(11, 3, 5, 6, wd, wdd, 5)


@pytest.mark.parametrize("C,d,dd,t", [(bch(F9, 10, 3), 4, 6, 3), (GOLAY, 5, 6, 4), (extend(GOLAY), 6, 6, 5)])
def test_assmus_mattson_is_sound(C, d, dd, t):
    wd, wdd = _wds(C)
    am = assmus_mattson(C.n, C.q, d, dd, wd, wdd, t)
    assert am.applies
    for w in am.design_weights:
        assert verify_t_design(support_design(C, w), t).is_t_design
    for w in am.design_weights_dual:
        assert verify_t_design(support_design(dual(C), w), t).is_t_design


@pytest.mark.parametrize("q", [9, 27])
def test_char3_completion_total(q):
    ext, U = unit_circle(q)
    hits = {}
    for x, y, z in itertools.combinations(U, 3):
        w = complete_quadruple(ext, CHAR3, x, y, z)
        assert w not in (x, y, z) and ext.pow(w, q + 1) == 1
        pts = [x, y, z, w]
        e2 = 0
        for a, b in itertools.combinations(pts, 2):
            e2 = ext.add(e2, ext.mul(a, b))
        assert e2 == 0
        hits[frozenset(pts)] = hits.get(frozenset(pts), 0) + 1
    assert set(hits.values()) == {4}
    assert len(hits) == comb(q + 1, 3) // 4


@given(st.sampled_from([9, 27]), st.data())
def test_completion_symmetric(q, data):
    ext, U = unit_circle(q)
    idx = data.draw(st.lists(st.integers(0, q), min_size=3, max_size=3, unique=True))
    pts = [U[i] for i in idx]
    ws = {complete_quadruple(ext, CHAR3, *perm) for perm in itertools.permutations(pts)}
    assert len(ws) == 1


@pytest.mark.parametrize("q", [16, 64])
def test_char2_excluded_set(q):
    ext, U = unit_circle(q)
    for x, y in itertools.combinations(U, 2):
        exc = char2_excluded_set(ext, x, y)
        assert len(set(exc)) == 5
        pairs = set()
        for z in U:
            if z in (x, y):
                continue
            w = complete_quadruple(ext, CHAR2_EVEN, x, y, z)
            assert (w is None) == (z in exc)
            if w is not None:
                assert ext.pow(w, q + 1) == 1
                pairs.add(frozenset((z, w)))
        assert len(pairs) == (q - 4) // 2
        if q == 64:
            break          # one pair is enough for the count; the equivalence ran over all z above


def test_char2_excluded_set_all_pairs_q64():
    ext, U = unit_circle(64)
    bad = 0
    for x, y in itertools.permutations(U, 2):
        exc = set(char2_excluded_set(ext, x, y))
        for z in U:
            if z not in (x, y):
                bad += (complete_quadruple(ext, CHAR2_EVEN, x, y, z) is None) != (z in exc)
    assert bad == 0


def test_completion_errors():
    ext, U = unit_circle(9)
    with pytest.raises(DesignError):
        complete_quadruple(ext, CHAR3, U[0], U[0], U[1])
    with pytest.raises(DesignError):
        complete_quadruple(ext, CHAR3, U[0], U[1], ext.alpha)
    with pytest.raises(DesignError):
        complete_quadruple(ext, CHAR2_EVEN, U[0], U[1], U[2])
    with pytest.raises(DesignError):
        complete_quadruple(ext, "char5", U[0], U[1], U[2])


@pytest.mark.parametrize("q", [9, 16, 27])
def test_sqs_direct_matches_bruteforce(q):
    assert sqs_direct(q) == sqs_bruteforce(q)


def test_sqs_direct_sizes_and_errors():
    assert sqs_direct(9).b == 30 and sqs_direct(16).b == 136
    for q in (8, 25, 3, 4):
        with pytest.raises(DesignError):
            sqs_direct(q)


def test_det_identity_examples():
    F = build_field(3, 4)
    assert det_identity_oracle(F, 5, 5, 7) == (0, 0)
    assert det_identity_oracle(F, 5, 7, 5, 9) == (0, 0)
    with pytest.raises(DesignError):
        det_identity_oracle(F, 0, 1, 2)


@given(st.sampled_from([(3, 4), (2, 8)]), st.data())
def test_det_identity_random(pm, data):
    F = build_field(*pm)
    el = st.integers(1, F.order - 1)
    pts = [data.draw(el) for _ in range(data.draw(st.sampled_from([3, 4])))]
    lhs, rhs = det_identity_oracle(F, *pts)
    assert lhs == rhs


def test_det_zero_on_cube_root_triple():
    # q = 8: 3 | q + 1, so {1, g^3, g^6} in U_9 has x + y + z = 0 and xy + yz + zx = 0
    ext, U = unit_circle(8)
    x, y, z = U[0], U[3], U[6]
    e2 = ext.add(ext.add(ext.mul(x, y), ext.mul(y, z)), ext.mul(z, x))
    assert e2 == 0
    assert det_identity_oracle(ext, x, y, z) == (0, 0)


def test_char3_case_needs_characteristic_three():
    e4, U4 = unit_circle(16)
    with pytest.raises(DesignError):
        complete_quadruple(e4, CHAR3, U4[0], U4[1], U4[2])
