from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from nmdsdesigns.codes import bch, dual, extend, lift
from nmdsdesigns.designs import support_design, verify_t_design
from nmdsdesigns.field import build_field
from nmdsdesigns.nmds import (EXTREMAL_DUALS, TheoremContradiction, a_min_bound, amds_structure_checks, analyze,
                              classify, dldesign_predict, min_weight_pairing, nmds_weight_formulas)
from nmdsdesigns.search import low_weight_supports
from nmdsdesigns.weights import weight_distribution

F3, F8, F9, F16, F27 = (build_field(3, 1), build_field(2, 3), build_field(3, 2),
                        build_field(2, 4), build_field(3, 3))
GOLAY = bch(F3, 11, 2)


def instances():
    return [GOLAY, dual(GOLAY), extend(GOLAY), lift(GOLAY, F9), extend(bch(F9, 10, 3)),
            bch(F9, 10, 3), bch(F16, 17, 3), bch(F27, 28, 3)]


def test_family_reports():
    r = analyze(bch(F9, 10, 3))
    assert (r.d, r.d_dual, r.classification, r.extremality) == (4, 6, "NMDS", "neither")
    assert r.d + r.d_dual == r.n
    r = analyze(bch(F8, 9, 3))
    assert (r.d, r.d_dual, r.classification) == (3, 5, "other")
    assert r.dual_amds and r.defect == 2
    assert analyze(dual(bch(F8, 9, 3))).classification == "AMDS-only"
    for q, F in ((16, F16), (27, F27)):
        r = analyze(bch(F, q + 1, 3))
        assert r.is_nmds and r.extremality == "neither"


def test_extremality():
    assert analyze(extend(GOLAY)).extremality == "extremal"
    assert analyze(dual(GOLAY)).extremality == "extremal"
    assert analyze(GOLAY).extremality == "almost-extremal"
    # fixtures: the Golay entries of the extremal list are reproduced
    golay_rows = [e for e in EXTREMAL_DUALS if e["name"] in ("Golay", "extended Golay")]
    for e, C in zip(golay_rows, (GOLAY, extend(GOLAY))):
        assert analyze(C).d == e["d"] and C.n == e["n"] and C.k == e["k"]


def test_mds_classification():
    C = bch(F9, 8, 3)             # Reed-Solomon [8, 6, 3]
    r = analyze(C)
    assert r.classification == "MDS" and r.defect == 0


def test_report_json():
    r = analyze(bch(F9, 10, 3))
    js = r.to_json()
    assert js["label"] == "bch:q=3^2,n=10,delta=3,h=1" and js["classification"] == "NMDS"
    with pytest.raises(ValueError):
        classify(GOLAY, GOLAY, 5, 5)


def test_formulas_golay_and_q9():
    wd, wdd = nmds_weight_formulas(11, 6, 3, 132)
    assert wd[6] == comb(11, 5) * 2 - 6 * 132 == 132
    assert wd.to_json() == [1, 0, 0, 0, 0, 132, 132, 0, 330, 110, 0, 24]
    wd, wdd = nmds_weight_formulas(10, 6, 9, 240)
    assert wd[5] == 252 * 8 - 6 * 240 == 576
    assert wdd.to_json() == [1, 0, 0, 0, 0, 0, 240, 0, 2160, 2000, 2160]


def test_formulas_reject_bad_input():
    with pytest.raises(ValueError):
        nmds_weight_formulas(5, 5, 3, 0)
    with pytest.raises(ValueError):
        nmds_weight_formulas(10, 6, 9, 400)        # above the bound: negative counts


@pytest.mark.parametrize("idx", range(8))
def test_formulas_match_computed(idx):
    C = instances()[idx]
    wd, _ = weight_distribution(C)
    wdd, _ = weight_distribution(dual(C))
    assert wd[C.n - C.k] == wdd[C.k]
    f, fd = nmds_weight_formulas(C.n, C.k, C.q, wd[C.n - C.k])
    assert f == wd and fd == wdd


def test_a_min_bound():
    b, bd = a_min_bound(11, 6, 3)
    assert b == Fraction(154) and b > 132
    b, _ = a_min_bound(12, 6, 3)
    wd, _ = weight_distribution(extend(GOLAY))
    assert wd[6] == b == 264 and wd[7] == 0
    b, _ = a_min_bound(10, 6, 9)
    assert b == Fraction(comb(10, 5) * 8, 6)


def test_amds_checks():
    checks = dict(amds_structure_checks(GOLAY))
    assert checks["spanned by weights n-k and n-k+1"] is True
    assert all(v is not False for v in checks.values())
    checks = dict(amds_structure_checks(bch(F9, 10, 3)))
    assert checks["n <= k + 2q"] is True
    with pytest.raises(ValueError):
        amds_structure_checks(bch(F8, 9, 3))


@pytest.mark.parametrize("idx", range(8))
def test_pairing_is_bijection(idx):
    C = instances()[idx]
    pairs = min_weight_pairing(C, dual(C))
    assert len(set(pairs.values())) == len(pairs)
    assert all(not set(s) & set(t) for s, t in pairs.items())


def test_pairing_counts():
    assert len(min_weight_pairing(GOLAY, dual(GOLAY))) == 66
    C = bch(F9, 10, 3)
    pairs = min_weight_pairing(C, dual(C))
    assert len(pairs) == 30
    assert all(set(s) | set(t) == set(range(10)) for s, t in pairs.items())
    assert len(min_weight_pairing(bch(F16, 17, 3), dual(bch(F16, 17, 3)))) == 136


def test_pairing_detects_violation():
    C = bch(F8, 9, 3)             # not NMDS: the counts cannot match
    with pytest.raises(TheoremContradiction):
        min_weight_pairing(C, dual(C))


def test_predictions_hold():
    for C in (dual(bch(F9, 10, 3)), extend(GOLAY), GOLAY, dual(GOLAY)):
        r = analyze(C)
        wd, _ = weight_distribution(C)
        wdd, _ = weight_distribution(dual(C))
        preds = dldesign_predict(r, wd, wdd)
        assert preds
        D = support_design(dual(C), preds[0].weight)
        for p in preds:
            assert verify_t_design(D, p.t).is_t_design


def test_prediction_examples():
    C = dual(bch(F9, 10, 3))
    r = analyze(C)
    wd, _ = weight_distribution(C)
    wdd, _ = weight_distribution(dual(C))
    preds = dldesign_predict(r, wd, wdd)
    assert (preds[0].weight, preds[0].t, preds[0].s) == (4, 3, 1)
    E = extend(GOLAY)
    wd, _ = weight_distribution(E)
    p = dldesign_predict(analyze(E), wd, wd)[0]
    assert (p.t, p.weight) == (5, 6)
    C = bch(F9, 10, 3)
    wd, _ = weight_distribution(C)
    wdd, _ = weight_distribution(dual(C))
    assert dldesign_predict(analyze(C), wd, wdd) == []
    assert len(low_weight_supports(C, 4)) == 30
