"""Reproduction checks for the headline results, one function per criterion.

Every criterion returns a :class:`CriterionResult` holding named checks with
expected and computed values.  Wall time is measured but kept out of
``to_json`` so that reports are byte-identical across runs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Any, Callable

import numpy as np

from . import codes, designs, nmds, search, weights
from .field import FieldCtx, build_field, extension, prime_power, tower_chain
from .poly import factor_xn_minus_1, nth_root_context, poly_product, xn_minus_1


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {"name": self.name, "expected": _jsonable(self.expected),
                "computed": _jsonable(self.computed), "ok": self.ok}


@dataclass
class CriterionResult:
    number: int
    title: str
    limit: float
    checks: list[Check] = dc_field(default_factory=list)
    fields: list[FieldCtx] = dc_field(default_factory=list)
    seconds: float = 0.0
    skipped: bool = False
    error: str | None = None

    @property
    def within_limit(self) -> bool:
        return self.seconds <= self.limit

    @property
    def passed(self) -> bool:
        if self.skipped:
            return True
        return self.error is None and bool(self.checks) and all(c.ok for c in self.checks) and self.within_limit

    def check(self, name: str, expected: Any, computed: Any) -> None:
        self.checks.append(Check(name, expected, computed))

    def use(self, *fs: FieldCtx) -> None:
        for F in fs:
            if all(F is not G for G in self.fields):
                self.fields.append(F)

    def line(self) -> str:
        if self.skipped:
            return f"SKIP criterion {self.number}: {self.title}"
        status = "PASS" if self.passed else "FAIL"
        bad = [c.name for c in self.checks if not c.ok]
        extra = ""
        if self.error:
            extra = f" error={self.error}"
        elif bad:
            extra = f" failed={bad}"
        elif not self.within_limit:
            extra = f" over time limit {self.limit}s"
        return f"{status} criterion {self.number}: {self.title} ({self.seconds:.2f}s / {self.limit:g}s){extra}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "limit_seconds": self.limit,
                "skipped": self.skipped, "passed": self.passed, "within_limit": self.within_limit or self.skipped,
                "error": self.error, "checks": [c.to_json() for c in self.checks],
                "fields": [field_key(F) for F in self.fields]}


def field_key(F: FieldCtx) -> str:
    """Tower path such as "3^4/3^2/3^1"; distinguishes equal orders built differently."""
    return "/".join(G.name for G in tower_chain(F))


def _jsonable(x: Any) -> Any:
    if isinstance(x, weights.WeightDistribution):
        return x.to_json()
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, np.integer):
        return int(x)
    return x


# ---------------------------------------------------------------------------
# closed forms in q, used as expected values

def sqs_family_dual_enumerator(q: int) -> dict[int, int]:
    """Dual weight distribution of the ternary (q = 3^s) family."""
    return {0: 1,
            q - 3: (q - 1) ** 2 * q * (q + 1) // 24,
            q - 1: (q - 1) * q * (q + 1) * (q + 3) // 4,
            q: (q * q - 1) * (q * q - q + 3) // 3,
            q + 1: 3 * (q - 1) ** 2 * q * (q + 1) // 8}


def char2_family_dual_enumerator(q: int) -> dict[int, int]:
    """Dual weight distribution of the binary even-s (q = 2^s) family."""
    return {0: 1,
            q - 3: (q - 4) * (q - 1) * q * (q + 1) // 24,
            q - 2: (q - 1) * q * (q + 1) // 2,
            q - 1: (q + 1) * q * q * (q - 1) // 4,
            q: (q - 1) * (q + 1) * (2 * q * q + q + 6) // 6,
            q + 1: (3 * q ** 4 - 4 * q ** 3 - 3 * q ** 2 + 4 * q) // 8}


def family_a4(q: int) -> int:
    p, _ = prime_power(q)
    if p == 3:
        return (q - 1) ** 2 * q * (q + 1) // 24
    return (q - 4) * (q - 1) * q * (q + 1) // 24


def family_code(q: int) -> codes.LinearCode:
    p, s = prime_power(q)
    return codes.bch(build_field(p, s), q + 1, 3)


def golay() -> codes.LinearCode:
    return codes.bch(build_field(3, 1), 11, 2)


GOLAY = {0: 1, 5: 132, 6: 132, 8: 330, 9: 110, 11: 24}
GOLAY_GF9 = {0: 1, 5: 528, 6: 528, 7: 15840, 8: 40920, 9: 129800, 10: 198000, 11: 145824}
EXT_C9 = {0: 1, 5: 240, 6: 2256, 7: 11520, 8: 46680, 9: 125480, 10: 199728, 11: 145536}


def _dist(wd: weights.WeightDistribution) -> dict[int, int]:
    return wd.as_dict()


# ---------------------------------------------------------------------------
# criteria

def criterion_1(r: CriterionResult, workers: int) -> None:
    C = golay()
    r.use(C.field)
    r.check("parameters [n, k]", [11, 6], [C.n, C.k])
    r.check("weight enumerator", GOLAY, _dist(weights.weight_distribution_enum(C, workers=workers)))


def criterion_2(r: CriterionResult, workers: int) -> None:
    C = golay()
    ext = extension(C.field, 2)
    L = codes.lift(C, ext)
    r.use(C.field, ext)
    r.check("lifted parameters [n, k]", [11, 6], [L.n, L.k])
    r.check("weight enumerator over GF(9)", GOLAY_GF9, _dist(weights.weight_distribution_enum(L, workers=workers)))


def criterion_3(r: CriterionResult, workers: int) -> None:
    E = codes.extend(family_code(9))
    r.use(E.field)
    r.check("parameters [n, k]", [11, 6], [E.n, E.k])
    r.check("weight enumerator", EXT_C9, _dist(weights.weight_distribution_enum(E, workers=workers)))
    chk = designs.verify_t_design(designs.support_design(E, 5, workers=workers), 1, workers=workers)
    r.check("weight-5 supports form a 1-design", False, chk.is_t_design)
    chk = designs.verify_t_design(designs.support_design(codes.dual(E), 6, workers=workers), 1, workers=workers)
    r.check("dual weight-6 supports form a 1-design", False, chk.is_t_design)


def criterion_4(r: CriterionResult, workers: int) -> None:
    for q in (9, 27):
        C = family_code(q)
        D = codes.dual(C)
        r.use(C.field)
        r.check(f"q={q} code [n, k, d]", [q + 1, q - 3, 4], [C.n, C.k, search.min_distance(C)])
        r.check(f"q={q} dual [n, k, d]", [q + 1, 4, q - 3], [D.n, D.k, search.min_distance(D)])
        wd = weights.weight_distribution_enum(D, workers=workers)
        r.check(f"q={q} dual enumerator", sqs_family_dual_enumerator(q), _dist(wd))
        r.check(f"q={q} dual total", q ** 4, wd.total)


def _sqs_block(r: CriterionResult, q: int, workers: int) -> None:
    C = family_code(q)
    r.use(C.field, extension(C.field, 2))
    D = designs.support_design(C, 4, workers=workers)
    S = designs.sqs_direct(q)
    r.check(f"q={q} support design equals direct construction", True, D == S)
    chk = designs.verify_t_design(D, 3, workers=workers)
    r.check(f"q={q} 3-design (b, lambda)", [comb(q + 1, 3) // 4, 1], [D.b, chk.lam])
    r.check(f"q={q} Steiner system", True, designs.steiner_check(chk))
    r.check(f"q={q} not the complete design", False, D.is_complete())
    Dc = designs.complementary_design(D)
    chk_c = designs.verify_t_design(Dc, 3, workers=workers)
    r.check(f"q={q} complement (k, lambda)", [q - 3, (q - 3) * (q - 4) * (q - 5) // 24], [Dc.k, chk_c.lam])
    r.check(f"q={q} lambda_0 equals b", D.b, designs.lambda_s(3, q + 1, 4, 1, 0))


def criterion_5(r: CriterionResult, workers: int) -> None:
    for q in (9, 27):
        _sqs_block(r, q, workers)


def criterion_6(r: CriterionResult, workers: int) -> None:
    for q, blocks in ((9, 72), (27, 78624)):
        C = family_code(q)
        r.use(C.field)
        D = designs.support_design(C, 5, workers=workers)
        chk = designs.verify_t_design(D, 3, workers=workers)
        r.check(f"q={q} weight-5 3-design (b, lambda)", [blocks, (q - 3) * (q - 7) // 2], [D.b, chk.lam])


def criterion_7(r: CriterionResult, workers: int) -> None:
    q = 16
    C = family_code(q)
    Dl = codes.dual(C)
    r.use(C.field, extension(C.field, 2))
    r.check("[n, k, d] and dual d", [17, 13, 4, 13], [C.n, C.k, search.min_distance(C), search.min_distance(Dl)])
    wd_dual = weights.weight_distribution_enum(Dl, workers=workers)
    r.check("dual enumerator", char2_family_dual_enumerator(q), _dist(wd_dual))
    wd = weights.macwilliams(wd_dual, C.n, Dl.k, q)
    r.check("A_4", 2040, wd[4])
    D = designs.support_design(C, 4, workers=workers)
    chk = designs.verify_t_design(D, 2, workers=workers)
    r.check("weight-4 2-design (b, lambda)", [136, 6], [D.b, chk.lam])
    r.check("support design equals direct construction", True, D == designs.sqs_direct(q))
    chk_c = designs.verify_t_design(designs.complementary_design(D), 2, workers=workers)
    r.check("complement 2-design lambda", (q - 4) ** 2 * (q - 3) // 24, chk_c.lam)
    am = designs.assmus_mattson(C.n, q, 4, q - 3, wd, wd_dual, 2)
    r.check("Assmus-Mattson applies at t=2", False, am.applies)


def criterion_8(r: CriterionResult, workers: int) -> None:
    q = 8
    C = family_code(q)
    r.use(C.field, extension(C.field, 2))
    d = search.min_distance(C)
    r.check("[n, k, d]", [9, 5, 3], [C.n, C.k, d])
    witness = (0, (q + 1) // 3, 2 * (q + 1) // 3)
    sup = [s for s, _ in search.low_weight_supports(C, 3, workers=workers)]
    r.check("weight-3 witness support present", True, witness in sup)
    word = np.zeros(C.n, dtype=np.int64)
    word[list(witness)] = 1
    r.check("all-one word on the witness is a codeword", True, C.contains(word))
    rep = nmds.analyze(C)
    r.check("classification", "other", rep.classification)
    r.check("dual is AMDS", True, rep.dual_amds)


def _zetterberg_dual(s: int, workers: int) -> tuple[codes.LinearCode, codes.LinearCode, weights.WeightDistribution]:
    q = 2 ** s
    sub = codes.subfield_subcode(family_code(q), build_field(2, 1))
    D = codes.dual(sub)
    return sub, D, weights.weight_distribution_enum(D, workers=workers)


def criterion_9(r: CriterionResult, workers: int) -> None:
    sub, D, wd = _zetterberg_dual(4, workers)
    r.use(build_field(2, 4), build_field(2, 1))
    r.check("subfield subcode [n, k, d]", [17, 9, 5], [sub.n, sub.k, search.min_distance(sub)])
    shared = nth_root_context(build_field(2, 4), 17)
    r.check("equals the binary BCH code", True, sub == codes.bch(build_field(2, 1), 17, 3, root=shared))
    sp = codes.sphere_packing_check(17, 9, 5, 2)
    r.check("sphere packing (holds, k_max)", [True, 9], [sp["holds"], sp["k_max"]])
    r.check("dual [n, k, d]", [17, 8, 2 ** 3 - 2 ** 2 + 2], [D.n, D.k, wd.min_distance])
    # the [65, 12, 26] line belongs to s = 6
    sub6, D6, wd6 = _zetterberg_dual(6, workers)
    r.use(build_field(2, 6))
    r.check("s=6 dual [n, k, d]", [65, 12, 2 ** 5 - 2 ** 3 + 2], [D6.n, D6.k, wd6.min_distance])


def criterion_10(r: CriterionResult, workers: int) -> None:
    F3 = build_field(3, 1)
    for s, (k, d, dk, dd) in ((2, (2, 5, 8, 2)), (3, (16, 4, 12, 8))):
        q = 3 ** s
        C = family_code(q)
        r.use(C.field)
        sub = codes.subfield_subcode(C, F3)
        D = codes.dual(sub)
        r.check(f"s={s} subcode [n, k, d]", [q + 1, k, d], [sub.n, sub.k, search.min_distance(sub)])
        if D.k <= 12:
            d_dual = weights.weight_distribution_enum(D, workers=workers).min_distance
        else:
            d_dual = search.min_distance(D)
        r.check(f"s={s} dual [n, k, d]", [q + 1, dk, dd], [D.n, D.k, d_dual])
        shared = nth_root_context(C.field, q + 1)
        r.check(f"s={s} subcode equals ternary BCH", True, sub == codes.bch(F3, q + 1, 3, root=shared))
        r.check(f"s={s} Delsarte identity", True, sub == codes.dual(codes.trace_code(codes.dual(C), F3)))


def _random_code(rng: np.random.Generator) -> codes.LinearCode:
    while True:
        q = int(rng.choice([2, 3, 4, 5, 7]))
        p, m = prime_power(q)
        F = build_field(p, m)
        n = int(rng.integers(3, 11))
        k = int(rng.integers(1, n))
        if q ** k > 1 << 20 or q ** (n - k) > 1 << 20:
            continue
        G = rng.integers(0, q, size=(k, n))
        C = codes.LinearCode(F, G)
        if 0 < C.k < n:
            return C


def nmds_instances() -> list[tuple[str, codes.LinearCode]]:
    G = golay()
    return [("golay", G), ("golay dual", codes.dual(G)), ("extended golay", codes.extend(G)),
            ("golay over GF(9)", codes.lift(G, extension(G.field, 2))),
            ("extended q=9 family", codes.extend(family_code(9))),
            ("q=9 family", family_code(9)), ("q=16 family", family_code(16)), ("q=27 family", family_code(27))]


FACTOR_CASES = ((11, 3), (10, 9), (28, 27), (17, 16), (9, 8), (10, 3), (28, 3), (17, 2), (65, 64), (65, 2), (82, 81))


def criterion_11(r: CriterionResult, workers: int) -> None:
    rng = np.random.default_rng(2019)
    ok = True
    for _ in range(20):
        C = _random_code(rng)
        a = weights.weight_distribution_enum(C)
        b = weights.weight_distribution_enum(codes.dual(C))
        ok &= weights.macwilliams(a, C.n, C.k, C.q) == b
        ok &= weights.macwilliams(b, C.n, C.r, C.q) == a
    r.check("(a) MacWilliams agrees with enumeration on 20 random codes", True, bool(ok))

    closed, equal_min, paired = [], [], []
    for name, C in nmds_instances():
        r.use(C.field)
        wd, _ = weights.weight_distribution(C, workers=workers)
        wdd, _ = weights.weight_distribution(codes.dual(C), workers=workers)
        f, fd = nmds.nmds_weight_formulas(C.n, C.k, C.q, wd[C.n - C.k])
        closed.append(f == wd and fd == wdd)
        equal_min.append(wd[C.n - C.k] == wdd[C.k])
        try:
            pairs = nmds.min_weight_pairing(C, codes.dual(C), workers=workers)
            paired.append(len(pairs) * (C.q - 1) == wd[C.n - C.k])
        except nmds.TheoremContradiction:
            paired.append(False)
    names = [n for n, _ in nmds_instances()]
    r.check("(b) closed forms match computed distributions", names, [n for n, c in zip(names, closed) if c])
    r.check("(c) A_{n-k} = A_k of the dual", names, [n for n, c in zip(names, equal_min) if c])
    r.check("(e) minimum-weight pairing is a bijection", names, [n for n, c in zip(names, paired) if c])

    rnd = random.Random(81256)
    det_ok = True
    for F in (build_field(3, 4), build_field(2, 8)):
        r.use(F)
        for i in range(1000):
            pts = [rnd.randrange(1, F.order) for _ in range(3 + i % 2)]
            lhs, rhs = designs.det_identity_oracle(F, *pts)
            det_ok &= lhs == rhs
    r.check("(d) determinant identities on 1000 tuples per field", True, bool(det_ok))

    fact_ok = []
    for n, q in FACTOR_CASES:
        p, m = prime_power(q)
        F = build_field(p, m)
        fact_ok.append(poly_product(F, factor_xn_minus_1(F, n)) == xn_minus_1(F, n))
    r.check("(f) product of minimal polynomials is x^n - 1", [True] * len(FACTOR_CASES), fact_ok)

    par = max(2, workers)
    Dl = codes.dual(family_code(16))
    C27 = family_code(27)
    D27 = designs.support_design(C27, 4)
    same = (weights.weight_distribution_enum(Dl, workers=1) == weights.weight_distribution_enum(Dl, workers=par)
            and [s for s, _ in search.low_weight_supports(C27, 4, workers=1)]
            == [s for s, _ in search.low_weight_supports(C27, 4, workers=par)]
            and np.array_equal(designs.coverage_counts(D27, 3, 1), designs.coverage_counts(D27, 3, par)))
    r.check(f"(g) identical results with 1 and {par} workers", True, bool(same))


def criterion_12(r: CriterionResult, workers: int) -> None:
    q = 81
    C = family_code(q)
    r.use(C.field, extension(C.field, 2))
    S = designs.sqs_direct(q)
    chk = designs.verify_t_design(S, 3, workers=workers)
    r.check("q=81 direct SQS (b, lambda)", [22140, 1], [S.b, chk.lam])
    r.check("q=81 support design equals direct construction", True,
            designs.support_design(C, 4, workers=workers) == S)
    wd = weights.weight_distribution_enum(codes.dual(C), workers=workers)
    r.check("q=81 dual enumerator", sqs_family_dual_enumerator(q), _dist(wd))
    q = 64
    C = family_code(q)
    r.use(C.field)
    S = designs.sqs_direct(q)
    chk = designs.verify_t_design(S, 2, workers=workers)
    r.check("q=64 direct 2-design (b, lambda)", [10400, 30], [S.b, chk.lam])
    r.check("q=64 support design equals direct construction", True,
            designs.support_design(C, 4, workers=workers) == S)


CRITERIA: list[tuple[int, str, float, Callable[[CriterionResult, int], None], bool]] = [
    (1, "ternary Golay enumerator", 1.0, criterion_1, False),
    (2, "Golay lifted to GF(9)", 5.0, criterion_2, False),
    (3, "extended q=9 BCH code", 5.0, criterion_3, False),
    (4, "q=9 and q=27 NMDS parameters and dual enumerators", 30.0, criterion_4, False),
    (5, "Steiner quadruple systems q=9, 27", 30.0, criterion_5, False),
    (6, "weight-5 3-designs q=9, 27", 300.0, criterion_6, False),
    (7, "q=16 family and its 2-designs", 30.0, criterion_7, False),
    (8, "q=8 weight-3 witness", 1.0, criterion_8, False),
    (9, "binary subfield subcodes", 1.0, criterion_9, False),
    (10, "ternary subfield subcodes", 120.0, criterion_10, False),
    (11, "property suites", 120.0, criterion_11, False),
    (12, "q=81 SQS and q=64 2-design", 1800.0, criterion_12, True),
]


def run_criterion(number: int, workers: int = 1, long_tests: bool = False) -> CriterionResult:
    num, title, limit, fn, is_long = next(c for c in CRITERIA if c[0] == number)
    r = CriterionResult(num, title, limit)
    if is_long and not long_tests:
        r.skipped = True
        return r
    t0 = time.perf_counter()
    try:
        fn(r, workers)
    except Exception as exc:  # the report records failures instead of aborting
        r.error = f"{type(exc).__name__}: {exc}"
    r.seconds = time.perf_counter() - t0
    return r


def run_all(workers: int = 1, long_tests: bool = False) -> list[CriterionResult]:
    return [run_criterion(c[0], workers, long_tests) for c in CRITERIA]


def report(results: list[CriterionResult]) -> dict:
    fields: dict[str, dict] = {}
    for r in results:
        for F in r.fields:
            fields[field_key(F)] = F.describe()
    return {"schema": 1, "criteria": [r.to_json() for r in results],
            "fields": fields, "all_passed": all(r.passed for r in results)}
