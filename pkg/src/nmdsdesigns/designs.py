"""Block designs from codes: support designs, t-design verification, the
Assmus-Mattson criterion and the direct constructions on U_{q+1}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb, isqrt
from typing import Sequence

import numpy as np

from .codes import LinearCode
from .field import FieldCtx, build_field, extension, frobenius, prime_power, unit_roots
from .nmds import TheoremContradiction
from .parallel import run_tasks
from .search import low_weight_supports
from .weights import BudgetExceeded, WeightDistribution, default_budget


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class Design:
    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...] = dc_field(repr=False)

    def __init__(self, v: int, k: int, blocks: Sequence[Sequence[int]]):
        bs = sorted(tuple(sorted(int(x) for x in b)) for b in blocks)
        for b in bs:
            if len(b) != k or len(set(b)) != k:
                raise DesignError(f"block {b} does not have {k} distinct points")
            if b and (b[0] < 0 or b[-1] >= v):
                raise DesignError(f"block {b} has points outside 0..{v - 1}")
        for a, b in zip(bs, bs[1:]):
            if a == b:
                raise DesignError(f"repeated block {a}")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "blocks", tuple(bs))

    @property
    def b(self) -> int:
        return len(self.blocks)

    def __repr__(self) -> str:
        return f"Design(v={self.v}, k={self.k}, b={self.b})"

    def is_complete(self) -> bool:
        return self.b == comb(self.v, self.k)

    def to_json(self) -> dict:
        return {"v": self.v, "k": self.k, "blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class DesignCheck:
    t: int
    is_t_design: bool
    lam: int | None
    counterexample: tuple | None = None

    def to_json(self) -> dict:
        out = {"t": self.t, "is_t_design": self.is_t_design, "lambda": self.lam}
        if self.counterexample is not None:
            (s1, c1), (s2, c2) = self.counterexample
            out["counterexample"] = [{"subset": list(s1), "count": c1}, {"subset": list(s2), "count": c2}]
        return out


def support_design(code: LinearCode, w: int, budget: int | None = None, workers: int = 1) -> Design:
    """Blocks are the supports of the weight-w codewords."""
    supports = [s for s, _ in low_weight_supports(code, w, budget, workers)]
    for a, b in zip(supports, supports[1:]):
        if a == b:
            raise DesignError(f"support {a} carries non-proportional codewords")
    return Design(code.n, w, supports)


# ---------------------------------------------------------------------------
# t-subset coverage

def _comb_table(v: int, t: int) -> np.ndarray:
    return np.array([[comb(x, j) for j in range(t + 1)] for x in range(v + 1)], dtype=np.int64)


def _rank_subsets(sub: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Colex rank of sorted rows: sum_j C(x_j, j + 1)."""
    t = sub.shape[-1]
    return sum(table[sub[..., j], j + 1] for j in range(t))


def _unrank(r: int, t: int) -> tuple[int, ...]:
    out = []
    for j in range(t, 0, -1):
        x = j - 1
        while comb(x + 1, j) <= r:
            x += 1
        out.append(x)
        r -= comb(x, j)
    return tuple(sorted(out))


def _coverage_chunk(blocks: np.ndarray, v: int, t: int) -> np.ndarray:
    table = _comb_table(v, t)
    pos = np.array(list(itertools.combinations(range(blocks.shape[1]), t)), dtype=np.int64)
    counts = np.zeros(comb(v, t), dtype=np.int64)
    step = max(1, (1 << 20) // max(1, len(pos)))
    for i in range(0, blocks.shape[0], step):
        sub = blocks[i:i + step][:, pos]
        counts += np.bincount(_rank_subsets(sub, table).ravel(), minlength=counts.size)
    return counts


def coverage_counts(design: Design, t: int, workers: int = 1) -> np.ndarray:
    """How many blocks contain each t-subset, indexed by colex rank."""
    blocks = np.array(design.blocks, dtype=np.int64).reshape(design.b, design.k)
    parts = max(1, min(workers, design.b))
    bounds = [design.b * i // parts for i in range(parts + 1)]
    tasks = [(blocks[bounds[i]:bounds[i + 1]], design.v, t) for i in range(parts)]
    return np.sum(run_tasks(_coverage_chunk, tasks, workers), axis=0)


def verify_t_design(design: Design, t: int, budget: int | None = None, workers: int = 1) -> DesignCheck:
    """Count every t-subset's blocks exactly; report lambda or two disagreeing subsets."""
    v, k = design.v, design.k
    if not 1 <= t <= k <= v:
        raise DesignError(f"need 1 <= t <= k <= v, got t={t}, k={k}, v={v}")
    budget = default_budget() if budget is None else budget
    if comb(v, t) > budget:
        raise BudgetExceeded(f"C({v},{t}) t-subsets exceed the budget {budget}")
    counts = coverage_counts(design, t, workers)
    bad = np.nonzero(counts != counts[0])[0]
    if bad.size == 0:
        return DesignCheck(t, True, int(counts[0]))
    i = int(bad[0])
    cex = ((_unrank(0, t), int(counts[0])), (_unrank(i, t), int(counts[i])))
    return DesignCheck(t, False, None, cex)


def lambda_s(t: int, v: int, k: int, lam: int, s: int) -> int:
    """lambda * C(v-s, t-s) / C(k-s, t-s), which must be an integer."""
    if not 0 <= s <= t:
        raise DesignError("need 0 <= s <= t")
    num = lam * comb(v - s, t - s)
    den = comb(k - s, t - s)
    if num % den:
        raise DesignError(f"lambda_{s} = {num}/{den} is not an integer")
    return num // den


def complementary_design(design: Design) -> Design:
    if design.k >= design.v:
        raise DesignError("complement needs k < v")
    pts = set(range(design.v))
    return Design(design.v, design.v - design.k, [sorted(pts.difference(b)) for b in design.blocks])


def steiner_check(check: DesignCheck) -> bool:
    if not check.is_t_design:
        raise DesignError("not a t-design")
    return check.t >= 2 and check.lam == 1


# ---------------------------------------------------------------------------
# Assmus-Mattson

@dataclass(frozen=True)
class AssmusMattson:
    applies: bool
    s: int
    w_cap: int
    w_cap_dual: int
    design_weights: tuple[int, ...]
    design_weights_dual: tuple[int, ...]

    def to_json(self) -> dict:
        return {"applies": self.applies, "s": self.s, "w_cap": self.w_cap, "w_cap_dual": self.w_cap_dual,
                "design_weights": list(self.design_weights),
                "design_weights_dual": list(self.design_weights_dual)}


def _weight_cap(v: int, q: int, d: int) -> int:
    w = v
    while w > 0 and w - (w + q - 2) // (q - 1) >= d:
        w -= 1
    return w


def assmus_mattson(n: int, q: int, d: int, d_dual: int, wd: WeightDistribution,
                   wd_dual: WeightDistribution, t: int) -> AssmusMattson:
    """Which weights the criterion guarantees to hold t-designs.

    s counts the nonzero dual weights i with 0 < i <= n - t.
    """
    if not 0 < t < d:
        raise DesignError(f"need 0 < t < d, got t={t}, d={d}")
    w = _weight_cap(n, q, d)
    wp = _weight_cap(n, q, d_dual)
    s = sum(1 for i in range(1, n - t + 1) if wd_dual[i])
    applies = s <= d - t
    if not applies:
        return AssmusMattson(False, s, w, wp, (), ())
    prim = tuple(i for i in range(d, w + 1) if wd[i])
    dl = tuple(i for i in range(d_dual, min(n - t, wp) + 1) if wd_dual[i])
    return AssmusMattson(True, s, w, wp, prim, dl)


# ---------------------------------------------------------------------------
# the direct constructions on U_{q+1} inside GF(q^2)

CHAR3 = "char3"
CHAR2_EVEN = "char2-even"


def _base_order(ext: FieldCtx) -> int:
    q = isqrt(ext.order)
    if q * q != ext.order:
        raise DesignError("the ambient field must have square order")
    return q


def _check_triple(ext: FieldCtx, pts: Sequence[int]) -> None:
    q = _base_order(ext)
    for x in pts:
        if x == 0 or ext.pow(x, q + 1) != 1:
            raise DesignError(f"{x} is not a (q+1)-th root of unity")
    if len(set(pts)) != len(pts):
        raise DesignError("points must be pairwise distinct")


def _e1_e2(ext: FieldCtx, x: int, y: int, z: int) -> tuple[int, int]:
    e1 = ext.add(ext.add(x, y), z)
    e2 = ext.add(ext.add(ext.mul(x, y), ext.mul(y, z)), ext.mul(z, x))
    return e1, e2


def complete_quadruple(ext: FieldCtx, case: str, x: int, y: int, z: int) -> int | None:
    """The fourth point w with e2(x, y, z, w) = 0, or None when no block contains x, y, z."""
    _check_triple(ext, (x, y, z))
    e1, e2 = _e1_e2(ext, x, y, z)
    if case == CHAR3:
        if ext.p != 3:
            raise DesignError("char3 completion needs characteristic 3")
        if e1 == 0:
            raise TheoremContradiction("three distinct points of U_{q+1} sum to zero")
        w = ext.neg(ext.div(e2, e1))
        if w in (x, y, z) or ext.pow(w, _base_order(ext) + 1) != 1:
            raise TheoremContradiction("completion left U_{q+1} or repeated a point")
        return w
    if case == CHAR2_EVEN:
        if ext.p != 2:
            raise DesignError("char2-even completion needs characteristic 2")
        if e1 == 0:
            return None
        w = ext.div(e2, e1)
        if w in (x, y, z):
            return None
        return w
    raise DesignError(f"unknown case {case!r}")


def char2_excluded_set(ext: FieldCtx, x: int, y: int) -> list[int]:
    """x, y, x^2/y, y^2/x and the square root of xy."""
    xy = ext.mul(x, y)
    root = frobenius(ext, xy, 2 ** (ext.abs_degree - 1))
    return [x, y, ext.div(ext.mul(x, x), y), ext.div(ext.mul(y, y), x), root]


def family_case(q: int) -> str:
    p, s = prime_power(q)
    if p == 3 and s >= 2:
        return CHAR3
    if p == 2 and s >= 4 and s % 2 == 0:
        return CHAR2_EVEN
    raise DesignError(f"q = {q} is neither 3^s (s >= 2) nor 2^s (s >= 4 even)")


def unit_circle(q: int) -> tuple[FieldCtx, list[int]]:
    """(GF(q^2), [gamma^0, ..., gamma^q])."""
    p, s = prime_power(q)
    ext = extension(build_field(p, s), 2)
    return ext, list(unit_roots(ext))


def sqs_direct(q: int) -> Design:
    """All 4-subsets of exponents {i,j,k,l} with e2(gamma^i, ..., gamma^l) = 0, by triple completion."""
    case = family_case(q)
    ext, U = unit_circle(q)
    index = {u: i for i, u in enumerate(U)}
    blocks = set()
    for i, j, k in itertools.combinations(range(q + 1), 3):
        w = complete_quadruple(ext, case, U[i], U[j], U[k])
        if w is not None:
            blocks.add(tuple(sorted((i, j, k, index[w]))))
    return Design(q + 1, 4, blocks)


def sqs_bruteforce(q: int) -> Design:
    """Reference: test e2 = 0 on every 4-subset directly."""
    family_case(q)
    ext, U = unit_circle(q)
    Ua = np.array(U, dtype=np.int64)
    quads = np.array(list(itertools.combinations(range(q + 1), 4)), dtype=np.int64)
    pts = Ua[quads]
    acc = np.zeros(quads.shape[0], dtype=np.int64)
    for a, b in itertools.combinations(range(4), 2):
        acc = ext.vadd(acc, ext.vmul(pts[:, a], pts[:, b]))
    return Design(q + 1, 4, quads[acc == 0].tolist())


# ---------------------------------------------------------------------------
# determinant identities

def _det(F: FieldCtx, M: list[list[int]]) -> int:
    """Laplace expansion along the first row."""
    if len(M) == 1:
        return M[0][0]
    acc = 0
    for j, a in enumerate(M[0]):
        if a == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = F.mul(a, _det(F, minor))
        acc = F.sub(acc, term) if j % 2 else F.add(acc, term)
    return acc


def det_identity_oracle(F: FieldCtx, x: int, y: int, z: int, w: int | None = None) -> tuple[int, int]:
    """(determinant, closed form) for the 3x3 or 4x4 power matrix."""
    pts = [x, y, z] if w is None else [x, y, z, w]
    if any(a == 0 for a in pts):
        raise DesignError("inputs must be nonzero")
    inv = [F.inv(a) for a in pts]
    sq = [F.mul(a, a) for a in pts]
    rows = [inv, pts, sq]
    if w is not None:
        rows = [[F.mul(a, a) for a in inv]] + rows
    lhs = _det(F, rows)
    e2 = 0
    for a, b in itertools.combinations(pts, 2):
        e2 = F.add(e2, F.mul(a, b))
    prod = 1
    for a in pts:
        prod = F.mul(prod, a)
    if w is None:
        vdm = F.mul(F.mul(F.sub(x, y), F.sub(y, z)), F.sub(z, x))
        rhs = F.mul(F.div(vdm, prod), e2)
    else:
        vdm = 1
        for a, b in ((z, w), (y, w), (y, z), (x, w), (x, z), (x, y)):
            vdm = F.mul(vdm, F.sub(a, b))
        rhs = F.mul(F.div(vdm, F.mul(prod, prod)), e2)
    return lhs, rhs
