"""Singleton defect, AMDS/NMDS classification and the closed-form NMDS weight distributions."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import linalg
from .codes import LinearCode, dual
from .search import low_weight_supports, min_distance
from .weights import WeightDistribution


class TheoremContradiction(RuntimeError):
    """A computed object disagrees with a proven structural statement."""


@dataclass(frozen=True)
class NmdsReport:
    n: int
    k: int
    q: int
    d: int
    d_dual: int
    defect: int
    defect_dual: int
    classification: str
    extremality: str
    label: str = ""

    @property
    def is_nmds(self) -> bool:
        return self.classification == "NMDS"

    @property
    def dual_amds(self) -> bool:
        return self.defect_dual == 1

    def to_json(self) -> dict:
        out = asdict(self)
        out["dual_amds"] = self.dual_amds
        return out


def singleton_defect(n: int, k: int, d: int) -> int:
    return n - k + 1 - d


def classify(code: LinearCode, dual_code: LinearCode, d: int, d_dual: int) -> NmdsReport:
    n, k, q = code.n, code.k, code.q
    if dual_code.n != n or dual_code.k != n - k:
        raise ValueError("dual_code does not have complementary parameters")
    defect = singleton_defect(n, k, d)
    defect_dual = singleton_defect(n, n - k, d_dual)
    if defect == 0:
        cls = "MDS"
    elif defect == 1 and defect_dual == 1:
        cls = "NMDS"
    elif defect == 1:
        cls = "AMDS-only"
    else:
        cls = "other"
    ext = "neither"
    if cls == "NMDS":
        if n == 2 * q + k and d == n - k:
            ext = "extremal"
        elif n == 2 * q + k - 1 and d == 2 * q - 1:
            ext = "almost-extremal"
    return NmdsReport(n, k, q, d, d_dual, defect, defect_dual, cls, ext, code.label)


def analyze(code: LinearCode, budget: int | None = None) -> NmdsReport:
    """Compute both minimum distances by column search and classify."""
    D = dual(code)
    d = min_distance(code, budget=budget)
    dd = min_distance(D, budget=budget)
    if d is None or dd is None:
        raise ValueError("classification needs nonzero codes on both sides")
    return classify(code, D, d, dd)


def _dl_tail(n: int, k: int, q: int, a_min: int, s: int) -> int:
    # A_{n-k+s} for an [n, k, n-k] NMDS code
    head = sum((-1) ** j * comb(n - k + s, j) * (q ** (s - j) - 1) for j in range(s))
    return comb(n, k - s) * head + (-1) ** s * comb(k, s) * a_min


def nmds_weight_formulas(n: int, k: int, q: int, a_min: int) -> tuple[WeightDistribution, WeightDistribution]:
    """Weight distributions of an [n, k, n-k] NMDS code and its dual, given A_{n-k}.

    A_{n-k} and A^perp_k coincide, so the dual side is the same formula with
    k replaced by n - k.  Negative or inconsistent totals mean no NMDS code
    has these parameters with this A_{n-k}.
    """
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    if a_min < 0:
        raise ValueError("A_min must be non-negative")
    A = [0] * (n + 1)
    A[0] = 1
    A[n - k] = a_min
    for s in range(1, k + 1):
        A[n - k + s] = _dl_tail(n, k, q, a_min, s)
    B = [0] * (n + 1)
    B[0] = 1
    B[k] = a_min
    for s in range(1, n - k + 1):
        B[k + s] = _dl_tail(n, n - k, q, a_min, s)
    if any(a < 0 for a in A) or any(b < 0 for b in B):
        raise ValueError(f"A_min = {a_min} gives negative counts for [{n}, {k}] over GF({q})")
    if sum(A) != q ** k or sum(B) != q ** (n - k):
        raise ValueError("closed-form totals disagree with q^k")
    return WeightDistribution(A), WeightDistribution(B)


def a_min_bound(n: int, k: int, q: int) -> tuple[Fraction, Fraction]:
    """Upper bounds on A_{n-k} and on A^perp_k (equality iff the next weight is absent)."""
    return Fraction(comb(n, k - 1) * (q - 1), k), Fraction(comb(n, k + 1) * (q - 1), n - k)


def _span_rank(code: LinearCode, weights: list[int], budget: int | None) -> int:
    rows = [w for wt in weights for _, w in low_weight_supports(code, wt, budget)]
    if not rows:
        return 0
    return linalg.rank(code.field, np.array(rows))


def amds_structure_checks(code: LinearCode, budget: int | None = None) -> list[tuple[str, bool | None]]:
    """Evaluate the structural consequences of being AMDS; None marks a vacuous item."""
    n, k, q = code.n, code.k, code.q
    d = min_distance(code, budget=budget)
    if d is None or singleton_defect(n, k, d) != 1:
        raise ValueError("code is not AMDS")
    big = k >= 2
    red = n - k > q
    out: list[tuple[str, bool | None]] = []
    out.append(("n <= k + 2q", n <= k + 2 * q if big else None))
    out.append(("k <= 2q", k <= 2 * q if big and red else None))
    if red:
        dd = min_distance(dual(code), budget=budget)
        out.append(("dual is AMDS", dd is not None and singleton_defect(n, n - k, dd) == 1))
    else:
        out.append(("dual is AMDS", None))
    out.append(("spanned by weights n-k and n-k+1",
                _span_rank(code, [n - k, n - k + 1], budget) == k if big else None))
    out.append(("spanned by minimum weight words",
                _span_rank(code, [n - k], budget) == k if big and red else None))
    return out


def _incidence(supports: list[tuple[int, ...]], n: int) -> np.ndarray:
    M = np.zeros((len(supports), n), dtype=np.int64)
    for i, S in enumerate(supports):
        M[i, list(S)] = 1
    return M


def min_weight_pairing(code: LinearCode, dual_code: LinearCode, budget: int | None = None,
                       workers: int = 1) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Map each minimum-weight support of an NMDS code to the disjoint dual one.

    Raises TheoremContradiction unless every support has exactly one
    disjoint partner and the map is a bijection.
    """
    n, k = code.n, code.k
    S = [s for s, _ in low_weight_supports(code, n - k, budget, workers)]
    T = [t for t, _ in low_weight_supports(dual_code, k, budget, workers)]
    if len(S) != len(T):
        raise TheoremContradiction(f"{len(S)} minimum-weight classes vs {len(T)} in the dual")
    if not S:
        return {}
    disjoint = (_incidence(S, n) @ _incidence(T, n).T) == 0
    per_row = disjoint.sum(axis=1)
    per_col = disjoint.sum(axis=0)
    if np.any(per_row != 1) or np.any(per_col != 1):
        raise TheoremContradiction("minimum-weight supports do not pair off uniquely")
    partner = disjoint.argmax(axis=1)
    return {S[i]: T[int(partner[i])] for i in range(len(S))}


@dataclass(frozen=True)
class DesignPrediction:
    side: str  # the dual of the code the report describes
    weight: int
    t: int
    s: int


def dldesign_predict(report: NmdsReport, wd: WeightDistribution,
                     wd_dual: WeightDistribution) -> list[DesignPrediction]:
    """Each gap A_{n-k+s} = 0 predicts a (k-s)-design on the weight-k dual words."""
    if not report.is_nmds:
        raise ValueError("design prediction needs an NMDS code")
    n, k = report.n, report.k
    out = []
    for s in range(1, k):
        if wd[n - k + s] == 0 and wd_dual[k]:
            out.append(DesignPrediction("dual", k, k - s, s))
    return out


# Known extremal and almost-extremal codes, kept as fixtures only.  Each entry
# names a code whose dual is the extremal (resp. almost-extremal) NMDS code.
EXTREMAL_DUALS = (
    {"name": "Hamming", "q": 2, "n": 7, "k": 3, "d": 4},
    {"name": "extended Hamming", "q": 2, "n": 8, "k": 4, "d": 4},
    {"name": "punctured Golay", "q": 3, "n": 10, "k": 6, "d": 4},
    {"name": "Golay", "q": 3, "n": 11, "k": 6, "d": 5},
    {"name": "extended Golay", "q": 3, "n": 12, "k": 6, "d": 6},
)
ALMOST_EXTREMAL_DUALS = (
    {"name": "punctured Hamming", "q": 2, "n": 6, "k": 3, "d": 3},
    {"name": "simplex", "q": 2, "n": 7, "k": 3, "d": 4},
    {"name": "shortened punctured Golay", "q": 3, "n": 9, "k": 5, "d": 4},
    {"name": "shortened Golay", "q": 3, "n": 10, "k": 5, "d": 5},
)
