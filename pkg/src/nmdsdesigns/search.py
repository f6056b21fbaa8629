"""Column-subset searches: minimum distance and low-weight codeword supports.

A codeword of weight exactly ``w`` supported on a column set ``S`` is a
kernel vector of ``H[:, S]`` with no zero entry.  Equivalently it is ``m G``
for a message ``m`` killing ``G[:, complement(S)]``.  Each subset is checked
through whichever of the two matrices is smaller; both routes give the same
answer, which the tests check.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from . import linalg
from .codes import LinearCode
from .parallel import run_tasks
from .weights import BudgetExceeded, default_budget

CHUNK = 8192


def _combo_chunks(n: int, w: int, prefix: tuple[int, ...] = ()):
    """Lexicographic w-subsets of range(n) as (m, w) arrays, in chunks."""
    start = prefix[-1] + 1 if prefix else 0
    rest = w - len(prefix)
    it = itertools.combinations(range(start, n), rest)
    pre = np.array(prefix, dtype=np.int64)
    while True:
        block = list(itertools.islice(it, CHUNK))
        if not block:
            return
        arr = np.array(block, dtype=np.int64).reshape(len(block), rest)
        if prefix:
            arr = np.hstack([np.broadcast_to(pre, (arr.shape[0], pre.size)), arr])
        yield arr


def _complements(subsets: np.ndarray, n: int) -> np.ndarray:
    mask = np.ones((subsets.shape[0], n), dtype=bool)
    mask[np.arange(subsets.shape[0])[:, None], subsets] = False
    return np.nonzero(mask)[1].reshape(subsets.shape[0], n - subsets.shape[1])


def _use_parity_route(code: LinearCode, w: int) -> bool:
    r, k, n = code.r, code.k, code.n
    return r * w * min(r, w) <= k * (n - w) * min(k, n - w)


def _dependent(code: LinearCode, subsets: np.ndarray, route: str | None = None) -> np.ndarray:
    """Boolean mask: does some nonzero codeword vanish outside each subset?"""
    F, n, w = code.field, code.n, subsets.shape[1]
    if route is None:
        route = "parity" if _use_parity_route(code, w) else "generator"
    if route == "parity":
        if code.r == 0:
            return np.ones(subsets.shape[0], dtype=bool)
        mats = code.parity[:, subsets].transpose(1, 0, 2)
        return linalg.batch_rank(F, mats) < w
    if code.k == 0:
        return np.zeros(subsets.shape[0], dtype=bool)
    comp = _complements(subsets, n)
    if comp.shape[1] == 0:
        return np.ones(subsets.shape[0], dtype=bool)
    mats = code.gen[:, comp].transpose(1, 2, 0)
    return linalg.batch_rank(F, mats) < code.k


def has_dependency(code: LinearCode, w: int, route: str | None = None) -> bool:
    """True if some w columns of the parity-check matrix are linearly dependent."""
    if w > code.n:
        return False
    for chunk in _combo_chunks(code.n, w):
        if _dependent(code, chunk, route).any():
            return True
    return False


def min_distance(code: LinearCode, w_max: int | None = None, budget: int | None = None,
                 route: str | None = None) -> int | None:
    """Smallest w <= w_max admitting a codeword of weight w; None if there is none.

    Dependency among w parity columns is monotone in w and the first w with a
    dependency has every coefficient nonzero, so the search can walk up from 1
    (short redundancy) or down from min(w_max, n - k + 1) (long redundancy).
    """
    n = code.n
    w_max = n if w_max is None else min(w_max, n)
    budget = default_budget() if budget is None else budget
    if code.k == 0 or w_max < 1:
        return None

    def check(w: int) -> bool:
        if comb(n, w) > budget:
            raise BudgetExceeded(f"C({n},{w}) column subsets exceed the budget {budget}")
        return has_dependency(code, w, route)

    if 2 * code.r <= n:
        for w in range(1, w_max + 1):
            if check(w):
                return w
        return None
    top = min(w_max, code.r + 1)
    if not check(top):
        return None
    w = top
    while w > 1 and check(w - 1):
        w -= 1
    return w


def _canonical(F, vecs: np.ndarray) -> np.ndarray:
    first = vecs[np.arange(vecs.shape[0]), (vecs != 0).argmax(axis=1)]
    return F.vmul(vecs, F.vinv(first)[:, None])


def _kernel_words_scalar(code: LinearCode, support: tuple[int, ...]) -> list[np.ndarray]:
    """All canonical weight-|S| codewords on S when the kernel has dimension >= 2."""
    F = code.field
    S = list(support)
    N = linalg.null_space(F, code.parity[:, S], len(S)) if code.r else np.eye(len(S), dtype=np.int64)
    seen = set()
    out = []
    for coeffs in itertools.product(range(F.order), repeat=N.shape[0]):
        v = np.zeros(len(S), dtype=np.int64)
        for c, row in zip(coeffs, N):
            if c:
                v = F.vadd(v, F.vmul(c, row))
        if np.all(v != 0):
            v = linalg.scale_first_nonzero_to_one(F, v)
            key = tuple(v.tolist())
            if key not in seen:
                seen.add(key)
                word = np.zeros(code.n, dtype=np.int64)
                word[S] = v
                out.append(word)
    out.sort(key=lambda x: tuple(x.tolist()))
    return out


def _supports_chunk(code: LinearCode, w: int, prefix: tuple[int, ...], route: str | None):
    F, n = code.field, code.n
    route = route or ("parity" if _use_parity_route(code, w) else "generator")
    found = []
    for subsets in _combo_chunks(n, w, prefix):
        m = subsets.shape[0]
        if route == "parity":
            if code.r == 0:
                dims = np.full(m, w)
                vecs = np.ones((m, w), dtype=np.int64)      # a basis vector when w = 1
            else:
                mats = code.parity[:, subsets].transpose(1, 0, 2)
                dims, vecs = linalg.batch_kernel_vector(F, mats)
            words = np.zeros((m, n), dtype=np.int64)
            words[np.arange(m)[:, None], subsets] = vecs
        else:
            comp = _complements(subsets, n)
            if comp.shape[1] == 0:
                dims = np.full(m, code.k)
                msgs = np.zeros((m, code.k), dtype=np.int64)
                msgs[:, 0] = 1                              # a basis vector when k = 1
            else:
                # messages m with m G[:, comp] = 0
                mats = code.gen[:, comp].transpose(1, 2, 0)
                dims, msgs = linalg.batch_kernel_vector(F, mats)
            words = np.zeros((m, n), dtype=np.int64)
            for i in range(code.k):
                words = F.vadd(words, F.vmul(msgs[:, i:i + 1], code.gen[i][None, :]))
        one = dims == 1
        full = one & np.all(np.take_along_axis(words, subsets, axis=1) != 0, axis=1)
        idx = np.nonzero(full)[0]
        if idx.size:
            canon = _canonical(F, words[idx])
            for j, i in enumerate(idx):
                found.append((tuple(subsets[i].tolist()), canon[j]))
        for i in np.nonzero(dims >= 2)[0]:
            S = tuple(subsets[i].tolist())
            for word in _kernel_words_scalar(code, S):
                found.append((S, word))
    found.sort(key=lambda sw: (sw[0], tuple(sw[1].tolist())))
    return found


def low_weight_supports(code: LinearCode, w: int, budget: int | None = None, workers: int = 1,
                        route: str | None = None) -> list[tuple[tuple[int, ...], np.ndarray]]:
    """Every support of a weight-w codeword, with its canonical codeword.

    The canonical codeword has its first nonzero coordinate equal to 1.  A
    support carrying several non-proportional codewords appears once per
    scalar class.  Output is in lexicographic order of supports.
    """
    budget = default_budget() if budget is None else budget
    n = code.n
    if w < 1 or w > n:
        return []
    if comb(n, w) > budget:
        raise BudgetExceeded(f"C({n},{w}) column subsets exceed the budget {budget}")
    if w == 1:
        prefixes = [()]
    else:
        prefixes = [(a,) for a in range(n - w + 1)]
    tasks = [(code, w, p, route) for p in prefixes]
    parts = run_tasks(_supports_chunk, tasks, workers)
    out = [item for part in parts for item in part]
    return out
