"""Exact weight distributions: message enumeration and the MacWilliams transform."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from .codes import LinearCode
from .parallel import run_tasks

DEFAULT_BUDGET = 1 << 26
# rows in the precomputed span of the trailing generator rows
TAIL_LIMIT = 1 << 18


class BudgetExceeded(RuntimeError):
    pass


def default_budget() -> int:
    env = os.environ.get("NMDS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> int | None:
        for i, c in enumerate(self.counts[1:], start=1):
            if c:
                return i
        return None

    def nonzero_weights(self) -> list[int]:
        return [i for i, c in enumerate(self.counts) if c and i > 0]

    def as_dict(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}

    def to_json(self) -> list[int]:
        return list(self.counts)


def _span(F, rows: np.ndarray, n: int) -> np.ndarray:
    words = np.zeros((1, n), dtype=np.int64)
    for row in rows[::-1]:
        scaled = np.stack([F.vmul(a, row) for a in range(F.order)])
        words = F.vadd(scaled[:, None, :], words[None, :, :]).reshape(-1, n)
    return words


def _enum_chunk(F, head: np.ndarray, tail: np.ndarray, n: int, start: int, stop: int) -> np.ndarray:
    q = F.order
    tail_words = _span(F, tail, n)
    counts = np.zeros(n + 1, dtype=np.int64)
    nh = head.shape[0]
    for idx in range(start, stop):
        vec = np.zeros(n, dtype=np.int64)
        x = idx
        for j in range(nh):
            a = x % q
            x //= q
            if a:
                vec = F.vadd(vec, F.vmul(a, head[j]))
        # weight(t + h) counts coordinates where t != -h
        wts = (tail_words != F.vneg(vec)[None, :]).sum(axis=1)
        counts += np.bincount(wts, minlength=n + 1)
    return counts


def weight_distribution_enum(code: LinearCode, budget: int | None = None, workers: int = 1) -> WeightDistribution:
    """Count weights over all q^k codewords."""
    budget = default_budget() if budget is None else budget
    q, k, n = code.q, code.k, code.n
    if q ** k > budget:
        raise BudgetExceeded(f"{q}^{k} codewords exceed the enumeration budget {budget}")
    if k == 0:
        return WeightDistribution([1] + [0] * n)
    t = 1
    while t < k and q ** (t + 1) <= TAIL_LIMIT:
        t += 1
    head, tail = code.gen[: k - t], code.gen[k - t:]
    n_heads = q ** (k - t)
    parts = max(1, min(n_heads, workers * 4 if workers > 1 else 1))
    bounds = [n_heads * i // parts for i in range(parts + 1)]
    tasks = [(code.field, head, tail, n, bounds[i], bounds[i + 1]) for i in range(parts)]
    results = run_tasks(_enum_chunk, tasks, workers)
    counts = np.sum(results, axis=0)
    wd = WeightDistribution(counts.tolist())
    assert wd.total == q ** k
    return wd


def weight_distribution_bruteforce(code: LinearCode) -> WeightDistribution:
    """Reference count: encode each message with scalar arithmetic."""
    F = code.field
    counts = [0] * (code.n + 1)
    for msg in itertools.product(range(F.order), repeat=code.k):
        word = [0] * code.n
        for a, row in zip(msg, code.gen):
            if a:
                word = [F.add(w, F.mul(a, int(g))) for w, g in zip(word, row)]
        counts[sum(1 for w in word if w)] += 1
    return WeightDistribution(counts)


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum((-1) ** h * (q - 1) ** (j - h) * comb(i, h) * comb(n - i, j - h) for h in range(j + 1))


def macwilliams(wd: WeightDistribution | Sequence[int], n: int, k: int, q: int) -> WeightDistribution:
    """Dual weight distribution: A'_j = q^-k sum_i A_i K_j(i)."""
    A = list(wd.counts if isinstance(wd, WeightDistribution) else wd)
    if len(A) != n + 1:
        raise ValueError("distribution length must be n + 1")
    size = q ** k
    if sum(A) != size:
        raise ValueError(f"distribution sums to {sum(A)}, expected {size}")
    out = []
    for j in range(n + 1):
        s = sum(A[i] * krawtchouk(j, i, n, q) for i in range(n + 1) if A[i])
        if s % size:
            raise ValueError(f"non-integral dual count at weight {j}")
        out.append(s // size)
    if any(c < 0 for c in out):
        raise ValueError("negative dual count")
    return WeightDistribution(out)


def weight_distribution(code: LinearCode, budget: int | None = None, workers: int = 1) -> tuple[WeightDistribution, str]:
    """Enumerate the smaller of C and its dual; returns (distribution, method)."""
    from .codes import dual
    budget = default_budget() if budget is None else budget
    q, k, r = code.q, code.k, code.r
    if q ** k <= budget and k <= r:
        return weight_distribution_enum(code, budget, workers), "enumeration"
    if q ** r <= budget:
        wd_dual = weight_distribution_enum(dual(code), budget, workers)
        return macwilliams(wd_dual, code.n, r, q), "macwilliams"
    if q ** k <= budget:
        return weight_distribution_enum(code, budget, workers), "enumeration"
    raise BudgetExceeded(f"both {q}^{k} and {q}^{r} exceed the budget {budget}")
