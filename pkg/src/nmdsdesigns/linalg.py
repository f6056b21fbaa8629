"""Dense and batched linear algebra over a :class:`FieldCtx` on int64 arrays."""

from __future__ import annotations

import numpy as np

from .field import FieldCtx


def as_matrix(M, ncols: int | None = None) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, ncols or 0), dtype=np.int64)
    return A


def rref(F: FieldCtx, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns; zero rows dropped."""
    A = as_matrix(M).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.vmul(A[r], F.inv(int(A[r, c])))
        col = A[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if others.size:
            A[others] = F.vsub(A[others], F.vmul(col[others, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: FieldCtx, M) -> int:
    return len(rref(F, M)[1])


def null_space(F: FieldCtx, M, ncols: int | None = None) -> np.ndarray:
    """Rows spanning {x : M x^T = 0}."""
    A = as_matrix(M, ncols)
    n = A.shape[1] if A.size or ncols is None else ncols
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, A)
    free = [c for c in range(n) if c not in piv]
    N = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        N[j, f] = 1
        for i, pc in enumerate(piv):
            N[j, pc] = F.neg(int(R[i, f]))
    return N


def matmul(F: FieldCtx, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, i:i + 1], B[i:i + 1, :]))
    return out


def vecmat(F: FieldCtx, v, M) -> np.ndarray:
    return matmul(F, np.asarray(v, dtype=np.int64).reshape(1, -1), M)[0]


def scale_first_nonzero_to_one(F: FieldCtx, v: np.ndarray) -> np.ndarray:
    nz = np.nonzero(v)[0]
    if nz.size == 0:
        return v
    return F.vmul(v, F.inv(int(v[nz[0]])))


# ---------------------------------------------------------------------------
# batched elimination: many small matrices at once

def batch_rref(F: FieldCtx, M: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Row-reduce every matrix in a (B, r, c) stack.

    Returns (reduced stack, ranks, pivot columns) where pivot columns is a
    (B, min(r, c)) array padded with -1.
    """
    M = np.array(M, dtype=np.int64, copy=True)
    nb, r, c = M.shape
    ranks = np.zeros(nb, dtype=np.int64)
    pivcols = np.full((nb, min(r, c)), -1, dtype=np.int64)
    row_ids = np.arange(r)
    for j in range(c):
        cand = (M[:, :, j] != 0) & (row_ids[None, :] >= ranks[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = cand[b].argmax(axis=1)
        rk = ranks[b]
        top = M[b, piv, j:].copy()
        M[b, piv, j:] = M[b, rk, j:]
        top = F.vmul(top, F.vinv(top[:, 0])[:, None])
        M[b, rk, j:] = top
        factors = M[b, :, j].copy()
        factors[np.arange(b.size), rk] = 0
        sub = M[b, :, j:]
        M[b, :, j:] = F.vsub(sub, F.vmul(factors[:, :, None], top[:, None, :]))
        pivcols[b, rk] = j
        ranks[b] += 1
    return M, ranks, pivcols


def batch_rank(F: FieldCtx, M: np.ndarray) -> np.ndarray:
    return batch_rref(F, M)[1]


def batch_kernel_vector(F: FieldCtx, M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Kernel dimension of each matrix, and a kernel vector where it is exactly 1.

    Rows of the returned (B, c) vector array are zero where the kernel
    dimension differs from 1.
    """
    R, ranks, pivcols = batch_rref(F, M)
    nb, r, c = R.shape
    dims = c - ranks
    vecs = np.zeros((nb, c), dtype=np.int64)
    sel = np.nonzero(dims == 1)[0]
    if sel.size == 0:
        return dims, vecs
    is_piv = np.zeros((sel.size, c), dtype=bool)
    pc = pivcols[sel]
    for i in range(pc.shape[1]):
        ok = pc[:, i] >= 0
        is_piv[np.nonzero(ok)[0], pc[ok, i]] = True
    free = (~is_piv).argmax(axis=1)
    vecs[sel, free] = 1
    for i in range(c - 1):
        if i >= pc.shape[1]:
            break
        ok = pc[:, i] >= 0
        s = sel[ok]
        vecs[s, pc[ok, i]] = F.vneg(R[s, i, free[ok]])
    return dims, vecs
