"""Linear and cyclic codes over GF(q): BCH codes, duals, extension, lifting,
subfield subcodes and trace codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .field import (FieldCtx, embedding, extension, restriction, trace_rel,
                    trace_to, unit_roots)
from .poly import (Poly, cyclotomic_cosets, minimal_polynomial, nth_root_context,
                   xn_minus_1)


class CodeError(ValueError):
    pass


class LinearCode:
    """A linear [n, k] code over ``field``.

    ``gen`` is kept in reduced row-echelon form, so two codes are equal
    exactly when their fields, lengths and ``gen`` arrays agree.
    """

    def __init__(self, field: FieldCtx, generator, n: int | None = None,
                 parity=None, gen_poly: Poly | None = None, label: str = ""):
        G = linalg.as_matrix(generator, n)
        if n is None:
            n = G.shape[1]
        if G.shape[1] != n:
            raise CodeError("generator matrix width differs from n")
        if G.size and (G.min() < 0 or G.max() >= field.order):
            raise CodeError("generator entries outside the field")
        R, _ = linalg.rref(field, G) if G.shape[0] else (np.zeros((0, n), dtype=np.int64), [])
        self.field = field
        self.n = n
        self.gen = R
        self.k = R.shape[0]
        self.gen_poly = gen_poly
        self.label = label
        if parity is None:
            H = linalg.null_space(field, R, n) if self.k else np.eye(n, dtype=np.int64)
        else:
            H = linalg.as_matrix(parity, n)
        self.parity = H
        h_rank = linalg.rank(field, H) if H.shape[0] else 0
        if h_rank != n - self.k:
            raise CodeError("parity-check matrix has the wrong rank")
        if self.k and H.shape[0] and np.any(linalg.matmul(field, R, H.T)):
            raise CodeError("G H^T != 0")

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def r(self) -> int:
        return self.n - self.k

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over GF({self.q}){', ' + self.label if self.label else ''})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode) and other.field is self.field
                and other.n == self.n and np.array_equal(other.gen, self.gen))

    __hash__ = None

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64).reshape(1, -1)
        if w.shape[1] != self.n:
            return False
        if self.parity.shape[0] == 0:
            return True
        return not np.any(linalg.matmul(self.field, w, self.parity.T))

    def encode(self, message) -> np.ndarray:
        return linalg.vecmat(self.field, message, self.gen)

    def codewords(self) -> np.ndarray:
        """All q^k codewords (small codes only), messages in lexicographic order."""
        F = self.field
        words = np.zeros((1, self.n), dtype=np.int64)
        for row in self.gen[::-1]:
            scaled = np.stack([F.vmul(a, row) for a in range(F.order)])
            words = F.vadd(scaled[:, None, :], words[None, :, :]).reshape(-1, self.n)
        return words

    def cyclic_generator_matrix(self) -> np.ndarray:
        """Rows x^i g(x), i < k, when the code is cyclic."""
        if self.gen_poly is None:
            raise CodeError("not a cyclic code")
        g = list(self.gen_poly.coeffs)
        M = np.zeros((self.k, self.n), dtype=np.int64)
        for i in range(self.k):
            M[i, i:i + len(g)] = g
        return M

    def describe(self) -> dict:
        d = {"n": self.n, "k": self.k, "q": self.q, "label": self.label}
        if self.gen_poly is not None:
            d["generator_polynomial"] = self.gen_poly.to_json()
        return d


# ---------------------------------------------------------------------------
# cyclic codes

def from_generator_poly(g: Poly, n: int, label: str = "") -> LinearCode:
    F = g.field
    if g.is_zero:
        raise CodeError("zero generator polynomial")
    g = g.monic()
    h, rem = divmod(xn_minus_1(F, n), g)
    if not rem.is_zero:
        raise CodeError("g(x) does not divide x^n - 1")
    k = n - g.degree
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i:i + g.degree + 1] = g.coeffs
    # parity rows: shifts of the reciprocal of h
    hr = list(reversed(h.coeffs))
    H = np.zeros((n - k, n), dtype=np.int64)
    for i in range(n - k):
        H[i, i:i + len(hr)] = hr
    return LinearCode(F, G, n=n, parity=H if n - k else None, gen_poly=g, label=label)


@dataclass(frozen=True)
class BchSpec:
    q: int
    n: int
    delta: int
    h: int = 1

    def label(self, field_name: str | None = None) -> str:
        qs = field_name or str(self.q)
        return f"bch:q={qs},n={self.n},delta={self.delta},h={self.h}"


def bch_generator_poly(F: FieldCtx, n: int, delta: int, h: int = 1,
                       root: tuple[FieldCtx, int] | None = None) -> Poly:
    """lcm of the minimal polynomials of beta^h, ..., beta^(h+delta-2).

    ``root`` = (field, beta) overrides the default primitive n-th root; codes
    over different base fields only compare literally when they share beta.
    """
    if not 2 <= delta <= n:
        raise CodeError(f"designed distance {delta} outside [2, {n}]")
    table = cyclotomic_cosets(n, F.order)
    ext, beta = root if root is not None else nth_root_context(F, n)
    if root is not None and ext.order_of(beta) != n:
        raise CodeError(f"root has order {ext.order_of(beta)}, expected {n}")
    g = Poly.constant(F, 1)
    done = set()
    for j in range(h, h + delta - 1):
        members = table.coset_of(j)
        if members in done:
            continue
        done.add(members)
        g = g.lcm(minimal_polynomial(ext, F, beta, members))
    return g


def bch(F: FieldCtx, n: int, delta: int, h: int = 1,
        root: tuple[FieldCtx, int] | None = None) -> LinearCode:
    spec = BchSpec(F.order, n, delta, h)
    g = bch_generator_poly(F, n, delta, h, root)
    return from_generator_poly(g, n, label=spec.label(F.name))


# ---------------------------------------------------------------------------
# derived codes

def dual(code: LinearCode) -> LinearCode:
    label = f"dual:{code.label}" if code.label else ""
    if code.k == code.n:
        return LinearCode(code.field, np.zeros((0, code.n), dtype=np.int64), n=code.n, label=label)
    return LinearCode(code.field, code.parity, n=code.n, parity=code.gen if code.k else None, label=label)


def extend(code: LinearCode) -> LinearCode:
    """Append c_n = -sum(c_i) to every codeword."""
    F = code.field
    col = np.array([F.neg(F.sum(int(x) for x in row)) for row in code.gen], dtype=np.int64)
    G = np.hstack([code.gen, col.reshape(-1, 1)]) if code.k else np.zeros((0, code.n + 1), dtype=np.int64)
    return LinearCode(F, G, n=code.n + 1, label=f"extend:{code.label}" if code.label else "")


def lift(code: LinearCode, ext: FieldCtx) -> LinearCode:
    """The code spanned over ``ext`` by the same generator matrix."""
    emb = np.array(embedding(code.field, ext), dtype=np.int64)
    label = f"lift:{ext.name}:{code.label}" if code.label else ""
    return LinearCode(ext, emb[code.gen], n=code.n, label=label)


def _subfield_coordinates(code_field: FieldCtx, sub: FieldCtx) -> np.ndarray:
    """coords[x] = coordinates of x in the sub-basis 1, a, ..., a^(h-1)."""
    F = code_field
    h = F.abs_degree // sub.abs_degree
    emb = embedding(sub, F)
    powers = [F.pow(F.alpha, i) for i in range(h)]
    coords = np.zeros((F.order, h), dtype=np.int64)
    for digits in itertools.product(range(sub.order), repeat=h):
        x = 0
        for d, pw in zip(digits, powers):
            x = F.add(x, F.mul(emb[d], pw))
        coords[x] = digits
    return coords


def subfield_subcode(code: LinearCode, sub: FieldCtx) -> LinearCode:
    """C ∩ GF(r)^n, computed by expanding each parity check in a GF(r)-basis."""
    F = code.field
    if F.abs_degree % sub.abs_degree or F.p != sub.p:
        raise CodeError(f"GF({sub.order}) is not a subfield of GF({F.order})")
    label = f"subfield:{sub.order}:{code.label}" if code.label else ""
    h = F.abs_degree // sub.abs_degree
    n = code.n
    if code.r == 0:
        return LinearCode(sub, np.eye(n, dtype=np.int64), n=n, label=label)
    coords = _subfield_coordinates(F, sub)
    # c in GF(r)^n satisfies sum_j c_j H_ij = 0 iff each basis coordinate vanishes
    rows = np.concatenate([coords[code.parity][:, :, t] for t in range(h)], axis=0)
    basis = linalg.null_space(sub, rows, n)
    out = LinearCode(sub, basis, n=n, label=label)
    if not code.k >= out.k >= n - h * (n - code.k):
        raise CodeError(f"subfield subcode dimension {out.k} violates the bound")
    return out


def trace_code(code: LinearCode, sub: FieldCtx) -> LinearCode:
    """Coordinate-wise Tr_{q/r} of the code, as a code over ``sub``."""
    F = code.field
    h = F.abs_degree // sub.abs_degree
    table = np.array([trace_to(F, sub, x) for x in range(F.order)], dtype=np.int64)
    rows = []
    for i in range(h):
        scaled = F.vmul(F.pow(F.alpha, i), code.gen)
        rows.append(table[scaled])
    G = np.concatenate(rows, axis=0) if code.k else np.zeros((0, code.n), dtype=np.int64)
    return LinearCode(sub, G, n=code.n, label=f"trace:{sub.order}:{code.label}" if code.label else "")


# ---------------------------------------------------------------------------
# the q+1 family: explicit parity rows over GF(q^2) and the trace form of the dual

def bch_parity_rows(F: FieldCtx) -> tuple[FieldCtx, np.ndarray]:
    """(GF(q^2), H) with H = [g^i; g^(2i)], i = 0..q, g = alpha^-(q-1)."""
    ext = extension(F, 2)
    U = unit_roots(ext)
    H = np.array([U, [ext.mul(u, u) for u in U]], dtype=np.int64)
    return ext, H


def satisfies_parity_rows(code: LinearCode, ext: FieldCtx, H: np.ndarray) -> bool:
    """Every generator row of ``code`` annihilates H, evaluated in ``ext``."""
    emb = np.array(embedding(code.field, ext), dtype=np.int64)
    if code.k == 0:
        return True
    return not np.any(linalg.matmul(ext, emb[code.gen], H.T))


def trace_dual_word(F: FieldCtx, a: int, b: int) -> np.ndarray:
    """c_(a,b) = (Tr_{q^2/q}(a g^i + b g^(2i)))_{i=0..q} over F = GF(q)."""
    ext = extension(F, 2)
    U = unit_roots(ext)
    back = restriction(F, ext)
    return np.array([back[trace_rel(ext, ext.add(ext.mul(a, u), ext.mul(b, ext.mul(u, u))))]
                     for u in U], dtype=np.int64)


def trace_dual_code(F: FieldCtx) -> LinearCode:
    """Span over GF(q) of c_(a,b) with (a, b) over a GF(q)-basis of GF(q^2)^2."""
    ext = extension(F, 2)
    basis = [1, ext.alpha]
    rows = [trace_dual_word(F, a, 0) for a in basis] + [trace_dual_word(F, 0, b) for b in basis]
    return LinearCode(F, np.array(rows), label=f"trace-dual:q={F.name}")


# ---------------------------------------------------------------------------

def sphere_packing_check(n: int, k: int, d: int, q: int) -> dict:
    """Exact Hamming bound q^k * V(n, floor((d-1)/2)) <= q^n, plus the largest passing k."""
    from math import comb
    if d < 1:
        raise CodeError("d must be >= 1")
    e = (d - 1) // 2
    vol = sum(comb(n, i) * (q - 1) ** i for i in range(e + 1))
    k_max = 0
    while k_max + 1 <= n and q ** (k_max + 1) * vol <= q ** n:
        k_max += 1
    return {"holds": q ** k * vol <= q ** n, "k_max": k_max, "volume": vol,
            "perfect": q ** k * vol == q ** n}
