"""Univariate polynomials over GF(q), cyclotomic cosets and x^n - 1."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .field import (FieldCtx, FieldError, primitive_root_of_unity, restriction,
                    splitting_field)


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class Poly:
    """Dense polynomial; ``coeffs`` ascending with no trailing zero."""

    field: FieldCtx = dc_field(compare=False)
    coeffs: tuple[int, ...]

    def __init__(self, field: FieldCtx, coeffs: Sequence[int] = ()):
        cs = [int(c) for c in coeffs]
        for c in cs:
            if not 0 <= c < field.order:
                raise PolyError(f"coefficient {c} not in {field!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    # identity also depends on the field object
    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and other.field is self.field and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    @classmethod
    def x_power(cls, F: FieldCtx, n: int) -> Poly:
        return cls(F, [0] * n + [1])

    @classmethod
    def constant(cls, F: FieldCtx, c: int) -> Poly:
        return cls(F, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)} over GF({self.field.order}))"

    def _check(self, other: Poly) -> None:
        if other.field is not self.field:
            raise PolyError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> Poly:
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def scale(self, c: int) -> Poly:
        return Poly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.lead)
        quot = [0] * max(0, len(rem) - db)
        while len(rem) - 1 >= db and rem:
            c = F.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - db
            quot[shift] = c
            for i, bi in enumerate(other.coeffs):
                if bi:
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bi))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.lead))

    def gcd(self, other: Poly) -> Poly:
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: Poly) -> Poly:
        if self.is_zero or other.is_zero:
            return Poly(self.field)
        return ((self * other) // self.gcd(other)).monic()

    def __call__(self, x: int) -> int:
        return self.eval(x)

    def eval(self, x: int, ext: FieldCtx | None = None, embed_map: Sequence[int] | None = None) -> int:
        """Horner evaluation, optionally at a point of an extension field."""
        F = ext or self.field
        cs = self.coeffs if embed_map is None else [embed_map[c] for c in self.coeffs]
        acc = 0
        for c in reversed(cs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> Poly:
        F = self.field
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            acc = 0
            for _ in range(i % F.p):
                acc = F.add(acc, c)
            out.append(acc)
        return Poly(F, out)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, F: FieldCtx, data: Sequence[int]) -> Poly:
        return cls(F, data)


def xn_minus_1(F: FieldCtx, n: int) -> Poly:
    return Poly(F, [F.neg(1)] + [0] * (n - 1) + [1])


# ---------------------------------------------------------------------------
# cyclotomic cosets

@dataclass(frozen=True)
class CosetTable:
    n: int
    q: int
    cosets: dict[int, tuple[int, ...]]
    leaders: tuple[int, ...]

    def coset_of(self, s: int) -> tuple[int, ...]:
        s %= self.n
        for leader in self.leaders:
            if s in self.cosets[leader]:
                return self.cosets[leader]
        raise KeyError(s)

    def size(self, s: int) -> int:
        return len(self.coset_of(s))


def coset(s: int, n: int, q: int) -> tuple[int, ...]:
    """The q-cyclotomic coset of s modulo n, sorted."""
    s %= n
    members = [s]
    x = s * q % n
    while x != s:
        members.append(x)
        x = x * q % n
    return tuple(sorted(members))


def cyclotomic_cosets(n: int, q: int) -> CosetTable:
    if n < 1:
        raise PolyError("n must be positive")
    if math.gcd(n, q) != 1:
        raise PolyError(f"gcd({n}, {q}) != 1")
    seen: set[int] = set()
    cosets: dict[int, tuple[int, ...]] = {}
    for s in range(n):
        if s in seen:
            continue
        c = coset(s, n, q)
        cosets[s] = c
        seen.update(c)
    return CosetTable(n, q, cosets, tuple(sorted(cosets)))


# ---------------------------------------------------------------------------
# minimal polynomials

def minimal_polynomial(ext: FieldCtx, base: FieldCtx, beta: int, coset_members: Sequence[int]) -> Poly:
    """prod_{i in coset} (x - beta^i), projected onto ``base``.

    Raises PolyError if a coefficient falls outside ``base``; that only
    happens when the coset is not closed under the Frobenius of ``base``.
    """
    prod = [1]
    for i in coset_members:
        root = ext.pow(beta, i)
        nxt = [0] * (len(prod) + 1)
        for j, c in enumerate(prod):
            nxt[j + 1] = ext.add(nxt[j + 1], c)
            nxt[j] = ext.sub(nxt[j], ext.mul(c, root))
        prod = nxt
    back = restriction(base, ext)
    out = []
    for c in prod:
        if c not in back:
            raise PolyError(f"coefficient {c} of the minimal polynomial is not in GF({base.order})")
        out.append(back[c])
    return Poly(base, out)


def nth_root_context(base: FieldCtx, n: int) -> tuple[FieldCtx, int]:
    """(splitting field, beta) with beta = alpha^((Q-1)/n) a primitive n-th root."""
    try:
        ext = splitting_field(base, n)
    except FieldError as exc:
        raise PolyError(str(exc)) from exc
    return ext, primitive_root_of_unity(ext, n)


def factor_xn_minus_1(base: FieldCtx, n: int) -> list[Poly]:
    """Canonical factorisation: one minimal polynomial per coset leader."""
    table = cyclotomic_cosets(n, base.order)
    ext, beta = nth_root_context(base, n)
    return [minimal_polynomial(ext, base, beta, table.cosets[s]) for s in table.leaders]


def poly_product(F: FieldCtx, polys: Sequence[Poly]) -> Poly:
    acc = Poly.constant(F, 1)
    for f in polys:
        acc = acc * f
    return acc
