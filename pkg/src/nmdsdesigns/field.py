"""Finite fields GF(p^m) and towers of extensions over them.

Elements are plain ``int`` codes.  An element of an extension of degree ``m``
over a coefficient field ``B`` is the vector ``(c_0, ..., c_{m-1})`` of
``B``-elements, encoded as ``c_0 + c_1*|B| + ... + c_{m-1}*|B|^(m-1)``.
Elements of ``B`` therefore keep their code inside every extension built on
top of it, which makes the embedding of a tower's base field the identity.

Moduli and primitive elements are chosen by scanning in ascending code order,
so two builds of the same field are bit-identical.
"""

from __future__ import annotations

import functools
import math
import re
from typing import Sequence

import numpy as np

MAX_ORDER = 1 << 20
TABLE_LIMIT = 1 << 16
# dense q x q addition table only for small odd-characteristic fields
ADD_TABLE_LIMIT = 256


class FieldError(ValueError):
    pass


class FieldZeroDivisionError(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, m


class FieldCtx:
    """An explicit finite field.

    ``base`` is ``None`` for a prime field; otherwise the field is
    ``base[y] / (modulus)`` with ``modulus`` a monic irreducible polynomial
    over ``base`` (coefficients listed ascending, as base-field codes).
    """

    def __init__(self, p: int, base: FieldCtx | None, modulus: Sequence[int],
                 use_tables: bool = True):
        self.p = p
        self.base = base
        self.modulus = tuple(int(c) for c in modulus)
        self.degree = len(self.modulus) - 1
        if base is None:
            self.order = p
            self.abs_degree = 1
        else:
            self.order = base.order ** self.degree
            self.abs_degree = base.abs_degree * self.degree
        self._bq = p if base is None else base.order
        self.use_tables = use_tables and self.order <= TABLE_LIMIT
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._add: list[int] | None = None
        self._np_add = None
        self._neg = [self._neg_slow(x) for x in range(self.order)] if self.order <= TABLE_LIMIT else None
        self.alpha = self._find_primitive()
        if self.use_tables:
            self._build_tables()

    # ---------------------------------------------------------------- naming
    def __repr__(self) -> str:
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.order}) over {self.base!r} mod {list(self.modulus)}"

    @property
    def name(self) -> str:
        return f"{self.p}^{self.abs_degree}"

    def describe(self) -> dict:
        """Data needed to rebuild this field elsewhere."""
        d = {"order": self.order, "p": self.p, "degree": self.degree,
             "modulus": list(self.modulus), "alpha": self.alpha,
             "alpha_coeffs": list(self.coeffs(self.alpha))}
        if self.base is not None:
            d["base"] = self.base.describe()
        return d

    # ------------------------------------------------------- representation
    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.degree):
            out.append(x % self._bq)
            x //= self._bq
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) > self.degree:
            raise FieldError("too many coefficients")
        x = 0
        for c in reversed(cs):
            if not 0 <= c < self._bq:
                raise FieldError(f"coefficient {c} out of range")
            x = x * self._bq + c
        return x

    def elements(self) -> range:
        return range(self.order)

    def is_subfield_code(self, x: int) -> bool:
        """True if ``x`` lies in the (embedded) coefficient field."""
        return x < self._bq

    # ----------------------------------------------------- slow arithmetic
    # Table-free versions; used to build the tables and when tables are off.
    def _neg_slow(self, x: int) -> int:
        if self.base is None:
            return (-x) % self.p
        return self.from_coeffs([self.base.neg(c) for c in self.coeffs(x)])

    def _add_slow(self, x: int, y: int) -> int:
        if self.base is None:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        B = self.base
        out, mult = 0, 1
        while x or y:
            out += B.add(x % self._bq, y % self._bq) * mult
            x //= self._bq
            y //= self._bq
            mult *= self._bq
        return out

    def _mul_slow(self, x: int, y: int) -> int:
        if self.base is None:
            return (x * y) % self.p
        B = self.base
        a, b = self.coeffs(x), self.coeffs(y)
        m = self.degree
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = B.add(prod[i + j], B.mul(ai, bj))
        # reduce by the monic modulus, top degree down
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top]
            if c == 0:
                continue
            prod[top] = 0
            for i in range(m):
                if self.modulus[i]:
                    k = top - m + i
                    prod[k] = B.sub(prod[k], B.mul(c, self.modulus[i]))
        return self.from_coeffs(prod[:m])

    def _pow_slow(self, x: int, e: int) -> int:
        result, base = 1, x
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        factors = prime_factors(n)
        for x in range(1, self.order):
            if all(self._pow_slow(x, n // f) != 1 for f in factors):
                return x
        raise FieldError("no primitive element: modulus is not irreducible")

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, self.alpha)
        if x != 1:
            raise FieldError("alpha does not have full order")
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log
        q = self.order
        if self.p != 2 and self.base is not None and q <= ADD_TABLE_LIMIT:
            self._add = [self._add_slow(a, b) for a in range(q) for b in range(q)]
        self._np_exp = np.array(exp, dtype=np.int64)
        self._np_log = np.array(log, dtype=np.int64)
        self._np_neg = np.array(self._neg, dtype=np.int64)
        self._np_inv = np.array([0] + [exp[(n - log[a]) % n] for a in range(1, q)], dtype=np.int64)
        if self._add is not None:
            self._np_add = np.array(self._add, dtype=np.int64).reshape(q, q)
        else:
            self._np_add = None

    # ----------------------------------------------------- scalar arithmetic
    def add(self, x: int, y: int) -> int:
        if self._add is not None:
            return self._add[x * self.order + y]
        return self._add_slow(x, y)

    def neg(self, x: int) -> int:
        if self._neg is not None:
            return self._neg[x]
        return self._neg_slow(x)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[x] + self._log[y]]
        return self._mul_slow(x, y)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        result, base = 1, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldZeroDivisionError("inverse of zero")
        if self._exp is not None:
            n = self.order - 1
            return self._exp[(n - self._log[x]) % n]
        return self._pow_slow(x, self.order - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def log(self, x: int) -> int:
        """Discrete log to base ``alpha``."""
        if x == 0:
            raise FieldZeroDivisionError("log of zero")
        if self._log is not None:
            return self._log[x]
        y, i = 1, 0
        while y != x:
            y = self._mul_slow(y, self.alpha)
            i += 1
        return i

    def order_of(self, x: int) -> int:
        if x == 0:
            raise FieldZeroDivisionError("order of zero")
        n = self.order - 1
        for f in prime_factors(n):
            while n % f == 0 and self.pow(x, n // f) == 1:
                n //= f
        return n

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    # ----------------------------------------------------- vector arithmetic
    # numpy int64 arrays in, int64 arrays out; require tables.
    def _need_tables(self) -> None:
        if self._exp is None:
            raise FieldError(f"vector arithmetic needs tables; {self!r} built without them")

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.base is None:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._np_add is not None:
            return self._np_add[a, b]
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        mult = 1
        for _ in range(self.degree):
            out += self.base.vadd(a % self._bq, b % self._bq) * mult
            a, b = a // self._bq, b // self._bq
            mult *= self._bq
        return out

    def vneg(self, a) -> np.ndarray:
        self._need_tables()
        return self._np_neg[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self._np_exp[self._np_log[a] + self._np_log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def vinv(self, a) -> np.ndarray:
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldZeroDivisionError("inverse of zero")
        return self._np_inv[a]


# ---------------------------------------------------------------------------
# polynomial helpers over a coefficient field (ascending lists, no trailing 0)

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(F: FieldCtx, a: list[int], m: list[int]) -> list[int]:
    a = list(a)
    _ptrim(a)
    dm = len(m) - 1
    inv_lead = F.inv(m[-1])
    while len(a) - 1 >= dm:
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            if mi:
                a[shift + i] = F.sub(a[shift + i], F.mul(c, mi))
        _ptrim(a)
    return a


def _pmulmod(F: FieldCtx, a: list[int], b: list[int], m: list[int]) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = F.add(prod[i + j], F.mul(ai, bj))
    return _pmod(F, prod, m)


def _pgcd(F: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(F, a, b)
    return a


def _is_irreducible(F: FieldCtx, f: list[int]) -> bool:
    """Ben-Or test for a monic f over F."""
    m = len(f) - 1
    if m <= 1:
        return m == 1
    if f[0] == 0:
        return False
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        # xp <- xp^|F| mod f
        e, base, r = F.order, xp, [1]
        while e:
            if e & 1:
                r = _pmulmod(F, r, base, f)
            base = _pmulmod(F, base, base, f)
            e >>= 1
        xp = r
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = F.sub(diff[1], 1)
        g = _pgcd(F, f, _ptrim(diff))
        if len(g) > 1:
            return False
    return True


def first_irreducible(F: FieldCtx, m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m over F in ascending code order."""
    q = F.order
    for code in range(q ** m):
        cs = []
        c = code
        for _ in range(m):
            cs.append(c % q)
            c //= q
        f = cs + [1]
        if _is_irreducible(F, f):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {m} over {F!r}")


# ---------------------------------------------------------------------------
# constructors

@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> FieldCtx:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    return FieldCtx(p, None, (0, 1))


@functools.lru_cache(maxsize=None)
def extension(base: FieldCtx, m: int) -> FieldCtx:
    """Degree-m extension of ``base`` as a tower (elements are vectors over base)."""
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if m == 1:
        return base
    if base.order ** m > MAX_ORDER:
        raise FieldError(f"GF({base.order}^{m}) exceeds the supported size {MAX_ORDER}")
    return FieldCtx(base.p, base, first_irreducible(base, m))


def build_field(p: int, m: int = 1) -> FieldCtx:
    """GF(p^m) as an extension of the prime field."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if m < 1:
        raise FieldError("degree must be >= 1")
    if p ** m > MAX_ORDER:
        raise FieldError(f"{p}^{m} exceeds the supported size {MAX_ORDER}")
    return extension(prime_field(p), m)


def build_quadratic_extension(base: FieldCtx) -> FieldCtx:
    return extension(base, 2)


def parse_field(text: str) -> FieldCtx:
    """Parse ``"p^m"`` or a bare prime power such as ``"9"``."""
    text = text.strip()
    m = re.fullmatch(r"(\d+)\s*\^\s*(\d+)", text)
    if m:
        return build_field(int(m.group(1)), int(m.group(2)))
    if text.isdigit():
        p, e = prime_power(int(text))
        return build_field(p, e)
    raise FieldError(f"cannot parse field spec {text!r}")


def tower_chain(F: FieldCtx) -> list[FieldCtx]:
    chain = [F]
    while chain[-1].base is not None:
        chain.append(chain[-1].base)
    return chain


# ---------------------------------------------------------------------------
# Frobenius, traces, roots of unity, embeddings

def frobenius(F: FieldCtx, x: int, power: int | None = None) -> int:
    """x -> x^power; the default power is the order of the coefficient field."""
    if power is None:
        power = F.base.order if F.base is not None else F.p
    return F.pow(x, power)


def trace_rel(F: FieldCtx, x: int) -> int:
    """Relative trace from F to its coefficient field, returned as a base code."""
    if F.base is None:
        return x
    q = F.base.order
    acc, y = 0, x
    for _ in range(F.degree):
        acc = F.add(acc, y)
        y = F.pow(y, q)
    if not F.is_subfield_code(acc):
        raise FieldError("relative trace left the base field")
    return acc


def trace_abs(F: FieldCtx, x: int) -> int:
    """Absolute trace down to the prime field."""
    acc, y = 0, x
    for _ in range(F.abs_degree):
        acc = F.add(acc, y)
        y = F.pow(y, F.p)
    if acc >= F.p:
        raise FieldError("absolute trace left the prime field")
    return acc


def unit_roots(F: FieldCtx, n: int | None = None) -> list[int]:
    """[g^0, ..., g^(n-1)] with g = alpha^-((|F|-1)/n).

    With F = GF(q^2) and the default n = q + 1 this is U_{q+1} indexed by
    exponent of g = alpha^-(q-1).
    """
    if n is None:
        if F.base is None or F.degree != 2:
            raise FieldError("default n = q+1 needs a quadratic extension")
        n = F.base.order + 1
    if (F.order - 1) % n:
        raise FieldError(f"{n} does not divide |F*| = {F.order - 1}")
    g = F.pow(F.alpha, -((F.order - 1) // n))
    out, x = [], 1
    for _ in range(n):
        out.append(x)
        x = F.mul(x, g)
    return out


def primitive_root_of_unity(F: FieldCtx, n: int) -> int:
    """beta = alpha^((|F|-1)/n)."""
    if (F.order - 1) % n:
        raise FieldError(f"{n} does not divide |F*| = {F.order - 1}")
    return F.pow(F.alpha, (F.order - 1) // n)


def multiplicative_order_mod(q: int, n: int) -> int:
    """ord_n(q): least m >= 1 with q^m = 1 mod n."""
    if math.gcd(q, n) != 1:
        raise FieldError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    m, x = 1, q % n
    while x != 1:
        x = x * q % n
        m += 1
    return m


def splitting_field(F: FieldCtx, n: int) -> FieldCtx:
    """Smallest extension of F containing the n-th roots of unity."""
    return extension(F, multiplicative_order_mod(F.order, n))


@functools.lru_cache(maxsize=None)
def _embedding(sub: FieldCtx, ext: FieldCtx) -> tuple[int, ...]:
    if sub is ext:
        return tuple(range(sub.order))
    if sub.p != ext.p or ext.abs_degree % sub.abs_degree:
        raise FieldError(f"{sub!r} is not a subfield of {ext!r}")
    if any(sub is f for f in tower_chain(ext)):
        return tuple(range(sub.order))
    if sub.base is None:
        return tuple(range(sub.order))
    # general case: map the generator of sub/base to a root of its modulus
    inner = _embedding(sub.base, ext)
    mod = [inner[c] for c in sub.modulus]

    def ev(x: int) -> int:
        acc = 0
        for c in reversed(mod):
            acc = ext.add(ext.mul(acc, x), c)
        return acc

    for theta in range(ext.order):
        if ev(theta) == 0:
            break
    else:
        raise FieldError(f"{sub!r} does not embed in {ext!r}")
    powers = [1]
    for _ in range(sub.degree - 1):
        powers.append(ext.mul(powers[-1], theta))
    out = []
    for x in range(sub.order):
        acc = 0
        for c, t in zip(sub.coeffs(x), powers):
            acc = ext.add(acc, ext.mul(inner[c], t))
        out.append(acc)
    return tuple(out)


def embedding(sub: FieldCtx, ext: FieldCtx) -> tuple[int, ...]:
    """Table mapping each element code of ``sub`` to its image in ``ext``."""
    return _embedding(sub, ext)


def embed(sub: FieldCtx, ext: FieldCtx, x: int) -> int:
    return _embedding(sub, ext)[x]


def restriction(sub: FieldCtx, ext: FieldCtx) -> dict[int, int]:
    """Inverse of :func:`embedding` on its image."""
    return {y: x for x, y in enumerate(_embedding(sub, ext))}


def trace_to(ext: FieldCtx, sub: FieldCtx, x: int) -> int:
    """Tr_{ext/sub}(x), returned as a code of ``sub``."""
    h = ext.abs_degree // sub.abs_degree
    acc, y = 0, x
    for _ in range(h):
        acc = ext.add(acc, y)
        y = ext.pow(y, sub.order)
    back = restriction(sub, ext)
    if acc not in back:
        raise FieldError("trace left the subfield")
    return back[acc]
