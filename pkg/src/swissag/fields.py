"""Exact arithmetic in small finite fields GF(p^k).

Field elements are carried around as plain integers ("enc codes"): the
element with coefficient vector (c0, ..., c_{k-1}) over GF(p), ascending
degree, is encoded as sum(c_i * p**i).  Zero and one are therefore always
encoded as 0 and 1, and the encoding is a bijection onto [0, p^k).  All
per-element arithmetic goes through a :class:`FieldCtx`, which owns the
modulus and precomputed log/antilog tables (every field used here has at
most 2^12 elements, so table lookups make mul/inv O(1)).

A thin :class:`FieldElement` wrapper with operator overloading is provided
for readable high-level code and tests; hot paths (matrices, evaluation
vectors) use the integer codes directly through the ``vec_*`` methods,
which operate on numpy arrays of codes.

Default moduli per (p, k) are shipped in ``data/moduli.txt`` and are fixed
so that element encodings, enumeration orders and emitted matrices are
bit-for-bit reproducible across machines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

__all__ = [
    "FieldSpec",
    "FieldElement",
    "FieldCtx",
    "build_field",
    "default_modulus",
    "all_elements",
]


# ---------------------------------------------------------------------------
# GF(p) polynomial helpers (bootstrap arithmetic, lists of ints mod p)
# ---------------------------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); den need not be monic."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * inv_lead % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return _poly_trim(num[:dd])


def _is_irreducible(mod: list[int], p: int) -> bool:
    """Trial division against all monic polynomials of degree <= deg/2."""
    k = len(mod) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            den = list(tail) + [1]
            if not _poly_mod(mod, den, p):
                return False
    return True


def _factor(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Default modulus registry
# ---------------------------------------------------------------------------

def _parse_moduli(text: str) -> dict[tuple[int, int], tuple[int, ...]]:
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, coeffs = line.split(":", 1)
        p, k = (int(t) for t in head.split())
        table[(p, k)] = tuple(int(t) for t in coeffs.split())
    return table


@lru_cache(maxsize=1)
def _default_moduli() -> dict[tuple[int, int], tuple[int, ...]]:
    text = resources.files("swissag.data").joinpath("moduli.txt").read_text()
    return _parse_moduli(text)


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """The shipped default modulus for GF(p^k)."""
    try:
        return _default_moduli()[(p, k)]
    except KeyError:
        raise ValueError(f"no default modulus shipped for GF({p}^{k})") from None


# ---------------------------------------------------------------------------
# Field spec / context
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Characteristic, extension degree and monic irreducible modulus."""

    p: int
    k: int
    modulus: tuple[int, ...]  # ascending degree, length k + 1, monic

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if len(self.modulus) != self.k + 1:
            raise ValueError(
                f"modulus has degree {len(self.modulus) - 1}, expected {self.k}"
            )
        if self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if any(not (0 <= c < self.p) for c in self.modulus):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if not _is_irreducible(list(self.modulus), self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({self.p})")

    @property
    def order(self) -> int:
        return self.p ** self.k


@dataclass(frozen=True)
class FieldElement:
    """One element of a fixed field, identified by its integer code."""

    ctx: "FieldCtx"
    enc: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        p, e = self.ctx.p, self.enc
        out = []
        for _ in range(self.ctx.k):
            out.append(e % p)
            e //= p
        return tuple(out)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("operands belong to different fields")
            return other.enc
        if isinstance(other, int):
            return self.ctx.from_int(other).enc
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.add(self.enc, b)) if b is not NotImplemented else b

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.sub(self.enc, b)) if b is not NotImplemented else b

    def __mul__(self, other):
        b = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.mul(self.enc, b)) if b is not NotImplemented else b

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul(self.enc, self.ctx.inv(b)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.enc))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.enc, e))

    def __bool__(self) -> bool:
        return self.enc != 0

    def __repr__(self) -> str:
        return f"GF({self.ctx.order}):{self.enc}"


class FieldCtx:
    """Immutable context for one concrete GF(p^k).

    All operations are pure; a context can be shared freely between
    threads once constructed.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.k = spec.k
        self.order = spec.order
        q1 = self.order - 1

        # Bootstrap multiplication on coefficient tuples to build tables.
        def raw_mul(a: int, b: int) -> int:
            ca, cb = self._decode(a), self._decode(b)
            prod = [0] * (2 * self.k - 1)
            for i, x in enumerate(ca):
                if x:
                    for j, y in enumerate(cb):
                        prod[i + j] = (prod[i + j] + x * y) % self.p
            for i in range(len(prod) - 1, self.k - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j in range(self.k):
                        prod[i - self.k + j] = (prod[i - self.k + j] - c * spec.modulus[j]) % self.p
            return self._encode(prod[: self.k])

        def raw_pow(a: int, e: int) -> int:
            r = 1
            while e:
                if e & 1:
                    r = raw_mul(r, a)
                a = raw_mul(a, a)
                e >>= 1
            return r

        gen = self._find_generator(raw_pow, q1)
        exp = np.zeros(2 * q1, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = raw_mul(v, gen)
        if v != 1:
            raise ValueError("generator order bookkeeping failed")
        exp[q1:] = exp[:q1]
        self.generator = gen
        self._exp = exp
        self._log = log

        if self.p != 2:
            idx = np.arange(self.order)
            digits = []
            e = idx.copy()
            for _ in range(self.k):
                digits.append(e % self.p)
                e //= self.p
            add = np.zeros((self.order, self.order), dtype=np.uint16)
            for a in range(self.order):
                acc = np.zeros(self.order, dtype=np.int64)
                da = self._decode(a)
                for i in range(self.k):
                    acc += ((digits[i] + da[i]) % self.p) * self.p ** i
                add[a] = acc
            self._add_table = add
            self._neg_table = np.zeros(self.order, dtype=np.uint16)
            for a in range(self.order):
                self._neg_table[a] = self._encode([(-c) % self.p for c in self._decode(a)])
        else:
            self._add_table = None
            self._neg_table = None
        for arr in (self._exp, self._log, self._add_table, self._neg_table):
            if arr is not None:
                arr.setflags(write=False)

    # -- encoding ----------------------------------------------------------

    def _decode(self, enc: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(enc % self.p)
            enc //= self.p
        return out

    def _encode(self, coeffs) -> int:
        e = 0
        for c in reversed(list(coeffs)):
            e = e * self.p + int(c) % self.p
        return e

    def _find_generator(self, raw_pow, q1: int) -> int:
        primes = _factor(q1) if q1 > 1 else []
        for g in range(1, self.order):
            if all(raw_pow(g, q1 // ell) != 1 for ell in primes):
                return g
        raise ValueError("no multiplicative generator found")  # pragma: no cover

    # -- scalar arithmetic on integer codes --------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return int(self._add_table[a, b])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return int(self._neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return int(self._exp[self.order - 1 - self._log[a]])

    def pow(self, a: int, e: int) -> int:
        """a**e with any integer exponent (reduced mod the group order)."""
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        q1 = self.order - 1
        return int(self._exp[(self._log[a] * (e % q1)) % q1])

    # -- vector arithmetic on numpy arrays of codes -------------------------

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._add_table[a, b]

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a
        return self._neg_table[a]

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        zero = (a == 0) | (b == 0)
        idx = (self._log[a] + self._log[b]) % (self.order - 1)
        out = self._exp[idx].astype(np.uint16)
        out[zero] = 0
        return out

    def vscale(self, vec: np.ndarray, c: int) -> np.ndarray:
        if c == 0:
            return np.zeros_like(vec)
        if c == 1:
            return vec.copy()
        zero = vec == 0
        idx = (self._log[vec] + self._log[c]) % (self.order - 1)
        out = self._exp[idx].astype(np.uint16)
        out[zero] = 0
        return out

    def vpow(self, vec: np.ndarray, e: int) -> np.ndarray:
        """Elementwise vec**e, e >= 0 (0**0 == 1)."""
        if e == 0:
            return np.ones_like(vec)
        zero = vec == 0
        q1 = self.order - 1
        idx = (self._log[vec] * (e % q1)) % q1
        out = self._exp[idx].astype(np.uint16)
        out[zero] = 0
        return out

    def vsum(self, vec: np.ndarray) -> int:
        """Field sum of a vector of codes."""
        if self.p == 2:
            return int(np.bitwise_xor.reduce(vec)) if vec.size else 0
        acc = vec.astype(np.uint16)
        while acc.size > 1:
            if acc.size % 2:
                acc = np.concatenate([acc, np.zeros(1, dtype=np.uint16)])
            acc = self._add_table[acc[0::2], acc[1::2]].astype(np.uint16)
        return int(acc[0]) if acc.size else 0

    def vdot(self, a: np.ndarray, b: np.ndarray) -> int:
        return self.vsum(self.vmul(a, b))

    # -- element API ---------------------------------------------------------

    def element(self, enc: int) -> FieldElement:
        if not 0 <= enc < self.order:
            raise ValueError(f"enc code {enc} out of range for GF({self.order})")
        return FieldElement(self, enc)

    def from_int(self, n: int) -> FieldElement:
        """Image of the integer n under Z -> GF(p) -> GF(p^k)."""
        return FieldElement(self, n % self.p)

    def from_coeffs(self, coeffs) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise ValueError("coefficient vector longer than extension degree")
        coeffs += [0] * (self.k - len(coeffs))
        return FieldElement(self, self._encode(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def __repr__(self) -> str:
        return f"FieldCtx(GF({self.p}^{self.k}), modulus={self.spec.modulus})"


@lru_cache(maxsize=None)
def _build_field_cached(p: int, k: int, modulus: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(FieldSpec(p, k, modulus))


def build_field(p: int, k: int, modulus=None) -> FieldCtx:
    """Construct (or fetch the cached) field context for GF(p^k).

    With ``modulus`` omitted the shipped default for (p, k) is used; the
    modulus is verified irreducible either way.
    """
    mod = tuple(modulus) if modulus is not None else default_modulus(p, k)
    return _build_field_cached(p, k, mod)


def all_elements(ctx: FieldCtx) -> list[FieldElement]:
    """Every field element exactly once, in ascending enc order."""
    return [FieldElement(ctx, e) for e in range(ctx.order)]
