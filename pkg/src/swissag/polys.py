"""Dense univariate polynomial arithmetic over a FieldCtx.

Coefficients are stored as integer codes, ascending degree, trailing
zeros stripped (the zero polynomial is the empty tuple).  Degrees stay in
the hundreds here, and every ambient field has at most 4096 elements, so
dense storage and exhaustive root scans are the simple and fast choice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import FieldCtx, FieldElement

__all__ = [
    "Poly",
    "poly_from_coeffs",
    "product_from_roots",
    "derivative",
    "roots_in_field",
    "poly_gcd",
]


def _enc(v) -> int:
    return v.enc if isinstance(v, FieldElement) else int(v)


@dataclass(frozen=True)
class Poly:
    """Polynomial over one field; compare/hash by coefficient codes."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]  # ascending degree, no trailing zeros

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, v) -> int:
        """Evaluate at a single point (enc code in, enc code out)."""
        x = _enc(v)
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.ctx.add(self.ctx.mul(acc, x), c)
        return acc

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        """Horner evaluation over an array of enc codes."""
        acc = np.zeros_like(xs)
        for c in reversed(self.coeffs):
            acc = self.ctx.vmul(acc, xs)
            if c:
                acc = self.ctx.vadd(acc, np.full_like(xs, c))
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        inv = self.ctx.inv(lead)
        return Poly(self.ctx, tuple(self.ctx.mul(c, inv) for c in self.coeffs))

    def exponents(self) -> tuple[int, ...]:
        """Exponents with nonzero coefficient, ascending."""
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def to_text(self) -> str:
        """Space-separated enc codes 'c0 c1 c2 ...' (empty for zero)."""
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, ctx: FieldCtx, text: str) -> "Poly":
        return poly_from_coeffs(ctx, [int(t) for t in text.split()])

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = [f"{c if c != 1 or i == 0 else ''}Z^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


def poly_from_coeffs(ctx: FieldCtx, coeffs) -> Poly:
    cs = [_enc(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(ctx, tuple(cs))


def product_from_roots(ctx: FieldCtx, roots) -> Poly:
    """The monic polynomial prod (Z - r) over the given distinct roots."""
    encs = [_enc(r) for r in roots]
    if len(set(encs)) != len(encs):
        raise ValueError("duplicate roots")
    # incremental multiply by (Z - r), vectorized over the coefficient array
    acc = np.array([1], dtype=np.uint16)
    for r in encs:
        shifted = np.concatenate([np.zeros(1, dtype=np.uint16), acc])
        tail = np.concatenate([ctx.vscale(acc, ctx.neg(r)), np.zeros(1, dtype=np.uint16)])
        acc = ctx.vadd(shifted, tail)
    return poly_from_coeffs(ctx, acc.tolist())


def derivative(f: Poly) -> Poly:
    """Formal derivative; term exponents are reduced mod the characteristic."""
    ctx = f.ctx
    out = [ctx.mul(c, i % ctx.p) for i, c in enumerate(f.coeffs)][1:]
    return poly_from_coeffs(ctx, out)


def roots_in_field(f: Poly) -> set[int]:
    """All roots in the ambient field, by exhaustive evaluation.

    Returns enc codes; multiplicities are not reported.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has every element as a root")
    xs = np.arange(f.ctx.order, dtype=np.uint16)
    vals = f.eval_many(xs)
    return set(int(x) for x in xs[vals == 0])


def _divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    ctx = a.ctx
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    inv_lead = ctx.inv(b.coeffs[-1])
    quot = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = ctx.mul(rem[i], inv_lead)
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = ctx.sub(rem[i - db + j], ctx.mul(c, b.coeffs[j]))
    return poly_from_coeffs(ctx, quot), poly_from_coeffs(ctx, rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, _divmod(a, b)[1]
    return a.monic()
