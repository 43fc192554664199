"""Monomial evaluation bases for the spaces L(s * (P_1 + ... + P_r)).

Candidate functions are reduced coordinate monomials: exponents above the
tower-relation degrees are rewritten away, so one exponent is unbounded
and the rest are capped by the descriptor's reduction bounds.  A monomial
has the same pole order at every infinite place (the exponent-weighted sum
of the per-place coordinate pole orders), and membership in L(G) is the
bound pole order <= s.

Spanning is certified numerically instead of symbolically: the selected
monomials' evaluation vectors at the divisor D must reach the
Riemann-Roch dimension deg(G) + 1 - g whenever deg(G) > 2g - 2.  A
shortfall is a hard failure and means the pole-order data is wrong, not
the elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .curves import CurveDescriptor
from .linalg import RowReducer
from .swiss import SwissData

__all__ = [
    "DivisorSpec",
    "MonomialFn",
    "candidate_monomials",
    "monomial_rows",
    "select_basis",
    "basis_filtration",
]


@dataclass(frozen=True)
class DivisorSpec:
    """G = s * (sum of the r infinite places)."""

    s: int
    r: int = 1

    def __post_init__(self):
        if self.s < 0 or self.r < 1:
            raise ValueError("divisor multiplier must be >= 0 on >= 1 places")

    @property
    def degree(self) -> int:
        return self.s * self.r


@dataclass(frozen=True)
class MonomialFn:
    """Reduced coordinate monomial with its per-place pole order."""

    exponents: tuple[int, ...]
    pole_order: int


def _pole_order(desc: CurveDescriptor, exps: tuple[int, ...]) -> int:
    orders = desc.params.infinity.pole_orders
    return sum(e * o for e, o in zip(exps, orders))


def candidate_monomials(desc: CurveDescriptor, G: DivisorSpec) -> list[MonomialFn]:
    """All reduced monomials with pole order <= s at every infinite place.

    Sorted by (pole order, exponent tuple); for the one-place families the
    pole orders must be pairwise distinct (Weierstrass semigroup
    injectivity) and this is asserted.
    """
    params = desc.params
    if G.r != params.infinity.count:
        raise ValueError(
            f"divisor spans {G.r} places, family has {params.infinity.count}")
    orders = params.infinity.pole_orders
    caps = params.exponent_caps
    ranges = []
    for cap, order in zip(caps, orders):
        top = G.s // order if cap is None else min(cap, G.s // order)
        ranges.append(range(top + 1))
    out = []
    for exps in itertools.product(*ranges):
        pole = sum(e * o for e, o in zip(exps, orders))
        if pole <= G.s:
            out.append(MonomialFn(exps, pole))
    out.sort(key=lambda mono: (mono.pole_order, mono.exponents))
    if params.infinity.count == 1:
        poles = [mono.pole_order for mono in out]
        if len(set(poles)) != len(poles):
            raise AssertionError(
                f"{params.family}: one-point pole orders are not distinct")
    return out


def monomial_rows(desc: CurveDescriptor, monos: list[MonomialFn],
                  coords: np.ndarray) -> np.ndarray:
    """Evaluation matrix: one row per monomial, one column per place."""
    ctx = desc.ctx
    n, dim = coords.shape
    logs = ctx._log[coords]                       # log of each coordinate
    zero = coords == 0
    q1 = ctx.order - 1
    out = np.empty((len(monos), n), dtype=np.uint16)
    for i, mono in enumerate(monos):
        acc = np.zeros(n, dtype=np.int64)
        kill = np.zeros(n, dtype=bool)
        for j, e in enumerate(mono.exponents):
            if e:
                acc += (e % q1) * logs[:, j]
                kill |= zero[:, j]
        row = ctx._exp[acc % q1].astype(np.uint16)
        row[kill] = 0
        out[i] = row
    return out


@dataclass
class BasisFiltration:
    """Greedy rank filtration of the candidate monomials up to some s.

    ``monos``/``matrix`` hold the accepted monomials (pole order ascending)
    and their evaluation rows; the basis of L(s') for any s' <= s is the
    prefix with pole order <= s', so nested divisors yield nested codes by
    construction.
    """

    desc: CurveDescriptor
    s: int
    monos: list[MonomialFn]
    matrix: np.ndarray
    rejected: int

    def prefix_size(self, s: int) -> int:
        return sum(1 for mono in self.monos if mono.pole_order <= s)


def basis_filtration(swiss: SwissData, s: int) -> BasisFiltration:
    """Build (or extend, via the swiss cache) the filtration up to s."""
    cached: BasisFiltration | None = swiss._cache.get("filtration")
    if cached is not None and cached.s >= s:
        return cached
    desc = swiss.desc
    G = DivisorSpec(s, swiss.r)
    if G.degree >= swiss.deg_d:
        raise ValueError(f"deg G = {G.degree} must stay below deg D = {swiss.deg_d}")
    coords = swiss.d_coords()
    monos = candidate_monomials(desc, G)
    rows = monomial_rows(desc, monos, coords)
    red = RowReducer(desc.ctx, coords.shape[0])
    accepted: list[MonomialFn] = []
    idx: list[int] = []
    for i, mono in enumerate(monos):
        if red.offer(rows[i]):
            accepted.append(mono)
            idx.append(i)
    filt = BasisFiltration(desc, s, accepted, rows[idx], len(monos) - len(idx))
    swiss._cache["filtration"] = filt
    return filt


def select_basis(swiss: SwissData, G: DivisorSpec) -> tuple[list[MonomialFn], np.ndarray]:
    """Monomial basis of L(G) and its evaluation matrix at the divisor D.

    Enforces the rank-validation contract: for deg(G) > 2g - 2 the achieved
    dimension must equal deg(G) + 1 - g exactly.
    """
    filt = basis_filtration(swiss, G.s)
    size = filt.prefix_size(G.s)
    monos = filt.monos[:size]
    matrix = filt.matrix[:size]
    two_g_minus_2 = swiss.desc.params.two_g_minus_2
    if G.degree > two_g_minus_2:
        expected = G.degree + 1 - swiss.genus
        if size != expected:
            raise ValueError(
                f"{swiss.desc.family}: L({G.s}*(inf)) has rank {size}, "
                f"Riemann-Roch demands {expected}; pole-order data is wrong"
            )
    return monos, matrix
