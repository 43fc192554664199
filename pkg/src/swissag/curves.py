"""Curve families: definitions, derived constants, rational-point enumeration.

Four maximal-curve families are supported, each given by explicit affine
equations over GF(q^6) or GF(q^(2n)):

  gk    Y^(q+1) = X^q + X,  Z^(q^2-q+1) = Y^(q^2) - Y          (n fixed at 3)
  ggs   X^q + X = Y^(q+1),  Y^(q^2) - Y = Z^m,  m = (q^n+1)/(q+1),  n >= 5
  abq   Y^(q^2) - Y = X^m                                          n >= 3
  ggk2  X^(q+1) - 1 = Y^(q+1),  Y (X^(q^2)-X)/(X^(q+1)-1) = Z^m    n >= 3

Affine rational points are enumerated fiber by fiber over the "fibering
coordinate" (z for gk/ggs/ggk2, x for abq) using precomputed preimage
tables of the additive layer maps, so the cost is O(|F|) rather than
O(|F|^3).  The affine models are nonsingular (a Jacobian rank assertion
guards this at enumeration time), so affine points biject with affine
places; the places at infinity, where the models are singular, are never
materialized as points and exist only through their pole-order data.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .fields import FieldCtx, FieldElement, build_field

__all__ = [
    "FAMILIES",
    "FamilyParams",
    "InfinitePlaceData",
    "CurveDescriptor",
    "AffinePlace",
    "family_params",
    "make_descriptor",
    "enumerate_affine_places",
    "maximality_check",
    "enc_coords",
    "write_place_cache",
    "read_place_cache",
]

FAMILIES = ("gk", "ggs", "abq", "ggk2")


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            if q != 1:
                raise ValueError("q must be a prime power")
            return p, e
    raise ValueError("q must be a prime power >= 2")


@dataclass(frozen=True)
class InfinitePlaceData:
    """Places at infinity: their number and per-place coordinate pole orders."""

    count: int
    pole_orders: tuple[int, ...]  # one entry per coordinate, same at every place


@dataclass(frozen=True)
class FamilyParams:
    """All integer constants of one family instance (no field required)."""

    family: str
    q: int
    n: int
    p: int                      # characteristic
    ext_degree: int             # ambient field is GF(p^ext_degree)
    field_size: int
    m: int
    genus: int
    expected_places: int        # rational places including those at infinity
    infinity: InfinitePlaceData
    fiber_coord: int            # index of the fibering coordinate
    fiber_size: int             # places above each admissible fiber value
    coord_names: tuple[str, ...]
    exponent_caps: tuple[int | None, ...]  # monomial reduction bounds per coordinate
    a_size: int | None          # closed-form size of the admissible value set

    @property
    def two_g_minus_2(self) -> int:
        return 2 * self.genus - 2


def family_params(family: str, q: int, n: int | None = None) -> FamilyParams:
    """Derive every integer constant of a (family, q, n) instance."""
    family = family.lower()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    p, e = _prime_power(q)

    if family == "gk":
        if n not in (None, 3):
            raise ValueError("gk has no tower parameter (n is fixed at 3)")
        n = 3
    else:
        if n is None:
            raise ValueError(f"{family} requires the tower parameter n")
        if n % 2 == 0 or n < 3:
            raise ValueError("n must be odd and >= 3")
        if family == "ggs" and n < 5:
            raise ValueError("ggs requires n >= 5 (n = 3 coincides with gk)")

    if (q ** n + 1) % (q + 1):
        raise ValueError("(q^n + 1) must be divisible by (q + 1)")
    m = (q ** n + 1) // (q + 1)

    if family == "gk":
        genus = (q ** 3 + 1) * (q ** 2 - 2) // 2 + 1
        expected = q ** 8 - q ** 6 + q ** 5 + 1
        infinity = InfinitePlaceData(1, (q ** 3 + 1, q ** 3 - q ** 2 + q, q ** 3))
        fiber_coord, fiber_size = 2, q ** 3
        coord_names = ("x", "y", "z")
        caps = (q - 1, q ** 2 - 1, None)
        a_size = q ** 5 - q ** 3 + q ** 2
    elif family == "ggs":
        genus = (q - 1) * (q ** (n + 1) + q ** n - q ** 2) // 2
        expected = q ** (2 * n + 2) - q ** (n + 3) + q ** (n + 2) + 1
        infinity = InfinitePlaceData(1, (m * (q + 1), m * q, q ** 3))
        fiber_coord, fiber_size = 2, q ** 3
        coord_names = ("x", "y", "z")
        caps = (q - 1, q ** 2 - 1, None)
        a_size = q ** (2 * n - 1) - q ** n + q ** (n - 1)
    elif family == "abq":
        genus = (q - 1) * (q ** n - q) // 2
        expected = q ** (2 * n + 1) - q ** (n + 2) + q ** (n + 1) + 1
        infinity = InfinitePlaceData(1, (q ** 2, m))
        fiber_coord, fiber_size = 0, q ** 2
        coord_names = ("x", "y")
        caps = (None, q ** 2 - 1)
        a_size = q ** (2 * n - 1) - q ** n + q ** (n - 1)
    else:  # ggk2
        genus = (q - 1) * (q ** (n + 1) + q ** n - q ** 2) // 2
        expected = q ** (2 * n) + 2 * genus * q ** n + 1
        infinity = InfinitePlaceData(q + 1, (m, m, q ** 2 - q))
        fiber_coord, fiber_size = 2, q ** 3 - q
        coord_names = ("x", "y", "z")
        caps = (None, q, m - 1)
        if q == 2:
            a_size = 4 * (2 ** n + 1) * (2 ** (n - 1) - 1) // 3
        else:
            a_size = None  # admissible set only characterized for q = 2

    ext_degree = e * (6 if family == "gk" else 2 * n)
    return FamilyParams(
        family=family, q=q, n=n, p=p, ext_degree=ext_degree,
        field_size=p ** ext_degree, m=m, genus=genus,
        expected_places=expected, infinity=infinity,
        fiber_coord=fiber_coord, fiber_size=fiber_size,
        coord_names=coord_names, exponent_caps=caps, a_size=a_size,
    )


@dataclass(frozen=True)
class AffinePlace:
    """Affine rational place, identified with its nonsingular affine point."""

    coords: tuple[FieldElement, ...]

    def enc(self) -> tuple[int, ...]:
        return tuple(c.enc for c in self.coords)


@dataclass(frozen=True)
class CurveDescriptor:
    """One family instance bound to a concrete ambient field."""

    params: FamilyParams
    ctx: FieldCtx

    @property
    def family(self) -> str:
        return self.params.family

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def genus(self) -> int:
        return self.params.genus

    def with_genus(self, genus: int) -> "CurveDescriptor":
        """Copy with a replaced genus (negative-control hook for tests)."""
        return CurveDescriptor(replace(self.params, genus=genus), self.ctx)


def make_descriptor(family: str, q: int, n: int | None = None,
                    modulus=None) -> CurveDescriptor:
    """Build a descriptor, constructing the ambient field GF(p^(e*2n))."""
    params = family_params(family, q, n)
    ctx = build_field(params.p, params.ext_degree, modulus)
    return CurveDescriptor(params, ctx)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _preimages(ctx: FieldCtx, image: np.ndarray) -> dict[int, list[int]]:
    """Preimage lists of the map e -> image[e] over the whole field."""
    table: dict[int, list[int]] = {}
    for e, v in enumerate(image.tolist()):
        table.setdefault(v, []).append(e)
    return table


def _enumerate_tower(desc: CurveDescriptor) -> list[tuple[int, int, int]]:
    """gk/ggs points, fiber by fiber over z.

    Layers: y^(q^2) - y = z^m, then x^q + x = y^(q+1).
    """
    ctx, q, m = desc.ctx, desc.params.q, desc.params.m
    els = np.arange(ctx.order, dtype=np.uint16)
    as_y = ctx.vsub(ctx.vpow(els, q * q), els)     # y -> y^(q^2) - y
    as_x = ctx.vadd(ctx.vpow(els, q), els)         # x -> x^q + x
    pre_y = _preimages(ctx, as_y)
    pre_x = _preimages(ctx, as_x)
    pts = []
    for z in range(ctx.order):
        ys = pre_y.get(ctx.pow(z, m))
        if not ys:
            continue
        for y in ys:
            xs = pre_x.get(ctx.pow(y, q + 1))
            if not xs:
                continue
            for x in xs:
                pts.append((x, y, z))
    return pts


def _enumerate_abq(desc: CurveDescriptor) -> list[tuple[int, int]]:
    """abq points, fiber by fiber over x: y^(q^2) - y = x^m."""
    ctx, q, m = desc.ctx, desc.params.q, desc.params.m
    els = np.arange(ctx.order, dtype=np.uint16)
    as_y = ctx.vsub(ctx.vpow(els, q * q), els)
    pre_y = _preimages(ctx, as_y)
    pts = []
    for x in range(ctx.order):
        ys = pre_y.get(ctx.pow(x, m))
        if not ys:
            continue
        for y in ys:
            pts.append((x, y))
    return pts


def _enumerate_ggk2(desc: CurveDescriptor) -> list[tuple[int, int, int]]:
    """ggk2 points at q = 2, fiber by fiber over z.

    For z = a != 0 the fiber is {(c/y, y, a) : y^6 + y^3 = a^(2^n+1)} with
    c = a^m; for z = 0 it is the six points with x^3 = 1, y = 0 or x = 0,
    y^3 = 1.
    """
    if desc.params.q != 2:
        raise ValueError("ggk2 enumeration is only implemented for q = 2")
    ctx, n, m = desc.ctx, desc.params.n, desc.params.m
    els = np.arange(ctx.order, dtype=np.uint16)
    key = ctx.vadd(ctx.vpow(els, 6), ctx.vpow(els, 3))  # y -> y^6 + y^3
    pre = _preimages(ctx, key)
    cubes_of_one = [e for e in range(1, ctx.order) if ctx.pow(e, 3) == 1]
    pts = [(x, 0, 0) for x in cubes_of_one] + [(0, y, 0) for y in cubes_of_one]
    for a in range(1, ctx.order):
        ys = pre.get(ctx.pow(a, 2 ** n + 1))
        if not ys:
            continue
        c = ctx.pow(a, m)
        for y in ys:
            if y == 0:
                continue
            pts.append((ctx.mul(c, ctx.inv(y)), y, a))
    return pts


def _check_equations(desc: CurveDescriptor, coords: np.ndarray) -> None:
    """Re-verify the defining equations and Jacobian rank on every point."""
    ctx, q, m = desc.ctx, desc.params.q, desc.params.m
    fam = desc.family
    if fam in ("gk", "ggs"):
        x, y, z = coords[:, 0], coords[:, 1], coords[:, 2]
        eq1 = ctx.vsub(ctx.vpow(y, q + 1), ctx.vadd(ctx.vpow(x, q), x))
        eq2 = ctx.vsub(ctx.vpow(z, m), ctx.vsub(ctx.vpow(y, q * q), y))
        ok = not eq1.any() and not eq2.any()
        # Jacobian rows ((-1, y^q, 0), (0, 1, m z^(m-1))) always have rank 2.
        jac_ok = True
    elif fam == "abq":
        x, y = coords[:, 0], coords[:, 1]
        eq1 = ctx.vsub(ctx.vsub(ctx.vpow(y, q * q), y), ctx.vpow(x, m))
        ok = not eq1.any()
        jac_ok = True  # gradient (-m x^(m-1), -1) never vanishes
    else:  # ggk2, q = 2
        x, y, z = coords[:, 0], coords[:, 1], coords[:, 2]
        one = np.ones_like(x)
        eq1 = ctx.vadd(ctx.vadd(ctx.vpow(x, 3), one), ctx.vpow(y, 3))
        eq2 = ctx.vadd(ctx.vmul(y, x), ctx.vpow(z, m))
        ok = not eq1.any() and not eq2.any()
        # rank drops only if x = y = 0 (z != 0) which is off the curve,
        # or x^2 = 0 and x = 0 on a z = 0 fiber point -- also off-curve.
        jac_ok = bool(np.all((x != 0) | (y != 0)))
    if not ok:
        raise AssertionError(f"{fam}: enumerated point violates the defining equations")
    if not jac_ok:
        raise AssertionError(f"{fam}: singular affine point encountered")


def enumerate_affine_places(desc: CurveDescriptor) -> list[AffinePlace]:
    """All affine rational places, sorted by their coordinate enc tuples.

    Raises if the count disagrees with the expected total minus the places
    at infinity; a mismatch signals a field or modulus misconfiguration.
    """
    fam = desc.family
    if fam == "abq":
        raw = _enumerate_abq(desc)
    elif fam == "ggk2":
        raw = _enumerate_ggk2(desc)
    else:
        raw = _enumerate_tower(desc)
    raw.sort()
    if len(set(raw)) != len(raw):
        raise AssertionError("duplicate points produced by fiber enumeration")
    coords = np.array(raw, dtype=np.uint16)
    _check_equations(desc, coords)
    expected_affine = desc.params.expected_places - desc.params.infinity.count
    if len(raw) != expected_affine:
        raise ValueError(
            f"{fam}(q={desc.q}, n={desc.n}): found {len(raw)} affine places, "
            f"expected {expected_affine}"
        )
    return [AffinePlace(tuple(desc.ctx.element(e) for e in pt)) for pt in raw]


def maximality_check(desc: CurveDescriptor, total_places: int) -> bool:
    """True iff the observed total meets the Hasse-Weil upper bound."""
    size = desc.params.field_size
    root = math.isqrt(size)
    if root * root != size:
        return False
    return total_places == size + 2 * desc.params.genus * root + 1


def enc_coords(places: list[AffinePlace]) -> np.ndarray:
    """Places as an (N, dim) uint16 array of enc codes."""
    return np.array([p.enc() for p in places], dtype=np.uint16)


# ---------------------------------------------------------------------------
# Point-set cache files
# ---------------------------------------------------------------------------

def _modulus_hash(ctx: FieldCtx) -> str:
    text = f"{ctx.p} {ctx.k} " + " ".join(str(c) for c in ctx.spec.modulus)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def write_place_cache(desc: CurveDescriptor, places: list[AffinePlace],
                      path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        f"swissag-points {desc.family} {desc.q} {desc.n} "
        f"{_modulus_hash(desc.ctx)} {len(places)}"
    ]
    lines += [" ".join(str(e) for e in p.enc()) for p in places]
    path.write_text("\n".join(lines) + "\n")


def read_place_cache(desc: CurveDescriptor, path: Path) -> list[AffinePlace]:
    """Load a cache file, validating its header against the descriptor."""
    lines = path.read_text().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty cache file")
    head = lines[0].split()
    expect = ["swissag-points", desc.family, str(desc.q), str(desc.n),
              _modulus_hash(desc.ctx)]
    if head[:5] != expect or len(head) != 6:
        raise ValueError(f"{path}: cache header mismatch (stale or corrupt cache)")
    count = int(head[5])
    body = lines[1:]
    if len(body) != count:
        raise ValueError(f"{path}: cache body has {len(body)} rows, header says {count}")
    ctx = desc.ctx
    out = []
    for line in body:
        out.append(AffinePlace(tuple(ctx.element(int(t)) for t in line.split())))
    return out
