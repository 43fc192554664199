"""Divisor data for the self-orthogonality construction.

For each curve instance this module computes the set A of fibering-
coordinate values whose whole fiber consists of rational places of
maximal size, the split polynomial f = prod_{a in A} (Z - a) together
with its formal derivative f', the evaluation divisor D (all places lying
above A, in canonical order), and the integer data of the differential
(f'(t)/f(t)) dt, where t is the fibering coordinate:

  deg M      degree of the zero divisor of f'(t) on the curve,
  omega      per-infinite-place coefficient of the differential's divisor
             M - D + omega * (P_1 + ... + P_r),
  s range    the s for which the code C(D, s(P_1+...+P_r)) is forced to be
             Euclidean self-orthogonal (s <= floor(omega / 2)).

The admissible set is computed two independent ways - by grouping the
enumerated places by fiber value and by evaluating the defining algebraic
condition over the whole field - and the two must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .curves import AffinePlace, CurveDescriptor, enc_coords
from .polys import Poly, derivative, poly_gcd, product_from_roots

__all__ = [
    "SwissData",
    "compute_A_set",
    "build_swiss_data",
    "simple_zero_certificate",
    "closed_form_f_exponents",
    "closed_form_fprime_exponents",
    "swiss_report",
]


# ---------------------------------------------------------------------------
# Admissible fiber values
# ---------------------------------------------------------------------------

def _admissible_by_condition(desc: CurveDescriptor) -> set[int]:
    """Fiber values passing the family's algebraic admissibility condition."""
    ctx, params = desc.ctx, desc.params
    els = np.arange(ctx.order, dtype=np.uint16)
    if params.family in ("gk", "ggs", "abq"):
        # trace-type condition: sum over i < n of (t^m)^(q^(2i)) vanishes
        u = ctx.vpow(els, params.m)
        acc = np.zeros_like(els)
        for i in range(params.n):
            acc = ctx.vadd(acc, ctx.vpow(u, params.q ** (2 * i)))
        return set(int(t) for t in els[acc == 0])
    # ggk2, q = 2: a != 0 admissible iff Y^6 + Y^3 = a^(2^n+1) has six roots
    if params.q != 2:
        raise ValueError("ggk2 admissible set is only characterized for q = 2")
    key = ctx.vadd(ctx.vpow(els, 6), ctx.vpow(els, 3))
    counts = np.bincount(key.astype(np.int64), minlength=ctx.order)
    vals = ctx.vpow(els[1:], 2 ** params.n + 1)
    mask = counts[vals.astype(np.int64)] == 6
    return set(int(t) for t in els[1:][mask])


def _admissible_by_fibers(desc: CurveDescriptor,
                          places: list[AffinePlace]) -> set[int]:
    """Fiber values read off the enumerated places.

    Every nonempty fiber must have exactly the family's full fiber size;
    for ggk2 the zero fiber is real but excluded from the admissible set.
    """
    params = desc.params
    sizes: dict[int, int] = {}
    for pl in places:
        t = pl.coords[params.fiber_coord].enc
        sizes[t] = sizes.get(t, 0) + 1
    bad = {t: c for t, c in sizes.items() if c != params.fiber_size}
    if bad:
        raise ValueError(
            f"{params.family}: partial fibers encountered {sorted(bad.items())[:5]}"
        )
    vals = set(sizes)
    if params.family == "ggk2":
        vals.discard(0)
    return vals


def compute_A_set(desc: CurveDescriptor,
                  places: list[AffinePlace] | None = None) -> list[int]:
    """Admissible fiber values as sorted enc codes.

    When places are supplied the fiber grouping and the algebraic
    condition are both evaluated and must agree; disagreement is a hard
    failure.
    """
    by_cond = _admissible_by_condition(desc)
    if places is not None:
        by_fiber = _admissible_by_fibers(desc, places)
        if by_cond != by_fiber:
            raise ValueError(
                f"{desc.family}: admissible-set methods disagree "
                f"(condition {len(by_cond)} values, fibers {len(by_fiber)})"
            )
    expected = desc.params.a_size
    if expected is not None and len(by_cond) != expected:
        raise ValueError(
            f"{desc.family}: admissible set has {len(by_cond)} values, "
            f"closed form says {expected}"
        )
    return sorted(by_cond)


# ---------------------------------------------------------------------------
# Swiss data
# ---------------------------------------------------------------------------

@dataclass
class SwissData:
    """Computed divisor package for one curve instance."""

    desc: CurveDescriptor
    a_values: tuple[int, ...]      # admissible fiber values, ascending enc
    f: Poly                        # prod (Z - a) over a_values
    f_prime: Poly
    d_places: list[AffinePlace]    # support of D, canonical order
    deg_d: int
    deg_m: int
    omega_per_place: tuple[int, ...]
    s_min: int
    s_max: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def genus(self) -> int:
        return self.desc.genus

    @property
    def r(self) -> int:
        return self.desc.params.infinity.count

    @property
    def omega(self) -> int:
        return self.omega_per_place[0]

    def d_coords(self) -> np.ndarray:
        key = "d_coords"
        if key not in self._cache:
            arr = enc_coords(self.d_places)
            arr.setflags(write=False)
            self._cache[key] = arr
        return self._cache[key]


def build_swiss_data(desc: CurveDescriptor,
                     places: list[AffinePlace]) -> SwissData:
    """Assemble the divisor package from an enumerated place list."""
    params = desc.params
    a_values = compute_A_set(desc, places)
    f = product_from_roots(desc.ctx, a_values)
    f_prime = derivative(f)
    if poly_gcd(f, f_prime).degree != 0:
        raise ValueError(f"{params.family}: split polynomial has repeated roots")

    a_set = set(a_values)
    fib = params.fiber_coord
    d_places = [pl for pl in places if pl.coords[fib].enc in a_set]
    deg_d = len(d_places)
    if deg_d != len(a_values) * params.fiber_size:
        raise ValueError(
            f"{params.family}: deg D = {deg_d} != |A| * fiber size "
            f"= {len(a_values) * params.fiber_size}"
        )

    r = params.infinity.count
    pole_fib = params.infinity.pole_orders[fib]
    deg_m = f_prime.degree * pole_fib * r
    two_g_minus_2 = params.two_g_minus_2
    if two_g_minus_2 % r:
        raise ValueError("canonical degree does not split over the infinite places")
    omega = (f.degree - f_prime.degree) * pole_fib + two_g_minus_2 // r
    # the differential's divisor M - D + omega*(P_1+...+P_r) must have
    # canonical degree: deg M - deg D + r*omega == 2g - 2
    if deg_m - deg_d + r * omega != two_g_minus_2:
        raise ValueError(f"{params.family}: divisor degree bookkeeping failed")
    s_min = two_g_minus_2 // r
    return SwissData(
        desc=desc, a_values=tuple(a_values), f=f, f_prime=f_prime,
        d_places=d_places, deg_d=deg_d, deg_m=deg_m,
        omega_per_place=(omega,) * r, s_min=s_min, s_max=omega // 2,
    )


@dataclass(frozen=True)
class SimpleZeroReport:
    ok: bool
    fiber_size: int
    squarefree: bool
    full_fibers: bool


def simple_zero_certificate(swiss: SwissData) -> SimpleZeroReport:
    """Certify that every admissible value has a full fiber of simple zeros."""
    params = swiss.desc.params
    counts: dict[int, int] = {}
    for pl in swiss.d_places:
        t = pl.coords[params.fiber_coord].enc
        counts[t] = counts.get(t, 0) + 1
    full = (set(counts) == set(swiss.a_values)
            and all(c == params.fiber_size for c in counts.values()))
    squarefree = poly_gcd(swiss.f, swiss.f_prime).degree == 0
    return SimpleZeroReport(ok=full and squarefree,
                            fiber_size=params.fiber_size,
                            squarefree=squarefree, full_fibers=full)


# ---------------------------------------------------------------------------
# Printed closed forms (exponent lists, ascending; all coefficients are 1)
# ---------------------------------------------------------------------------

_GGK2_F_EXP = {
    3: (0, 18, 27, 36),
    5: (0, 66, 132, 330, 363, 396, 495, 528, 594, 627, 660),
}
_GGK2_FPRIME_EXP = {
    3: (26,),
    5: (362, 494, 626),
}


def closed_form_f_exponents(desc: CurveDescriptor) -> tuple[int, ...] | None:
    """Known closed form of f as an exponent list, when one exists."""
    params = desc.params
    q, n = params.q, params.n
    if params.family == "gk":
        return tuple(sorted({1, q**5 - q**4 + q**2 - q + 1, q**5 - q**3 + q**2}))
    if params.family in ("ggs", "abq"):
        t = (q**n + 1) * (q - 1)
        k = (n - 1) // 2
        odd_tail = sum(q ** (2*j + 1) for j in range(k)) * t
        exps = {1}
        exps |= {1 + sum(q ** (2*j) for j in range(i + 1)) * t + odd_tail
                 for i in range(k)}
        exps |= {1 + sum(q ** (2*j + 1) for j in range(i + 1)) * t
                 for i in range(k)}
        return tuple(sorted(exps))
    if params.family == "ggk2" and q == 2:
        return _GGK2_F_EXP.get(n)
    return None


def closed_form_fprime_exponents(desc: CurveDescriptor) -> tuple[int, ...] | None:
    params = desc.params
    q, n = params.q, params.n
    if params.family == "gk":
        return (0, q**5 - q**4 + q**2 - q)
    if params.family in ("ggs", "abq"):
        t = (q**n + 1) * (q - 1)
        k = (n - 1) // 2
        exps = {0, q * t}
        exps |= {sum(q ** (2*j + 1) for j in range(i + 1)) * t for i in range(1, k)}
        return tuple(sorted(exps))
    if params.family == "ggk2" and q == 2:
        return _GGK2_FPRIME_EXP.get(n)
    return None


def verify_closed_forms(swiss: SwissData) -> bool:
    """Compare computed f, f' with the printed closed forms, when known.

    The closed forms have all nonzero coefficients equal to one, so an
    exponent-set comparison is coefficient-exact.
    """
    fe = closed_form_f_exponents(swiss.desc)
    ge = closed_form_fprime_exponents(swiss.desc)
    ok = True
    if fe is not None:
        ok &= swiss.f.exponents() == fe and all(
            swiss.f.coeffs[e] == 1 for e in fe)
    if ge is not None:
        ok &= swiss.f_prime.exponents() == ge and all(
            swiss.f_prime.coeffs[e] == 1 for e in ge)
    return ok


def swiss_report(swiss: SwissData) -> dict:
    """JSON-ready report, matching the documented schema."""
    return {
        "family": swiss.desc.family,
        "q": swiss.desc.q,
        "n": swiss.desc.n,
        "A_size": len(swiss.a_values),
        "f_coeffs": list(swiss.f.coeffs),
        "fprime_coeffs": list(swiss.f_prime.coeffs),
        "deg_D": swiss.deg_d,
        "deg_M": swiss.deg_m,
        "omega_coeff": swiss.omega,
        "s_min": swiss.s_min,
        "s_max": swiss.s_max,
    }
