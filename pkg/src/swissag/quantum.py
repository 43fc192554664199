"""Stabilizer parameter derivation, purity, Singleton defect, GV checking.

Classical self-orthogonal [N, k] codes over GF(Q) yield [[N, N-2k, >= d*]]
stabilizer codes, where d* is the dual designed distance deg(G) - 2g + 2.
Table rows are produced from the families' closed parameter formulas and,
for the instances small enough to build, cross-checked against the codes
actually constructed; any disagreement on N or k is a hard failure.

The quantum Gilbert-Varshamov check evaluates

    (Q^(N-k+2) - 1) / (Q^2 - 1)  >  sum_{i=1}^{d-1} (Q^2-1)^(i-1) C(N, i)

with exact integers (hypotheses N > k >= 2, d >= 2, N = k mod 2).  A
"violated" verdict means the inequality fails, i.e. the parameters exceed
what the bound guarantees.  The single term i = d - 1 often already
exceeds the left side; that cheap dominant-term certificate is tried
before the full summation and the report says which one decided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .codes import EvaluationCode, build_code, is_self_orthogonal
from .curves import family_params
from .linalg import gram_is_zero, rowspace_contained
from .rrbasis import DivisorSpec, basis_filtration
from .swiss import SwissData, _GGK2_F_EXP, _GGK2_FPRIME_EXP

__all__ = [
    "QuantumCodeParams",
    "stabilizer_from_self_orthogonal",
    "css_params",
    "t_point_params",
    "GVResult",
    "gv_check",
    "theorem_table",
    "verify_table",
    "orthogonality_boundary",
    "rows_to_csv",
    "CSV_HEADER",
]


@dataclass(frozen=True)
class QuantumCodeParams:
    """[[N, k, d]]_Q record with purity and bound verdicts."""

    alphabet: int
    N: int
    k: int
    d_bound: int
    d_kind: str               # "lower_bound" | "as_printed"
    pure: bool
    family: str | None = None
    q: int | None = None
    n: int | None = None
    s: int | None = None
    gv_verdict: str = "not-checked"
    gv_certificate: str = "none"

    @property
    def singleton_defect(self) -> int:
        return self.N - self.k - 2 * self.d_bound + 2

    @property
    def relative_defect(self) -> float:
        return self.singleton_defect / self.N


def _purity(classical_designed_d: int, classical_k: int) -> bool:
    # a classical designed distance beyond k + 1 forces a pure stabilizer code
    return classical_designed_d > classical_k + 1


def stabilizer_from_self_orthogonal(code: EvaluationCode,
                                    verify: bool = True) -> QuantumCodeParams:
    """[[N, N-2k, >= deg(G) - 2g + 2]] from a self-orthogonal code."""
    if verify and not is_self_orthogonal(code):
        raise ValueError("code is not self-orthogonal")
    return QuantumCodeParams(
        alphabet=code.ctx.order, N=code.N, k=code.N - 2 * code.k,
        d_bound=code.designed_dual_distance, d_kind="lower_bound",
        pure=_purity(code.designed_distance, code.k), s=code.G.s,
    )


def css_params(c1: EvaluationCode, c2: EvaluationCode) -> QuantumCodeParams:
    """[[N, k2 - k1, D]] from an exactly verified nesting C1 <= C2."""
    if c1.N != c2.N or c1.ctx is not c2.ctx:
        raise ValueError("codes live on different divisors")
    if not rowspace_contained(c1.ctx, c1.generator, c2.generator):
        raise ValueError("C1 is not contained in C2")
    two_g_minus_2 = 2 * c1.genus - 2
    d = min(c1.N - c2.G.degree, c1.G.degree - two_g_minus_2)
    return QuantumCodeParams(
        alphabet=c1.ctx.order, N=c1.N, k=c2.k - c1.k,
        d_bound=d, d_kind="lower_bound",
        pure=_purity(c1.designed_distance, c1.k),
    )


def t_point_params(alphabet: int, N: int, g: int,
                   a_list, b_list) -> QuantumCodeParams:
    """Pure arithmetic t-point parameters; no code is built."""
    a_list, b_list = list(a_list), list(b_list)
    if len(a_list) != len(b_list) or not a_list:
        raise ValueError("need equal-length nonempty multiplier lists")
    if any(a > b for a, b in zip(a_list, b_list)):
        raise ValueError("each a_i must be <= b_i")
    sa, sb = sum(a_list), sum(b_list)
    if not (2 * g - 2 < sa <= sb < N):
        raise ValueError("need 2g - 2 < sum(a) <= sum(b) < N")
    return QuantumCodeParams(
        alphabet=alphabet, N=N, k=sb - sa,
        d_bound=min(N - sb, sa - (2 * g - 2)), d_kind="lower_bound",
        pure=_purity(N - sa, sa + 1 - g),
    )


# ---------------------------------------------------------------------------
# Quantum Gilbert-Varshamov
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GVResult:
    verdict: str          # "satisfied" | "violated" | "not-applicable"
    certificate: str      # "dominant-term" | "full-sum" | "hypothesis"
    dominant_agrees: bool | None = None   # set when both routes were computed


def gv_check(alphabet: int, N: int, k: int, d: int,
             force_full: bool = False) -> GVResult:
    """Exact-integer check of the quantum Gilbert-Varshamov inequality."""
    if not (N > k >= 2 and d >= 2 and (N - k) % 2 == 0):
        return GVResult("not-applicable", "hypothesis")
    q2 = alphabet * alphabet - 1
    lhs = (alphabet ** (N - k + 2) - 1) // q2
    dominant = q2 ** (d - 2) * math.comb(N, d - 1)
    dominant_verdict = "violated" if dominant >= lhs else None
    if dominant_verdict and not force_full:
        return GVResult("violated", "dominant-term")
    rhs = 0
    binom = 1                      # C(N, i), updated incrementally
    power = 1                      # (alphabet^2 - 1)^(i-1)
    for i in range(1, d):
        binom = binom * (N - i + 1) // i
        rhs += power * binom
        power *= q2
    verdict = "satisfied" if lhs > rhs else "violated"
    agrees = (dominant_verdict == verdict) if dominant_verdict else None
    return GVResult(verdict, "full-sum", dominant_agrees=agrees)


def with_gv(row: QuantumCodeParams, force_full: bool = False) -> QuantumCodeParams:
    res = gv_check(row.alphabet, row.N, row.k, row.d_bound, force_full=force_full)
    return replace(row, gv_verdict=res.verdict, gv_certificate=res.certificate)


# ---------------------------------------------------------------------------
# Parameter tables from the closed family formulas
# ---------------------------------------------------------------------------

def _one_point_bounds(family: str, q: int, n: int) -> tuple[int, int, int]:
    """(N, s_min, s_max) for the one-infinite-place families."""
    params = family_params(family, q, n)
    N = params.expected_places - 1
    g2 = params.two_g_minus_2
    if family == "gk":
        s_max = (q**7 - q**6 + q**5 + q**4 - 2 * q**3 + q**2 - 2) // 2
    else:
        gamma = ((q ** (n - 1) - 1) * (q**n + 1) // (q + 1) + 1)
        gamma *= q**3 if family == "ggs" else q**2
        s_max = (gamma + g2) // 2
    return N, g2, s_max


def theorem_table(family: str, q: int, n: int | None = None,
                  gv: bool = False) -> list[QuantumCodeParams]:
    """One row per admissible s, from the closed parameter formulas.

    k at the left endpoint s_min (where deg G equals the canonical degree
    and the Riemann-Roch space has dimension g, not deg G + 1 - g) is the
    construction value N - 2g; beyond it, k = N + (2g - 2) - 2 * deg G / r
    ... i.e. the printed linear formulas.
    """
    family = family.lower()
    params = family_params(family, q, n)
    alphabet = params.field_size
    g = params.genus
    rows = []
    if family in ("gk", "ggs", "abq"):
        N, g2, s_max = _one_point_bounds(family, q, params.n)
        for s in range(g2, s_max + 1):
            k_cl = g if s == g2 else s + 1 - g
            rows.append(QuantumCodeParams(
                alphabet=alphabet, N=N, k=N - 2 * k_cl,
                d_bound=s - g2, d_kind="lower_bound",
                pure=_purity(N - s, k_cl),
                family=family, q=q, n=params.n, s=s,
            ))
    else:
        if q != 2 or params.n not in _GGK2_F_EXP:
            raise ValueError("ggk2 tables are only printed for q = 2, n in {3, 5}")
        deg_f = max(_GGK2_F_EXP[params.n])
        deg_fp = max(_GGK2_FPRIME_EXP[params.n])
        r = q + 1
        N = params.a_size * params.fiber_size
        g2 = params.two_g_minus_2
        omega = (deg_f - deg_fp) * (q**2 - q) + g2 // r
        s_min, s_max = g2 // r, omega // 2
        for s in range(s_min, s_max + 1):
            k_cl = g if s == s_min else r * s + 1 - g
            rows.append(QuantumCodeParams(
                alphabet=alphabet, N=N, k=N - 2 * k_cl,
                d_bound=r * s - g2, d_kind="as_printed",
                pure=_purity(N - r * s, k_cl),
                family=family, q=q, n=params.n, s=s,
            ))
    if gv:
        rows = [with_gv(row) for row in rows]
    return rows


def verify_table(swiss: SwissData, rows: list[QuantumCodeParams],
                 per_s_orthogonality: bool = True) -> None:
    """Cross-check formula rows against actually constructed codes.

    Builds the rank filtration once; every row's N and k must match the
    construction exactly and the d bound must equal the built code's dual
    designed distance.  Self-orthogonality is checked per s (or only at
    s_max, which contains every smaller code, when per_s_orthogonality is
    off).  Any disagreement raises.
    """
    s_max = max(row.s for row in rows)
    filt = basis_filtration(swiss, s_max)
    r = swiss.r
    for row in rows:
        k_cl = filt.prefix_size(row.s)
        n_built, k_built = swiss.deg_d, swiss.deg_d - 2 * k_cl
        d_built = r * row.s - swiss.desc.params.two_g_minus_2
        if (row.N, row.k) != (n_built, k_built) or row.d_bound != d_built:
            raise ValueError(
                f"{swiss.desc.family} s={row.s}: table says "
                f"[[{row.N},{row.k},{row.d_bound}]], construction gives "
                f"[[{n_built},{k_built},{d_built}]]"
            )
        if per_s_orthogonality:
            prefix = filt.matrix[:k_cl]
            if not gram_is_zero(swiss.desc.ctx, prefix):
                raise ValueError(f"{swiss.desc.family} s={row.s}: G G^T != 0")
    if not per_s_orthogonality:
        if not gram_is_zero(swiss.desc.ctx, filt.matrix[:filt.prefix_size(s_max)]):
            raise ValueError(f"{swiss.desc.family} s={s_max}: G G^T != 0")


def orthogonality_boundary(swiss: SwissData, probe: int = 1) -> int | None:
    """First s beyond s_max where G G^T != 0, scanning s_max+1 .. s_max+probe.

    Reported as data only: self-orthogonality past s_max is neither
    claimed nor refuted by the construction.
    """
    for s in range(swiss.s_max + 1, swiss.s_max + probe + 1):
        if s * swiss.r >= swiss.deg_d:
            return None
        code = build_code(swiss, DivisorSpec(s, swiss.r))
        if not is_self_orthogonal(code):
            return s
    return None


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

CSV_HEADER = ("family,q,n,s,N,k,d_bound,d_kind,pure,"
              "singleton_defect,gv_verdict,gv_certificate")


def rows_to_csv(rows: list[QuantumCodeParams]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(",".join(str(v) for v in (
            row.family or "", row.q or "", row.n or "",
            row.s if row.s is not None else "",
            row.N, row.k, row.d_bound, row.d_kind,
            str(row.pure).lower(), row.singleton_defect,
            row.gv_verdict, row.gv_certificate,
        )))
    return "\n".join(lines) + "\n"
