"""Command-line entry point: points, swiss, basis, code, quantum-table, gv-check.

Every command is deterministic given its flags and the cache state;
reports go to stdout, diagnostics to stderr, and the exit code is zero
iff every requested check passed.  Point sets are cached on disk under
$SWISSAG_CACHE_DIR (default ~/.cache/swissag); stale or corrupt cache
files are detected via the stored modulus hash and row count and silently
rebuilt.

Instances over fields larger than GF(64) (the GF(729)/GF(1024)/GF(4096)
tiers) are refused unless --slow is given, keeping the default paths
interactive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from . import codes, quantum, swiss as swiss_mod
from .curves import (CurveDescriptor, enumerate_affine_places, make_descriptor,
                     maximality_check, read_place_cache, write_place_cache)
from .rrbasis import DivisorSpec, candidate_monomials, select_basis

FAST_FIELD_LIMIT = 64


@dataclass
class RunConfig:
    family: str
    q: int
    n: int | None
    cache_dir: Path
    slow_ok: bool
    jobs: int
    seed: int


def default_cache_dir() -> Path:
    env = os.environ.get("SWISSAG_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "swissag"


def _config(args) -> RunConfig:
    return RunConfig(
        family=args.family, q=args.q, n=getattr(args, "n", None),
        cache_dir=Path(args.cache_dir) if args.cache_dir else default_cache_dir(),
        slow_ok=args.slow, jobs=args.jobs, seed=args.seed,
    )


def _descriptor(cfg: RunConfig) -> CurveDescriptor:
    desc = make_descriptor(cfg.family, cfg.q, cfg.n)
    if desc.params.field_size > FAST_FIELD_LIMIT and not cfg.slow_ok:
        raise SystemExit(
            f"{cfg.family}(q={cfg.q}, n={desc.n}) lives over "
            f"GF({desc.params.field_size}); rerun with --slow to allow it"
        )
    return desc


def _cache_path(cfg: RunConfig, desc: CurveDescriptor) -> Path:
    return cfg.cache_dir / f"{desc.family}_q{desc.q}_n{desc.n}.points"


def _places(cfg: RunConfig, desc: CurveDescriptor, refresh: bool = False):
    path = _cache_path(cfg, desc)
    if path.exists() and not refresh:
        try:
            return read_place_cache(desc, path), path, True
        except ValueError as exc:
            print(f"cache rejected: {exc}", file=sys.stderr)
    places = enumerate_affine_places(desc)
    write_place_cache(desc, places, path)
    return places, path, False


def _swiss(cfg: RunConfig, desc: CurveDescriptor):
    places, _, _ = _places(cfg, desc)
    return swiss_mod.build_swiss_data(desc, places)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_points(args) -> int:
    cfg = _config(args)
    desc = _descriptor(cfg)
    places, path, from_cache = _places(cfg, desc, refresh=args.refresh)
    total = len(places) + desc.params.infinity.count
    maximal = maximality_check(desc, total)
    print(f"family={desc.family} q={desc.q} n={desc.n} "
          f"field=GF({desc.params.field_size})")
    print(f"affine places: {len(places)}")
    print(f"infinite places: {desc.params.infinity.count}")
    print(f"total: {total} expected: {desc.params.expected_places}")
    print(f"maximal: {str(maximal).lower()}")
    print(f"cache: {path}")
    print(f"cache {'hit' if from_cache else 'built'}", file=sys.stderr)
    return 0 if maximal and total == desc.params.expected_places else 1


def cmd_swiss(args) -> int:
    cfg = _config(args)
    desc = _descriptor(cfg)
    data = _swiss(cfg, desc)
    report = swiss_mod.swiss_report(data)
    print(json.dumps(report, indent=2, sort_keys=True))
    ok = swiss_mod.verify_closed_forms(data)
    cert = swiss_mod.simple_zero_certificate(data)
    if not ok:
        print("closed-form cross-check FAILED", file=sys.stderr)
    if not cert.ok:
        print("simple-zero certificate FAILED", file=sys.stderr)
    return 0 if ok and cert.ok else 1


def cmd_basis(args) -> int:
    cfg = _config(args)
    desc = _descriptor(cfg)
    G = DivisorSpec(args.s, desc.params.infinity.count)
    if args.select:
        data = _swiss(cfg, desc)
        monos, _ = select_basis(data, G)
        kind = "basis"
    else:
        monos = candidate_monomials(desc, G)
        kind = "candidates"
    print(f"# family={desc.family} q={desc.q} n={desc.n} s={args.s} "
          f"deg_G={G.degree} {kind}={len(monos)}")
    for mono in monos:
        print(" ".join(str(e) for e in mono.exponents) + f" : {mono.pole_order}")
    return 0


def cmd_code(args) -> int:
    cfg = _config(args)
    desc = _descriptor(cfg)
    data = _swiss(cfg, desc)
    code = codes.build_code(data, DivisorSpec(args.s, data.r))
    if args.out:
        codes.write_matrix_file(code, Path(args.out))
        print(f"wrote [{code.N},{code.k}] generator matrix to {args.out}")
        print(f"designed distance >= {code.designed_distance}")
        if args.min_weight:
            res = codes.min_weight(code, mode=args.min_weight, seed=cfg.seed)
            print(f"min weight: {res.weight} ({res.certificate}, "
                  f"{res.codewords} codewords)")
    else:
        k, n = code.generator.shape
        print(f"{code.ctx.p} {code.ctx.k} {n} {k}")
        for row in code.generator:
            print(" ".join(str(int(v)) for v in row))
    return 0


def cmd_quantum_table(args) -> int:
    cfg = _config(args)
    rows = quantum.theorem_table(cfg.family, cfg.q, cfg.n)
    if args.s_range:
        lo, hi = (int(t) for t in args.s_range.split(":"))
        rows = [r for r in rows if lo <= r.s <= hi]
    if not rows:
        print("empty s-range", file=sys.stderr)
        return 1
    if args.gv:
        if cfg.jobs > 1:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                results = list(pool.map(
                    quantum.gv_check,
                    *zip(*((r.alphabet, r.N, r.k, r.d_bound) for r in rows))))
            rows = [replace(r, gv_verdict=res.verdict,
                            gv_certificate=res.certificate)
                    for r, res in zip(rows, results)]
        else:
            rows = [quantum.with_gv(r) for r in rows]
    if args.verify:
        desc = _descriptor(cfg)
        data = _swiss(cfg, desc)
        quantum.verify_table(data, rows)
        print(f"# verified rows: {len(rows)}", file=sys.stderr)
        if args.boundary_probe:
            s_bad = quantum.orthogonality_boundary(data, probe=args.boundary_probe)
            where = f"s={s_bad}" if s_bad else f"none within {args.boundary_probe}"
            print(f"# first non-self-orthogonal s past s_max: {where}",
                  file=sys.stderr)
    if cfg.family == "ggk2":
        print("# note: ggk2 alphabets are 2^(2n) per tower parameter n",
              file=sys.stderr)
    if args.format == "json":
        payload = [dict(family=r.family, q=r.q, n=r.n, s=r.s, N=r.N, k=r.k,
                        d_bound=r.d_bound, d_kind=r.d_kind, pure=r.pure,
                        singleton_defect=r.singleton_defect,
                        relative_defect=round(r.relative_defect, 8),
                        gv_verdict=r.gv_verdict, gv_certificate=r.gv_certificate)
                   for r in rows]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        sys.stdout.write(quantum.rows_to_csv(rows))
    return 0


def cmd_gv_check(args) -> int:
    res = quantum.gv_check(args.alphabet, args.length, args.dim, args.distance,
                           force_full=args.force_full)
    line = f"verdict: {res.verdict} certificate: {res.certificate}"
    if res.dominant_agrees is not None:
        line += f" dominant_agrees: {str(res.dominant_agrees).lower()}"
    print(line)
    return 0


# ---------------------------------------------------------------------------

def _add_instance_args(sub, need_family=True):
    if need_family:
        sub.add_argument("--family", required=True,
                         choices=["gk", "ggs", "abq", "ggk2"])
        sub.add_argument("--q", type=int, required=True)
        sub.add_argument("--n", type=int, default=None,
                         help="tower parameter (odd; gk fixes n = 3)")
    sub.add_argument("--cache-dir", default=None,
                     help="override $SWISSAG_CACHE_DIR")
    sub.add_argument("--slow", action="store_true",
                     help="allow instances over fields larger than GF(64)")
    sub.add_argument("--jobs", type=int, default=1,
                     help="parallel workers for independent row checks")
    sub.add_argument("--seed", type=int, default=20240601,
                     help="seed for sampled procedures")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swissag",
        description="Self-orthogonal evaluation codes on maximal curves "
                    "and their stabilizer quantum parameters.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("points", help="enumerate and cache rational places")
    _add_instance_args(p)
    p.add_argument("--refresh", action="store_true", help="rebuild the cache")
    p.set_defaults(func=cmd_points)

    p = subs.add_parser("swiss", help="divisor package report (JSON)")
    _add_instance_args(p)
    p.set_defaults(func=cmd_swiss)

    p = subs.add_parser("basis", help="monomial candidates / selected basis")
    _add_instance_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--select", action="store_true",
                   help="run rank selection instead of listing candidates")
    p.set_defaults(func=cmd_basis)

    p = subs.add_parser("code", help="emit a generator matrix")
    _add_instance_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out", default=None, help="matrix file path")
    p.add_argument("--min-weight", choices=["exact", "sampled"], default=None,
                   help="also report the minimum weight (requires --out)")
    p.set_defaults(func=cmd_code)

    p = subs.add_parser("quantum-table", help="stabilizer parameter table")
    _add_instance_args(p)
    p.add_argument("--s-range", default=None, metavar="LO:HI")
    p.add_argument("--verify", action="store_true",
                   help="build every code in range and cross-check")
    p.add_argument("--gv", action="store_true",
                   help="attach Gilbert-Varshamov verdicts")
    p.add_argument("--boundary-probe", type=int, default=0,
                   help="with --verify: probe s past s_max (reported as data)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_quantum_table)

    p = subs.add_parser("gv-check", help="one Gilbert-Varshamov verdict")
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--distance", type=int, required=True)
    p.add_argument("--force-full", action="store_true",
                   help="always evaluate the full sum")
    _add_instance_args(p, need_family=False)
    p.set_defaults(func=cmd_gv_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
