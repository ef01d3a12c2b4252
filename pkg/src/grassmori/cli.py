"""Command-line front end: ``grassmori <subcommand> [options]``.

Exit codes: 0 success, 2 usage error, 3 unsupported configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from . import fano, grassmann, orbits, sbld
from .exactlin import as_rational
from .lattice import BlowupConfig, CurveClass, DivisorClass

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

FAMILIES = ("projective", "quadric", "cubic", "y22", "g14", "grassmannian")
TWO_POINT_TABLES = ("two-point", "5.6")
MANY_POINT_TABLES = ("many-point", "5.10")


class Unsupported(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("GRASSMORI_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _divisor(text: str) -> DivisorClass:
    """``a,c1,...,ck`` -> a H + c1 E1 + ... (signs as typed)."""
    try:
        parts = [as_rational(p) for p in text.split(",")]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"malformed divisor {text!r}: {exc}")
    if len(parts) < 2:
        raise argparse.ArgumentTypeError("divisor needs the H coefficient and at least one E coefficient")
    return DivisorClass(parts[0], tuple(-c for c in parts[1:]))


# -- rendering -------------------------------------------------------------------------

def _emit(payload, fmt: str, rows=None, columns=None):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    if rows is not None:
        widths = [max(len(str(c)), *(len(str(r[i])) for r in rows)) if rows else len(str(c))
                  for i, c in enumerate(columns)]
        print("  ".join(str(c).ljust(w) for c, w in zip(columns, widths)).rstrip())
        for r in rows:
            print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())
        return
    _emit_flat(payload)


def _emit_flat(payload, prefix=""):
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            _emit_flat(value, prefix + key + ".")
        else:
            if isinstance(value, list):
                value = " ".join(json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else str(v)
                                 for v in value)
            print(f"{prefix}{key}: {value}")


def _index(args) -> grassmann.GrassmannIndex:
    try:
        return grassmann.GrassmannIndex(args.r, args.n)
    except ValueError as exc:
        raise Unsupported(str(exc))


# -- subcommands -------------------------------------------------------------------------

def _config(args) -> BlowupConfig:
    fam, n, k = args.family, args.n, args.k
    try:
        if fam == "projective":
            return BlowupConfig.projective_space(n, k)
        if fam == "quadric":
            return BlowupConfig.quadric(n, k)
        if fam == "cubic":
            return BlowupConfig.cubic(n, k)
        if fam == "y22":
            return BlowupConfig.y22(n, k)
        if fam == "g14":
            return BlowupConfig.g14_section(args.c, k)
        if args.r is None:
            raise Unsupported("grassmannian needs --r")
        return BlowupConfig.grassmannian(args.r, n, k)
    except ValueError as exc:
        raise Unsupported(str(exc))


def cmd_classify(args) -> int:
    cfg = _config(args)
    verdict = fano.classify(cfg)
    payload = {"config": cfg.to_json(), "label": cfg.label(), **verdict.to_json()}
    _emit(payload, args.output)
    return EXIT_OK


def _complexity_payload(g, k, args) -> dict:
    try:
        report = orbits.complexity(g, k, args.seed, args.samples, args.bound)
    except orbits.UnsupportedConfiguration as exc:
        raise Unsupported(str(exc))
    return report.to_json()


def _two_point_grid(args) -> list[dict]:
    out = []
    for r in range(1, 5):
        for n in range(2 * r + 1, 17):
            out.append(_complexity_payload(grassmann.GrassmannIndex(r, n), 2, args))
    return out


def _many_point_grid(args) -> list[dict]:
    cells = [(1, n, 3) for n in range(5, 11)] + [(2, 8, 3)] + [(2, n, 3) for n in range(9, 13)]
    cells += [(1, n, 4) for n in range(7, 11)]
    return [_complexity_payload(grassmann.GrassmannIndex(r, n), k, args) for r, n, k in cells]


_REPORT_COLUMNS = ("r", "n", "k", "complexity", "exact", "orbit_dim", "algebra_dim")


def _emit_reports(reports: list[dict], fmt: str, name: str):
    if fmt == "json":
        _emit({"table": name, "rows": reports}, fmt)
    else:
        _emit(None, fmt, [[rep[c] for c in _REPORT_COLUMNS] for rep in reports], _REPORT_COLUMNS)


def cmd_complexity(args) -> int:
    if args.table:
        name = "two-point" if args.table in TWO_POINT_TABLES else "many-point"
        grid = _two_point_grid(args) if name == "two-point" else _many_point_grid(args)
        _emit_reports(grid, args.output, name)
        return EXIT_OK
    if args.r is None or args.n is None or args.k is None:
        raise _UsageError("complexity needs --r, --n and --k (or --table)")
    _emit(_complexity_payload(_index(args), args.k, args), args.output)
    return EXIT_OK


def cmd_spherical(args) -> int:
    g = _index(args)
    payload = _complexity_payload(g, args.k, args)
    out = {"r": g.r, "n": g.n, "k": args.k, "spherical": payload["complexity"] == 0 and payload["exact"],
           "complexity": payload["complexity"], "exact": payload["exact"], "seed": args.seed,
           "mds": orbits.mds_verdict(g, args.k, args.seed, args.samples)}
    _emit(out, args.output)
    return EXIT_OK


def cmd_effcone(args) -> int:
    g = _index(args)
    try:
        cone = orbits.effective_cone_catalog(g, args.k)
    except orbits.UnsupportedConfiguration as exc:
        raise Unsupported(str(exc))
    rays = [_ray_json(v) for v in cone.extremal_rays()]
    _emit({"r": g.r, "n": g.n, "k": args.k, "rays": rays}, args.output)
    return EXIT_OK


def _ray_json(v) -> dict:
    return DivisorClass(v[0], tuple(v[1:])).to_json() | {"text": str(DivisorClass(v[0], tuple(v[1:])))}


def _curve_ray_json(v) -> dict:
    c = CurveClass(v[0], tuple(v[1:]))
    return c.to_json() | {"text": str(c)}


def cmd_cones(args) -> int:
    g = _index(args)
    suite = sbld.cone_suite(g)
    payload = {"r": g.r, "n": g.n}
    for name in ("Eff", "Nef", "Mov"):
        payload[name] = [_ray_json(v) for v in getattr(suite, name).extremal_rays()]
    for name in ("NE", "mov"):
        payload[name] = [_curve_ray_json(v) for v in getattr(suite, name).extremal_rays()]
    if args.output == "json":
        _emit(payload, "json")
    else:
        for name in ("Eff", "Nef", "Mov", "NE", "mov"):
            print(f"{name}: <{', '.join(ray['text'] for ray in payload[name])}>")
    return EXIT_OK


def cmd_sbld(args) -> int:
    g = _index(args)
    d = args.D
    if d.k != 1:
        raise _UsageError("the decomposition takes one E coefficient")
    try:
        ch = sbld.locate(g, d)
    except ValueError as exc:
        raise _UsageError(str(exc))
    payload = {"r": g.r, "n": g.n, "D": d.to_json(), "text": str(d), **sbld.chamber_to_json(g, ch)}
    _emit(payload, args.output)
    return EXIT_OK


def cmd_schubert(args) -> int:
    g = _index(args)
    if not 0 <= args.m <= g.r + 1:
        raise _UsageError("m must lie in [0, r+1]")
    dim = grassmann.schubert_dimension(g, args.m, verify=args.verify, seed=args.seed)
    payload = {"r": g.r, "n": g.n, "m": args.m, "dim": dim, "is_divisor": dim == g.dim - 1,
               "verified": bool(args.verify)}
    _emit(payload, args.output)
    return EXIT_OK


def cmd_osculate(args) -> int:
    g = _index(args)
    if args.m < 0:
        raise _UsageError("m must be non-negative")
    p = grassmann.coordinate_point(g, range(g.r + 1))
    dim = grassmann.osculating_dimension(g, p, args.m)
    expected = comb(g.dim + args.m, g.dim) - 1
    payload = {"r": g.r, "n": g.n, "m": args.m, "dim": dim, "N": g.N, "delta": expected - dim}
    _emit(payload, args.output)
    return EXIT_OK


def cmd_multiplicity(args) -> int:
    g = _index(args)
    if not 0 <= args.j <= g.r + 1:
        raise _UsageError("j must lie in [0, r+1]")
    center = grassmann.borel_centers(g)[args.j]
    form = grassmann.schubert_divisor(g, center)
    p = grassmann.coordinate_point(g, range(g.r + 1))
    mult = grassmann.multiplicity_at(g, form, p)
    p0 = grassmann.borel_base_point(g)
    payload = {"r": g.r, "n": g.n, "j": args.j, "multiplicity": mult,
               "class": {"H": "1", "E": [str(mult)]}, "vanishes_at_p0": form(p0) == 0}
    _emit(payload, args.output)
    return EXIT_OK


def _fano_rows() -> list[dict]:
    configs = []
    for k in range(0, 11):
        configs.append(BlowupConfig.projective_space(2, k))
    for n in (3, 4, 5):
        configs += [BlowupConfig.projective_space(n, k) for k in range(0, 10)]
    configs += [BlowupConfig.quadric(2, k) for k in range(0, 10)]
    for n in (3, 4, 5):
        configs += [BlowupConfig.quadric(n, k) for k in range(0, 9)]
    for n in (3, 4, 5):
        configs += [BlowupConfig.cubic(n, k) for k in range(0, 5)]
        configs += [BlowupConfig.y22(n, k) for k in range(0, 6)]
    for c in range(4):
        configs += [BlowupConfig.g14_section(c, k) for k in range(0, 7)]
    rows = []
    for cfg in configs:
        verdict = fano.classify(cfg)
        rows.append({"label": cfg.label(), "n": cfg.n, "k": cfg.k, "status": verdict.status})
    return rows


def cmd_table(args) -> int:
    name = args.name
    if name == "fano":
        rows = _fano_rows()
        if args.output == "json":
            _emit({"table": "fano", "rows": rows}, "json")
        else:
            cols = ("label", "n", "k", "status")
            _emit(None, "table", [[r[c] for c in cols] for r in rows], cols)
        return EXIT_OK
    if name in TWO_POINT_TABLES:
        _emit_reports(_two_point_grid(args), args.output, "two-point")
    else:
        _emit_reports(_many_point_grid(args), args.output, "many-point")
    return EXIT_OK


# -- parser --------------------------------------------------------------------------------

class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "table"), default="table")
    common.add_argument("--seed", type=int, default=_default_seed(),
                        help="seed for random general points (default: $GRASSMORI_SEED or 0)")
    common.add_argument("--samples", type=_positive, default=orbits.DEFAULT_SAMPLES)
    common.add_argument("--bound", type=_positive, default=orbits.DEFAULT_BOUND,
                        help="coefficient bound for random points")

    parser = argparse.ArgumentParser(prog="grassmori",
                                     description="Blow-ups of prime Fano varieties and Grassmannians at general points.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="Fano / weak Fano verdict for X_k")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, help="dimension, or the ambient index for grassmannian")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--c", type=int, default=0, help="codimension of the linear section for g14")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("complexity", parents=[common], help="complexity of G(r,n)_k")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--table", choices=TWO_POINT_TABLES + MANY_POINT_TABLES)
    p.set_defaults(func=cmd_complexity)

    for name, func, help_text in (
        ("spherical", cmd_spherical, "is G(r,n)_k spherical"),
        ("effcone", cmd_effcone, "effective cone of a spherical G(r,n)_k"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("cones", parents=[common], help="Eff, Nef, Mov, NE and mov of G(r,n)_1")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_cones)

    p = sub.add_parser("sbld", parents=[common], help="stable base locus chamber of a divisor on G(r,n)_1")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--D", type=_divisor, required=True, help="a,c for the class aH + cE, e.g. 1,-2")
    p.set_defaults(func=cmd_sbld)

    p = sub.add_parser("schubert", parents=[common], help="dimension of the Schubert locus R_m")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="recompute by a Jacobian rank")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("osculate", parents=[common], help="dimension of the m-th osculating space")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_osculate)

    p = sub.add_parser("multiplicity", parents=[common], help="multiplicity of the divisor D_j at the blown-up point")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("table", parents=[common], help="regenerate a batch table")
    p.add_argument("name", choices=("fano",) + TWO_POINT_TABLES + MANY_POINT_TABLES)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify" and args.n is None and args.family != "g14":
        parser.error("classify needs --n")
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.error(str(exc))
    except Unsupported as exc:
        print(f"grassmori: unsupported configuration: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
